#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace positroid {

inline constexpr int kMaxGroundSize = 64;

/// Bit mask with the low `count` bits set; `count` may be 64.
constexpr std::uint64_t low_bits(int count) {
  return count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
}

/// A subset of the labels {1, ..., 64}. Label e lives in bit e-1.
///
/// Subset knows nothing about the ground set size; range checks against a
/// particular n happen in GroundSet.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}

  static Subset of(std::initializer_list<int> labels);
  static Subset of(std::span<const int> labels);
  static constexpr Subset singleton(int label) { return Subset(std::uint64_t{1} << (label - 1)); }
  static constexpr Subset first(int n) { return Subset(low_bits(n)); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int label) const { return (bits_ >> (label - 1)) & 1U; }
  constexpr bool is_subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }

  constexpr Subset with(int label) const { return Subset(bits_ | singleton(label).bits_); }
  constexpr Subset without(int label) const { return Subset(bits_ & ~singleton(label).bits_); }

  /// Smallest label in natural order; the set must be nonempty.
  constexpr int min_label() const { return std::countr_zero(bits_) + 1; }
  constexpr int max_label() const { return 64 - std::countl_zero(bits_); }

  /// Members in ascending natural order.
  std::vector<int> labels() const;

  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  constexpr Subset operator-(Subset o) const { return Subset(bits_ & ~o.bits_); }
  constexpr Subset operator^(Subset o) const { return Subset(bits_ ^ o.bits_); }
  constexpr Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }
  constexpr Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }
  constexpr Subset& operator-=(Subset o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const Subset&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the ascending label sequences ({1,2} < {1,2,5} < {1,3}).
/// This is the canonical sort order for every list of subsets the library emits.
constexpr bool lex_less(Subset a, Subset b) {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  // Both sequences agree below the lowest differing label e.
  const int e = std::countr_zero(diff);
  const std::uint64_t above = ~low_bits(e + 1);
  if ((a.bits() >> e) & 1U) {
    // a continues with e. b continues with something larger, or ends.
    return (b.bits() & above) != 0;
  }
  return (a.bits() & above) == 0;
}

struct LexLess {
  constexpr bool operator()(Subset a, Subset b) const { return lex_less(a, b); }
};

/// "1,2,3" (ascending, comma separated; empty string for the empty set).
std::string to_string(Subset s);

/// Calls `fn` on every submask of `s`, including the empty set and `s`.
template <typename Fn>
void for_each_submask(Subset s, Fn&& fn) {
  std::uint64_t sub = s.bits();
  while (true) {
    fn(Subset(sub));
    if (sub == 0) break;
    sub = (sub - 1) & s.bits();
  }
}

}  // namespace positroid

template <>
struct std::hash<positroid::Subset> {
  std::size_t operator()(positroid::Subset s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};
