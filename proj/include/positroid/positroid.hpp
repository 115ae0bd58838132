#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "positroid/cyclic.hpp"
#include "positroid/subset.hpp"

namespace positroid {

/// Color of a fixed point. kNone marks a non-fixed position.
enum class Decoration : std::uint8_t { kNone, kWhite, kBlack };

/// A bijection of {1..n} whose fixed points are colored white (loop) or
/// black (coloop).
class DecoratedPermutation {
 public:
  /// `images[i-1]` is pi(i). `decorations` must be kWhite/kBlack exactly at
  /// fixed points; an empty `decorations` is accepted for fixed-point-free
  /// input. Throws InputError otherwise.
  explicit DecoratedPermutation(std::vector<int> images, std::vector<Decoration> decorations = {});

  /// Whitespace separated tokens, token i is pi(i), fixed points suffixed
  /// with `w` or `b`: "2 8 6 7 9 4 5 14 13 3 10 11 1 12", "1b 3 2".
  static DecoratedPermutation parse(std::string_view text);

  int size() const { return static_cast<int>(images_.size()); }
  int image(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  int preimage(int x) const { return inverse_[static_cast<std::size_t>(x - 1)]; }
  Decoration decoration(int i) const { return decorations_[static_cast<std::size_t>(i - 1)]; }
  bool is_fixed_point(int i) const { return image(i) == i; }
  bool has_fixed_points() const;

  const std::vector<int>& images() const { return images_; }

  /// Canonical single-line text form, the inverse of parse().
  std::string to_string() const;

  bool operator==(const DecoratedPermutation&) const = default;

 private:
  std::vector<int> images_;
  std::vector<int> inverse_;
  std::vector<Decoration> decorations_;
};

/// (I_1, ..., I_n): d-subsets obeying the cyclic step condition.
class GrassmannNecklace {
 public:
  /// `sets[k-1]` is I_k. Validates cardinality at every index and the step
  /// condition at every index; throws NecklaceError naming the first
  /// failing index.
  explicit GrassmannNecklace(std::vector<Subset> sets);

  /// Space separated brace groups, "{1,2} {2,3} {3,4} {4,1}".
  static GrassmannNecklace parse(std::string_view text);

  int size() const { return static_cast<int>(sets_.size()); }
  int rank() const { return d_; }
  Subset at(int k) const { return sets_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<Subset>& sets() const { return sets_; }

  /// Each I_k listed in the order <_k, e.g. "{1,2} {2,3} {3,4} {4,1}".
  std::string to_string() const;

  bool operator==(const GrassmannNecklace&) const = default;

 private:
  std::vector<Subset> sets_;
  int d_ = 0;
};

/// I_k = {x : x <_k pi^{-1}(x)} together with the black fixed points.
GrassmannNecklace necklace_from_permutation(const DecoratedPermutation& perm);

/// Two-sided inverse of necklace_from_permutation: I_{i+1} = I_i - {i} + {j}
/// with j != i gives pi(i) = j; a repeated set gives a fixed point at i,
/// black when i is in I_i and white otherwise.
DecoratedPermutation permutation_from_necklace(const GrassmannNecklace& necklace);

struct LoopsAndColoops {
  Subset loops;
  Subset coloops;
};

LoopsAndColoops detect_loops_coloops(const DecoratedPermutation& perm);

/// A positroid held as a consistent (decorated permutation, necklace) pair.
class Positroid {
 public:
  explicit Positroid(DecoratedPermutation perm);
  explicit Positroid(const GrassmannNecklace& necklace);

  static Positroid parse(std::string_view permutation_text) {
    return Positroid(DecoratedPermutation::parse(permutation_text));
  }

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  /// d, the rank of the whole matroid.
  int rank() const { return necklace_.rank(); }

  const DecoratedPermutation& permutation() const { return perm_; }
  const GrassmannNecklace& necklace() const { return necklace_; }
  Subset necklace_at(int k) const { return necklace_.at(k); }
  int image(int x) const { return perm_.image(x); }
  int preimage(int x) const { return perm_.preimage(x); }

  bool has_fixed_points() const { return perm_.has_fixed_points(); }

  /// Throws FixedPointError when the permutation has fixed points. `what`
  /// names the operation in the message.
  void require_fixed_point_free(std::string_view what) const;

 private:
  DecoratedPermutation perm_;
  GrassmannNecklace necklace_;
  GroundSet ground_;
};

/// B >=_j I_j for every j. Throws InputError when |B| != d.
bool is_basis(const Positroid& p, Subset b);

/// Size guard for enumerate_bases: C(n, d) must not exceed this.
inline constexpr std::uint64_t kMaxBasisCandidates = 1'000'000;

/// All bases in lexicographic order. Throws CapacityError beyond the guard.
std::vector<Subset> enumerate_bases(const Positroid& p);

/// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial(int n, int k);

/// Uniformly random fixed-point-free permutation of {1..n} (n >= 2) by
/// rejection sampling shuffles. Deterministic for a given (n, seed).
DecoratedPermutation random_derangement(int n, std::uint64_t seed);

}  // namespace positroid
