#pragma once

#include <compare>
#include <string_view>
#include <vector>

#include "positroid/subset.hpp"

namespace positroid {

/// The cyclic interval [first, last] = {x : x <=_first last}.
/// [a, a] is a singleton; [a, a-1] is the whole ground set.
struct CyclicInterval {
  int first = 1;
  int last = 1;

  auto operator<=>(const CyclicInterval&) const = default;
};

/// Result of splitting a subset into maximal cyclic intervals.
struct Decomposition {
  enum class Kind { kEmpty, kFull, kProper };

  Kind kind = Kind::kEmpty;
  /// Maximal, pairwise disjoint, ordered by left endpoint in natural order.
  /// Only populated for kProper.
  std::vector<CyclicInterval> intervals;

  bool proper() const { return kind == Kind::kProper; }
  int count() const { return static_cast<int>(intervals.size()); }
};

/// The ground set {1, ..., n} with its family of cyclically shifted orders.
class GroundSet {
 public:
  /// Throws InputError unless 1 <= n <= 64.
  explicit GroundSet(int n);

  int size() const { return n_; }
  Subset all() const { return Subset::first(n_); }

  bool valid_label(int x) const { return x >= 1 && x <= n_; }
  void check_label(int x) const;
  void check_subset(Subset s) const;
  void check_interval(CyclicInterval iv) const;

  int next(int x) const { return x == n_ ? 1 : x + 1; }
  int prev(int x) const { return x == 1 ? n_ : x - 1; }

  /// Position of x in the order <_i, counting from 0 (i itself).
  int offset(int i, int x) const { return (x - i + n_) % n_; }

  /// x <=_i y. Labels are range checked.
  bool cyclic_le(int i, int x, int y) const;
  bool cyclic_lt(int i, int x, int y) const { return offset(i, x) < offset(i, y); }

  Subset interval_members(CyclicInterval iv) const;
  Subset interval(int a, int b) const { return interval_members({a, b}); }
  /// (b, a): the complement of [a, b]. Empty when a = b + 1.
  Subset open_interval(int b, int a) const { return all() - interval(a, b); }
  /// [c, a): empty when c = a.
  Subset half_open(int c, int a) const { return c == a ? Subset{} : interval(c, prev(a)); }
  int interval_length(CyclicInterval iv) const { return offset(iv.first, iv.last) + 1; }

  /// Members of s sorted by <_i.
  std::vector<int> ordered(Subset s, int i) const;
  /// Least / greatest member of a nonempty s under <_i.
  int least(Subset s, int i) const;
  int greatest(Subset s, int i) const;

  Decomposition decompose(Subset s) const;

  /// Union of the members of every interval in the list.
  Subset union_of(const std::vector<CyclicInterval>& intervals) const;

 private:
  int n_;
};

/// Gale order S <=_i T: sorting both by <_i, the j-th element of S is
/// <=_i the j-th element of T for every j. Throws InputError when |S| != |T|.
bool gale_le(const GroundSet& ground, int i, Subset s, Subset t);

/// Comma-separated labels and cyclic ranges, e.g. "1..3,8,9" or "13..2".
/// Whitespace is ignored; an empty string is the empty set. Throws
/// InputError on malformed tokens or labels outside the ground set.
Subset parse_subset(const GroundSet& ground, std::string_view text);

}  // namespace positroid
