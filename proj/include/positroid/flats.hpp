#pragma once

#include <vector>

#include "positroid/cyclic.hpp"
#include "positroid/positroid.hpp"

// Flat criteria read off the chord diagram of a fixed-point-free decorated
// permutation. The covering objects are the arcs [x, pi^{-1}(x)].
namespace positroid {

struct BridgeInterval {
  int x = 1;
  CyclicInterval interval;  ///< [x, pi^{-1}(x)]
};

std::vector<BridgeInterval> bridge_intervals(const Positroid& p);

/// Elements of the complement of `e` lying in some arc that misses `e`.
Subset covered_complement(const Positroid& p, Subset e);

/// Every y in (b,a) lies in an arc contained in (b,a). The whole ground set
/// counts as a flat.
bool is_interval_flat(const Positroid& p, CyclicInterval iv);

struct IntervalFlatCover {
  bool covered = false;
  /// The interval flats [a_i, b_{i-1}] whose intersection is E, in
  /// decompose() order. Empty when `covered` is false.
  std::vector<CyclicInterval> witnesses;
};

/// Complement of E covered by arcs disjoint from E, i.e. E is an
/// intersection of interval flats. E must be nonempty.
IntervalFlatCover is_intersection_of_interval_flats(const Positroid& p, Subset e);

/// Separability with ranks from the push procedure.
bool is_separable(const Positroid& p, Subset e);

/// Flatness of an inseparable E: the complement is covered by arcs missing
/// E. Throws ContractError when E is separable.
bool is_flat_inseparable_criterion(const Positroid& p, Subset e);

struct FlatnessVerdict {
  bool flat = false;
  /// True when the arc criterion decided; false when E is separable and the
  /// answer came from comparing E with its closure.
  bool by_criterion = false;
};

FlatnessVerdict is_flat(const Positroid& p, Subset e);

struct FlatRecord {
  Subset members;
  int rank = 0;
  bool inseparable = true;

  bool operator==(const FlatRecord&) const = default;
};

inline constexpr int kMaxFlatEnumerationSize = 20;

/// Proper intervals that are flats, sorted by (first, last).
std::vector<CyclicInterval> interval_flats(const Positroid& p);

/// Nonempty intersections of interval flats (the sets passing the cover
/// test), sorted lexicographically.
std::vector<Subset> interval_flat_intersections(const Positroid& p);

/// Every nonempty inseparable flat with its rank, sorted lexicographically
/// by members. Throws CapacityError for n > kMaxFlatEnumerationSize.
std::vector<FlatRecord> enumerate_inseparable_flats(const Positroid& p);

}  // namespace positroid
