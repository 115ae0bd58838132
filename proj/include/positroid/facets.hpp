#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "positroid/positroid.hpp"
#include "positroid/subset.hpp"

namespace positroid {

enum class Sense { kLe, kGe, kEq };

enum class InequalityKind {
  kRankBound,      ///< x_S <= rk(S)
  kNonnegativity,  ///< x_e >= 0
  kCardinality,    ///< x_1 + ... + x_n = d
};

/// sum_{e in support} x_e  <sense>  rhs
struct Inequality {
  Subset support;
  int rhs = 0;
  Sense sense = Sense::kLe;
  InequalityKind kind = InequalityKind::kRankBound;

  bool operator==(const Inequality&) const = default;
};

/// An H-representation. Inequalities are grouped nonnegativity first, then
/// rank bounds, each group sorted lexicographically by support.
struct FacetSystem {
  int n = 0;
  int d = 0;
  std::vector<Inequality> equalities;
  std::vector<Inequality> inequalities;

  bool operator==(const FacetSystem&) const = default;
};

enum class IndependentSystem {
  kInseparableFlats,           ///< the minimal system
  kIntervalFlatIntersections,  ///< all interval flats and their intersections
};

/// x_e >= 0 for every e, plus x_F <= rk(F) for every nonempty inseparable
/// flat F (or every nonempty intersection of interval flats).
FacetSystem independent_set_facets(const Positroid& p,
                                   IndependentSystem system = IndependentSystem::kInseparableFlats);

/// sum x = d together with x_[a,b] <= rk([a,b]) for every cyclic interval,
/// one line per distinct support. With `prune_dominated`, a bound x_S <= r
/// is dropped when some other bound x_T <= r' has S inside T and r' <= r,
/// and x_e >= 0 is emitted explicitly so the polytope is unchanged.
FacetSystem basis_polytope_system(const Positroid& p, bool prune_dominated = false);

/// Header "n d", then one "<le|ge|eq> <rhs> <labels...>" line per
/// constraint, equalities first. Every line ends with '\n'.
std::string to_hrep(const FacetSystem& system);
/// Inverse of to_hrep. Kinds are inferred: eq lines are cardinality,
/// "ge 0 e" lines nonnegativity, le lines rank bounds.
FacetSystem parse_hrep(std::string_view text);

/// The 0/1 point with the given support satisfies every constraint.
bool satisfies(const FacetSystem& system, Subset point);

enum class PolytopeMode { kIndependentSet, kBasis };

struct PointCheck {
  bool ok = true;
  std::uint64_t points = 0;
  /// First 0/1 point whose membership disagrees with the oracle.
  std::optional<Subset> counterexample;
};

inline constexpr int kMaxPointSweepSize = 20;

/// Sweeps all 2^n 0/1 points: independent-set mode requires
/// "satisfies <=> support independent", basis mode "satisfies <=> support is
/// a basis", with the oracle built from enumerate_bases.
PointCheck validate_01_points(const Positroid& p, const FacetSystem& system, PolytopeMode mode);

struct MinimalityWitness {
  Inequality removed;
  /// A half-integral point, stored doubled, that satisfies every other
  /// constraint but violates `removed`; nullopt when the search found none.
  std::optional<std::vector<int>> doubled_point;
};

/// For every rank bound x_S <= r, searches {0, 1/2, 1}-valued points
/// supported on S, then points with coordinates up to r + 1/2. Coordinates
/// outside S can be zero without loss, since all other rank bounds have
/// nonnegative coefficients.
std::vector<MinimalityWitness> probe_minimality(const FacetSystem& system);

}  // namespace positroid
