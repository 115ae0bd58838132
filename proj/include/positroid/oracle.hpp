#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "positroid/cyclic.hpp"
#include "positroid/subset.hpp"

namespace positroid {

class Positroid;

/// A matroid given by its explicit list of bases.
///
/// Every query is answered by scanning that list, so the results depend on
/// nothing but the definitions. This is the reference the fast positroid
/// algorithms are tested against; it is not meant to be fast.
class OracleMatroid {
 public:
  /// Validates: bases nonempty, distinct, equal cardinality, inside 1..n,
  /// and (when there are at most kExchangeCheckLimit bases) both exchange
  /// axioms. Throws InputError on failure.
  OracleMatroid(int n, std::vector<Subset> bases);

  /// Bases of `p` via enumerate_bases. Skips the exchange check.
  static OracleMatroid from_positroid(const Positroid& p);

  static constexpr std::size_t kExchangeCheckLimit = 2000;

  int size() const { return ground_.size(); }
  int rank() const { return rank_; }
  const GroundSet& ground() const { return ground_; }
  /// Sorted by bit pattern.
  const std::vector<Subset>& bases() const { return bases_; }
  bool is_basis(Subset b) const;
  bool is_independent(Subset a) const;

 private:
  struct Unchecked {};
  OracleMatroid(int n, std::vector<Subset> bases, Unchecked);
  friend OracleMatroid oracle_dual(const OracleMatroid& m);

  GroundSet ground_;
  std::vector<Subset> bases_;
  int rank_ = 0;
};

/// max |B & A| over the bases.
int oracle_rank(const OracleMatroid& m, Subset a);

/// A basis attaining oracle_rank(a).
Subset oracle_max_intersection_basis(const OracleMatroid& m, Subset a);

/// A together with every e whose addition keeps the rank.
Subset oracle_closure(const OracleMatroid& m, Subset a);

bool oracle_is_flat(const OracleMatroid& m, Subset a);

/// Size guard for the 2^n sweeps (all flats, rank tables).
inline constexpr int kMaxSweepSize = 20;
/// Size guard for the 2^|A| bipartition search.
inline constexpr int kMaxBipartitionSize = 20;

/// Every flat, sorted lexicographically. Throws CapacityError for n > kMaxSweepSize.
std::vector<Subset> oracle_all_flats(const OracleMatroid& m);

/// Some bipartition A = E1 + E2 into nonempty parts has rk(E1) + rk(E2) = rk(A).
bool oracle_is_separable(const OracleMatroid& m, Subset a);

/// Bases are the complements.
OracleMatroid oracle_dual(const OracleMatroid& m);

/// Basis exchange and dual basis exchange over all pairs and pivots.
bool check_exchange_axioms(const OracleMatroid& m);
bool exchange_axioms_hold(int n, std::span<const Subset> bases);

/// rk(A) for every A, indexed by A.bits(). Built from the basis list by
/// marking every independent set and then taking the largest independent
/// subset, which agrees with oracle_rank everywhere.
std::vector<std::uint8_t> oracle_rank_table(const OracleMatroid& m);

/// Nonempty flats admitting no additive bipartition, sorted lexicographically.
std::vector<Subset> oracle_inseparable_flats(const OracleMatroid& m);

/// Separability answered from a rank table.
bool separable_from_table(std::span<const std::uint8_t> ranks, Subset a);

}  // namespace positroid
