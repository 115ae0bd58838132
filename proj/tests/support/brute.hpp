#pragma once

// Slow reference implementations for tests. Sets are plain bitmasks over
// labels 1..n (bit x-1) and every routine works straight from a definition,
// sharing no code with the library.

#include <cstdint>
#include <string>
#include <vector>

namespace brute {

using Mask = std::uint64_t;

inline Mask bit(int x) { return Mask{1} << (x - 1); }
Mask mask_of(const std::vector<int>& labels);
std::vector<int> labels_of(Mask s);
int popcount(Mask s);
std::string show(Mask s);

/// Labels of s sorted so that k comes first: k < k+1 < ... < n < 1 < ... < k-1.
std::vector<int> cyclic_sorted(Mask s, int n, int k);
/// Elementwise comparison after sorting in the k-shifted order.
bool gale_leq(Mask s, Mask t, int n, int k);
/// {a, a+1, ..., b} walking around the circle.
Mask walk(int a, int b, int n);

/// Necklace of a fixed-point-free permutation (images[i-1] = pi(i)):
/// I_1 holds the values of anti-exceedances, then I_{k+1} = I_k - k + pi(k).
std::vector<Mask> necklace_by_steps(const std::vector<int>& images);
/// Every d-subset that is Gale-above I_j in the j-shifted order for all j.
std::vector<Mask> bases_from_necklace(int n, const std::vector<Mask>& necklace);

struct Matroid {
  int n = 0;
  std::vector<Mask> bases;

  int rank(Mask e) const;
  bool independent(Mask e) const;
  Mask closure(Mask e) const;
  bool flat(Mask e) const;
  bool separable(Mask e) const;
  std::vector<Mask> inseparable_flats() const;
  bool exchange_holds() const;
  bool dual_exchange_holds() const;
};

Matroid matroid_of(const std::vector<int>& images);

/// Every set partition of {1..k} (restricted growth strings), blocks sorted.
std::vector<std::vector<std::vector<int>>> set_partitions(int k);
/// No a < b < c < d with a, c in one block and b, d in another.
bool noncrossing_by_quadruples(const std::vector<std::vector<int>>& blocks);

/// Splitmix64-driven Fisher-Yates with rejection of fixed points.
std::vector<int> random_derangement(int n, std::uint64_t& state);
std::string perm_text(const std::vector<int>& images);

}  // namespace brute
