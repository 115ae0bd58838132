#pragma once

#include <optional>
#include <vector>

#include "positroid/cyclic.hpp"
#include "positroid/positroid.hpp"

// Rank computations for positroids without fixed points. Every entry point
// throws FixedPointError when handed a permutation with fixed points.
namespace positroid {

/// rk([a,b]) = |I_a & [a,b]|.
int interval_rank(const Positroid& p, CyclicInterval iv);

/// Same value from the chord diagram: |[a,b]| minus the number of x in
/// [a,b] whose arc [pi^{-1}(x), x] lies inside [a,b].
int interval_rank_by_chords(const Positroid& p, CyclicInterval iv);

/// Fewest elements any basis has in the open interval (b,a): |I_a & (b,a)|.
int minelts(const Positroid& p, int b, int a);

/// Same value as the number of arcs [x, pi^{-1}(x)] contained in (b,a).
int minelts_by_chords(const Positroid& p, int b, int a);

/// Natural rank bound d - sum_i minelts((b_i, a_{i+1})) of a proper nonempty E.
int nbd(const Positroid& p, Subset e);

/// A partition of {1..k} into blocks, each block listed ascending and the
/// blocks ordered by their least member.
struct NonCrossingPartition {
  std::vector<std::vector<int>> parts;

  bool operator==(const NonCrossingPartition&) const = default;
};

/// No a<b<c<d with a,c in one block and b,d in another.
bool is_noncrossing(const NonCrossingPartition& partition);

inline constexpr int kMaxNonCrossingBlocks = 12;

/// Every non-crossing partition of {1..k}, each once. Throws CapacityError
/// for k > kMaxNonCrossingBlocks.
std::vector<NonCrossingPartition> enumerate_noncrossing_partitions(int k);

/// Sum over blocks T of nbd(E restricted to the intervals indexed by T).
/// Intervals are indexed from 1 in decompose() order. Throws InputError when
/// `partition` is not a partition of {1..k}.
int nbd_with_partition(const Positroid& p, Subset e, const NonCrossingPartition& partition);

/// One exchange J - {x} + {y}: x the <=_a-greatest element of (J - I_c) & (b,c),
/// y the <=_a-least element of (I_c - J) & [c,a). Returns nullopt when either
/// candidate set is empty or the exchanged set is not a basis. Throws
/// ContractError when a,b,c are not cyclically ordered, J is not a basis,
/// I_c & (b,c) is not inside J, or J & [c,a) is not inside I_c.
std::optional<Subset> transfer_step(const Positroid& p, Subset j, int a, int b, int c);

struct PushState {
  int step = 1;  ///< t
  Subset basis;  ///< H^t

  bool operator==(const PushState&) const = default;
};

struct PushResult {
  Subset basis;
  /// H^1, ..., H^k.
  std::vector<PushState> trace;
};

/// Starting from I_{a_1}, pushes elements across each gap (b_t, a_{t+1})
/// for t = 1..k-1 with single transfer steps. The returned basis meets E in
/// rk(E) elements. `first_interval` (0-based, in decompose() order) chooses
/// which interval plays the role of [a_1, b_1].
PushResult push_procedure(const Positroid& p, Subset e, int first_interval = 0);

enum class RankMethod {
  kPush,         ///< |H & E| from the push procedure
  kNonCrossing,  ///< min over non-crossing partitions of nbd_with_partition
};

/// rk(E) for any E; 0 for the empty set and d for the ground set.
int rank(const Positroid& p, Subset e, RankMethod method = RankMethod::kPush);

/// E together with every element whose addition keeps rank(E).
Subset closure(const Positroid& p, Subset e);

}  // namespace positroid
