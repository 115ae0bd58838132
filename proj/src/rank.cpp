#include "positroid/rank.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "positroid/error.hpp"

namespace positroid {

namespace {

Decomposition proper_decomposition(const Positroid& p, Subset e, const char* what) {
  Decomposition dec = p.ground().decompose(e);
  if (!dec.proper()) {
    throw InputError(std::string(what) + " needs a proper nonempty subset, got {" + to_string(e) + "}");
  }
  return dec;
}

// Arc [from, to] of the chord diagram.
Subset arc(const Positroid& p, int from, int to) { return p.ground().interval(from, to); }

}  // namespace

int interval_rank(const Positroid& p, CyclicInterval iv) {
  p.require_fixed_point_free("interval_rank");
  return (p.necklace_at(iv.first) & p.ground().interval_members(iv)).size();
}

int interval_rank_by_chords(const Positroid& p, CyclicInterval iv) {
  p.require_fixed_point_free("interval_rank_by_chords");
  const Subset members = p.ground().interval_members(iv);
  if (members == p.ground().all()) return p.rank();
  int covered = 0;
  for (int x : members.labels()) {
    if (arc(p, p.preimage(x), x).is_subset_of(members)) ++covered;
  }
  return members.size() - covered;
}

int minelts(const Positroid& p, int b, int a) {
  p.require_fixed_point_free("minelts");
  return (p.necklace_at(a) & p.ground().open_interval(b, a)).size();
}

int minelts_by_chords(const Positroid& p, int b, int a) {
  p.require_fixed_point_free("minelts_by_chords");
  const Subset gap = p.ground().open_interval(b, a);
  int count = 0;
  for (int x : gap.labels()) {
    if (arc(p, x, p.preimage(x)).is_subset_of(gap)) ++count;
  }
  return count;
}

int nbd(const Positroid& p, Subset e) {
  const Decomposition dec = proper_decomposition(p, e, "nbd");
  const auto& ivs = dec.intervals;
  int bound = p.rank();
  for (std::size_t i = 0; i < ivs.size(); ++i) {
    const CyclicInterval& next = ivs[(i + 1) % ivs.size()];
    bound -= minelts(p, ivs[i].last, next.first);
  }
  return bound;
}

bool is_noncrossing(const NonCrossingPartition& partition) {
  const auto& parts = partition.parts;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (i == j) continue;
      // a < b < c < d with a, c in block i and b, d in block j.
      for (int a : parts[i]) {
        for (int c : parts[i]) {
          if (c <= a) continue;
          for (int b : parts[j]) {
            if (b <= a || b >= c) continue;
            for (int d : parts[j]) {
              if (d > c) return false;
            }
          }
        }
      }
    }
  }
  return true;
}

namespace {

void extend_partitions(int element, int k, std::vector<std::vector<int>>& blocks,
                       std::vector<NonCrossingPartition>& out) {
  if (element > k) {
    out.push_back({blocks});
    return;
  }
  // Put `element` into each existing block that keeps the partition
  // non-crossing, then into a new block of its own.
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const int last = blocks[i].back();
    bool crosses = false;
    // The new arc (last, element) crosses another block exactly when that
    // block has members on both sides of `last`.
    for (std::size_t j = 0; j < blocks.size() && !crosses; ++j) {
      if (j == i) continue;
      const auto& other = blocks[j];
      const bool inside = std::ranges::any_of(other, [&](int v) { return v > last; });
      const bool outside = std::ranges::any_of(other, [&](int v) { return v < last; });
      crosses = inside && outside;
    }
    if (crosses) continue;
    blocks[i].push_back(element);
    extend_partitions(element + 1, k, blocks, out);
    blocks[i].pop_back();
  }
  blocks.push_back({element});
  extend_partitions(element + 1, k, blocks, out);
  blocks.pop_back();
}

}  // namespace

std::vector<NonCrossingPartition> enumerate_noncrossing_partitions(int k) {
  if (k < 1) throw InputError("non-crossing partitions need k >= 1");
  if (k > kMaxNonCrossingBlocks) {
    throw CapacityError("non-crossing partitions of " + std::to_string(k) +
                        " blocks exceed the limit of " + std::to_string(kMaxNonCrossingBlocks));
  }
  std::vector<NonCrossingPartition> out;
  std::vector<std::vector<int>> blocks;
  extend_partitions(1, k, blocks, out);
  return out;
}

int nbd_with_partition(const Positroid& p, Subset e, const NonCrossingPartition& partition) {
  const Decomposition dec = proper_decomposition(p, e, "nbd_with_partition");
  const int k = dec.count();
  std::vector<int> seen(static_cast<std::size_t>(k), 0);
  for (const auto& part : partition.parts) {
    if (part.empty()) throw InputError("partition has an empty block");
    for (int index : part) {
      if (index < 1 || index > k) {
        throw InputError("partition index " + std::to_string(index) + " outside 1.." + std::to_string(k));
      }
      if (seen[static_cast<std::size_t>(index - 1)]++ != 0) {
        throw InputError("partition index " + std::to_string(index) + " repeated");
      }
    }
  }
  if (std::ranges::count(seen, 0) != 0) throw InputError("partition does not cover 1.." + std::to_string(k));

  int total = 0;
  for (const auto& part : partition.parts) {
    Subset restricted;
    for (int index : part) {
      restricted |= p.ground().interval_members(dec.intervals[static_cast<std::size_t>(index - 1)]);
    }
    // Restricting to whole intervals keeps them maximal, so nbd sees the
    // same intervals again.
    total += nbd(p, restricted);
  }
  return total;
}

std::optional<Subset> transfer_step(const Positroid& p, Subset j, int a, int b, int c) {
  p.require_fixed_point_free("transfer_step");
  const GroundSet& g = p.ground();
  g.check_label(a);
  g.check_label(b);
  g.check_label(c);
  g.check_subset(j);
  if (c == a || g.offset(a, b) >= g.offset(a, c)) {
    throw ContractError("transfer_step: (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                        std::to_string(c) + ") is not cyclically ordered");
  }
  if (j.size() != p.rank() || !is_basis(p, j)) {
    throw ContractError("transfer_step: {" + to_string(j) + "} is not a basis");
  }
  const Subset necklace_c = p.necklace_at(c);
  const Subset gap = g.open_interval(b, c);
  const Subset tail = g.half_open(c, a);
  if (!(necklace_c & gap).is_subset_of(j)) {
    throw ContractError("transfer_step: I_" + std::to_string(c) + " & (" + std::to_string(b) + "," +
                        std::to_string(c) + ") is not contained in {" + to_string(j) + "}");
  }
  if (!(j & tail).is_subset_of(necklace_c)) {
    throw ContractError("transfer_step: {" + to_string(j) + "} & [" + std::to_string(c) + "," +
                        std::to_string(a) + ") is not contained in I_" + std::to_string(c));
  }
  const Subset pushable = (j - necklace_c) & gap;
  const Subset targets = (necklace_c - j) & tail;
  if (pushable.empty() || targets.empty()) return std::nullopt;

  const int x = g.greatest(pushable, a);
  const int y = g.least(targets, a);
  const Subset result = j.without(x).with(y);
  // The exchange can break the Gale condition at c; the push stops there.
  if (!is_basis(p, result)) return std::nullopt;
  return result;
}

PushResult push_procedure(const Positroid& p, Subset e, int first_interval) {
  p.require_fixed_point_free("push_procedure");
  const Decomposition dec = proper_decomposition(p, e, "push_procedure");
  const int k = dec.count();
  if (first_interval < 0 || first_interval >= k) {
    throw InputError("starting interval " + std::to_string(first_interval) + " outside 0.." +
                     std::to_string(k - 1));
  }
  std::vector<CyclicInterval> ivs;
  for (int i = 0; i < k; ++i) ivs.push_back(dec.intervals[static_cast<std::size_t>((first_interval + i) % k)]);

  const int a1 = ivs.front().first;
  PushResult out;
  out.basis = p.necklace_at(a1);
  out.trace.push_back({1, out.basis});
  for (int t = 1; t < k; ++t) {
    const int b = ivs[static_cast<std::size_t>(t - 1)].last;
    const int c = ivs[static_cast<std::size_t>(t)].first;
    while (auto moved = transfer_step(p, out.basis, a1, b, c)) out.basis = *moved;
    out.trace.push_back({t + 1, out.basis});
  }
  return out;
}

int rank(const Positroid& p, Subset e, RankMethod method) {
  p.require_fixed_point_free("rank");
  p.ground().check_subset(e);
  if (e.empty()) return 0;
  if (e == p.ground().all()) return p.rank();
  if (method == RankMethod::kPush) return (push_procedure(p, e).basis & e).size();

  const int k = p.ground().decompose(e).count();
  int best = std::numeric_limits<int>::max();
  for (const auto& partition : enumerate_noncrossing_partitions(k)) {
    best = std::min(best, nbd_with_partition(p, e, partition));
  }
  return best;
}

Subset closure(const Positroid& p, Subset e) {
  const int base = rank(p, e);
  Subset out = e;
  for (int x = 1; x <= p.size(); ++x) {
    if (!e.contains(x) && rank(p, e.with(x)) == base) out = out.with(x);
  }
  return out;
}

}  // namespace positroid
