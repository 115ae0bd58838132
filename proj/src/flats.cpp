#include "positroid/flats.hpp"

#include <algorithm>
#include <string>

#include "positroid/error.hpp"
#include "positroid/oracle.hpp"
#include "positroid/rank.hpp"

namespace positroid {

std::vector<BridgeInterval> bridge_intervals(const Positroid& p) {
  p.require_fixed_point_free("bridge_intervals");
  std::vector<BridgeInterval> out;
  for (int x = 1; x <= p.size(); ++x) out.push_back({x, {x, p.preimage(x)}});
  return out;
}

Subset covered_complement(const Positroid& p, Subset e) {
  p.ground().check_subset(e);
  Subset covered;
  for (const auto& bridge : bridge_intervals(p)) {
    const Subset arc = p.ground().interval_members(bridge.interval);
    if (!arc.intersects(e)) covered |= arc;
  }
  return covered;
}

bool is_interval_flat(const Positroid& p, CyclicInterval iv) {
  const Subset members = p.ground().interval_members(iv);
  const Subset outside = p.ground().all() - members;
  return outside.is_subset_of(covered_complement(p, members));
}

IntervalFlatCover is_intersection_of_interval_flats(const Positroid& p, Subset e) {
  p.ground().check_subset(e);
  if (e.empty()) throw InputError("intersection-of-interval-flats test needs a nonempty set");
  IntervalFlatCover out;
  const Subset outside = p.ground().all() - e;
  out.covered = outside.is_subset_of(covered_complement(p, e));
  if (!out.covered) return out;
  if (outside.empty()) {
    out.witnesses.push_back({1, p.size()});
    return out;
  }
  // E = [a_1,b_1] + ... + [a_k,b_k] is the intersection of [a_i, b_{i-1}].
  const auto ivs = p.ground().decompose(e).intervals;
  const std::size_t k = ivs.size();
  for (std::size_t i = 0; i < k; ++i) {
    out.witnesses.push_back({ivs[i].first, ivs[(i + k - 1) % k].last});
  }
  return out;
}

bool is_separable(const Positroid& p, Subset e) {
  p.require_fixed_point_free("is_separable");
  p.ground().check_subset(e);
  if (e.size() < 2) return false;
  if (e.size() > kMaxBipartitionSize) {
    throw CapacityError("bipartition search over " + std::to_string(e.size()) +
                        " elements exceeds the limit of " + std::to_string(kMaxBipartitionSize));
  }
  const int total = rank(p, e);
  const Subset anchor = Subset::singleton(e.min_label());
  const Subset rest = e - anchor;
  bool found = false;
  for_each_submask(rest, [&](Subset extra) {
    if (found || extra == rest) return;
    const Subset part = anchor | extra;
    if (rank(p, part) + rank(p, e - part) == total) found = true;
  });
  return found;
}

bool is_flat_inseparable_criterion(const Positroid& p, Subset e) {
  if (is_separable(p, e)) {
    throw ContractError("arc criterion for flats applies to inseparable sets; {" + to_string(e) +
                        "} is separable");
  }
  const Subset outside = p.ground().all() - e;
  return outside.is_subset_of(covered_complement(p, e));
}

FlatnessVerdict is_flat(const Positroid& p, Subset e) {
  if (!is_separable(p, e)) return {is_flat_inseparable_criterion(p, e), true};
  return {closure(p, e) == e, false};
}

std::vector<CyclicInterval> interval_flats(const Positroid& p) {
  p.require_fixed_point_free("interval_flats");
  std::vector<CyclicInterval> out;
  const int n = p.size();
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      if (b == p.ground().prev(a)) continue;
      if (is_interval_flat(p, {a, b})) out.push_back({a, b});
    }
  }
  return out;
}

namespace {

template <typename Fn>
void for_each_cover_passing_set(const Positroid& p, Fn&& fn) {
  p.require_fixed_point_free("flat enumeration");
  const int n = p.size();
  if (n > kMaxFlatEnumerationSize) {
    throw CapacityError("flat enumeration sweeps 2^n sets; n = " + std::to_string(n) +
                        " exceeds the limit of " + std::to_string(kMaxFlatEnumerationSize));
  }
  std::vector<Subset> arcs;
  for (const auto& bridge : bridge_intervals(p)) arcs.push_back(p.ground().interval_members(bridge.interval));
  const std::uint64_t full = p.ground().all().bits();
  for (std::uint64_t bits = 1; bits <= full; ++bits) {
    const Subset e(bits);
    Subset covered;
    for (Subset arc : arcs) {
      if (!arc.intersects(e)) covered |= arc;
    }
    if ((p.ground().all() - e).is_subset_of(covered)) fn(e);
  }
}

}  // namespace

std::vector<Subset> interval_flat_intersections(const Positroid& p) {
  std::vector<Subset> out;
  for_each_cover_passing_set(p, [&](Subset e) { out.push_back(e); });
  std::ranges::sort(out, LexLess{});
  return out;
}

std::vector<FlatRecord> enumerate_inseparable_flats(const Positroid& p) {
  std::vector<FlatRecord> out;
  // Every inseparable flat passes the cover test, so the cheap test runs
  // first and the bipartition search only sees its survivors.
  for_each_cover_passing_set(p, [&](Subset e) {
    if (is_separable(p, e)) return;
    if (!is_flat_inseparable_criterion(p, e)) return;
    out.push_back({e, rank(p, e), true});
  });
  std::ranges::sort(out, LexLess{}, &FlatRecord::members);
  return out;
}

}  // namespace positroid
