#include <doctest.h>

#include <algorithm>

#include "positroid/error.hpp"
#include "positroid/flats.hpp"
#include "positroid/rank.hpp"
#include "support/brute.hpp"
#include "support/golden.hpp"

using namespace positroid;

namespace {

std::vector<std::vector<int>> instances() {
  std::vector<std::vector<int>> out;
  std::uint64_t state = 41;
  for (int n = 2; n <= 9; ++n) {
    for (int i = 0; i < 8; ++i) out.push_back(brute::random_derangement(n, state));
  }
  return out;
}

}  // namespace

TEST_CASE("running example flats") {
  const Positroid p = Positroid::parse(kRunningExample);
  CHECK(is_interval_flat(p, {1, 10}));
  CHECK_FALSE(is_interval_flat(p, {1, 3}));
  CHECK(closure(p, Subset::of({1, 2, 3})) == Subset::of({1, 2, 3, 8, 9}));
  const IntervalFlatCover cover = is_intersection_of_interval_flats(p, Subset::of({1, 2, 3, 8, 9, 10}));
  CHECK(cover.covered);
  CHECK(cover.witnesses == std::vector<CyclicInterval>{{1, 10}, {8, 3}});
  // A separable flat: {1,2,3,8,9} has rank 2 and {10} rank 1.
  const FlatnessVerdict verdict = is_flat(p, Subset::of({1, 2, 3, 8, 9, 10}));
  CHECK(verdict.flat);
  CHECK_FALSE(verdict.by_criterion);
  CHECK(is_separable(p, Subset::of({1, 2, 3, 8, 9, 10})));
  CHECK(is_flat_inseparable_criterion(p, Subset::of({1, 2, 3, 8, 9})));
}

TEST_CASE("bridge intervals") {
  const Positroid p = Positroid::parse(kUniform24);
  const auto arcs = bridge_intervals(p);
  REQUIRE(arcs.size() == 4);
  CHECK(arcs[0].x == 1);
  CHECK(arcs[0].interval == CyclicInterval{1, 3});
  CHECK(arcs[3].interval == CyclicInterval{4, 2});
}

TEST_CASE("interval flats match the reference") {
  for (const auto& images : instances()) {
    const Positroid p{DecoratedPermutation(images)};
    const brute::Matroid ref = brute::matroid_of(images);
    const int n = p.size();
    std::vector<CyclicInterval> expected;
    for (int a = 1; a <= n; ++a) {
      for (int b = 1; b <= n; ++b) {
        const brute::Mask iv = brute::walk(a, b, n);
        CHECK(is_interval_flat(p, {a, b}) == ref.flat(iv));
        if (b != (a == 1 ? n : a - 1) && ref.flat(iv)) expected.push_back({a, b});
      }
    }
    CHECK(interval_flats(p) == expected);
  }
}

TEST_CASE("cover test implies flatness; inseparable criterion is exact") {
  for (const auto& images : instances()) {
    const Positroid p{DecoratedPermutation(images)};
    const brute::Matroid ref = brute::matroid_of(images);
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << p.size()); ++s) {
      const Subset e(s);
      const IntervalFlatCover cover = is_intersection_of_interval_flats(p, e);
      if (cover.covered) {
        CHECK(ref.flat(s));
        Subset meet = p.ground().all();
        for (const CyclicInterval& w : cover.witnesses) {
          CHECK(is_interval_flat(p, w));
          meet &= p.ground().interval_members(w);
        }
        CHECK(meet == e);
      }
      const bool separable = ref.separable(s);
      CHECK(is_separable(p, e) == separable);
      if (separable) {
        CHECK_THROWS_AS(is_flat_inseparable_criterion(p, e), ContractError);
        const FlatnessVerdict v = is_flat(p, e);
        CHECK_FALSE(v.by_criterion);
        CHECK(v.flat == ref.flat(s));
      } else {
        CHECK(is_flat_inseparable_criterion(p, e) == ref.flat(s));
      }
    }
  }
}

TEST_CASE("inseparable flat enumeration matches the reference") {
  for (const auto& images : instances()) {
    const Positroid p{DecoratedPermutation(images)};
    const brute::Matroid ref = brute::matroid_of(images);
    const auto flats = enumerate_inseparable_flats(p);
    std::vector<brute::Mask> got;
    for (const FlatRecord& f : flats) {
      got.push_back(f.members.bits());
      CHECK(f.rank == ref.rank(f.members.bits()));
      CHECK(f.inseparable);
    }
    CHECK(std::is_sorted(flats.begin(), flats.end(),
                         [](const FlatRecord& a, const FlatRecord& b) { return lex_less(a.members, b.members); }));
    std::sort(got.begin(), got.end());
    CHECK(got == ref.inseparable_flats());
  }
}

TEST_CASE("uniform matroid flats") {
  const Positroid p = Positroid::parse(kUniform24);
  const auto flats = enumerate_inseparable_flats(p);
  REQUIRE(flats.size() == 5);
  CHECK(flats[0].members == Subset::of({1}));
  CHECK(flats[1].members == Subset::of({1, 2, 3, 4}));
  CHECK(flats[1].rank == 2);
  CHECK(interval_flats(p) ==
        std::vector<CyclicInterval>{{1, 1}, {2, 2}, {3, 3}, {4, 4}});
}

TEST_CASE("flat argument errors") {
  const Positroid p = Positroid::parse(kUniform24);
  CHECK_THROWS_AS(is_intersection_of_interval_flats(p, Subset{}), InputError);
  CHECK_THROWS_AS(is_interval_flat(p, {0, 2}), InputError);
  CHECK_THROWS_AS(enumerate_inseparable_flats(Positroid::parse("2 1 3w")), FixedPointError);
}
