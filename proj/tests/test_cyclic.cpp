#include <doctest.h>

#include <random>

#include "positroid/cyclic.hpp"
#include "positroid/error.hpp"
#include "support/brute.hpp"

using namespace positroid;

TEST_CASE("subset basics") {
  const Subset s = Subset::of({1, 3, 64});
  CHECK(s.size() == 3);
  CHECK(s.contains(64));
  CHECK_FALSE(s.contains(2));
  CHECK(s.min_label() == 1);
  CHECK(s.max_label() == 64);
  CHECK(to_string(Subset::of({2, 5, 7})) == "2,5,7");
  CHECK(to_string(Subset{}).empty());
  CHECK((Subset::of({1, 2}) | Subset::of({3})) == Subset::of({1, 2, 3}));
  CHECK((Subset::of({1, 2, 3}) - Subset::of({2})) == Subset::of({1, 3}));
  CHECK_THROWS_AS(Subset::of({0}), InputError);
  CHECK_THROWS_AS(Subset::of({65}), InputError);
  CHECK(Subset::first(64).size() == 64);
}

TEST_CASE("lex order matches sorted label lists") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 2000; ++trial) {
    const Subset a(rng() & 0x3ff);
    const Subset b(rng() & 0x3ff);
    CHECK(lex_less(a, b) == (a.labels() < b.labels()));
  }
}

TEST_CASE("cyclic order and intervals") {
  const GroundSet g(6);
  CHECK(g.next(6) == 1);
  CHECK(g.prev(1) == 6);
  CHECK(g.cyclic_lt(5, 6, 1));
  CHECK_FALSE(g.cyclic_lt(5, 1, 6));
  CHECK(g.interval(5, 2) == Subset::of({5, 6, 1, 2}));
  CHECK(g.interval(3, 3) == Subset::of({3}));
  CHECK(g.interval(3, 2) == g.all());
  CHECK(g.open_interval(2, 5) == Subset::of({3, 4}));
  CHECK(g.open_interval(2, 3).empty());
  CHECK(g.half_open(4, 4).empty());
  CHECK(g.half_open(5, 2) == Subset::of({5, 6, 1}));
  CHECK(g.ordered(Subset::of({1, 2, 5, 6}), 5) == std::vector<int>{5, 6, 1, 2});
  CHECK(g.least(Subset::of({1, 4}), 3) == 4);
  CHECK(g.greatest(Subset::of({1, 4}), 3) == 1);
  CHECK_THROWS_AS(GroundSet(0), InputError);
  CHECK_THROWS_AS(GroundSet(65), InputError);
  CHECK_THROWS_AS(g.check_label(7), InputError);
}

TEST_CASE("intervals agree with walking the circle") {
  for (int n = 1; n <= 9; ++n) {
    const GroundSet g(n);
    for (int a = 1; a <= n; ++a) {
      for (int b = 1; b <= n; ++b) CHECK(g.interval(a, b).bits() == brute::walk(a, b, n));
    }
  }
}

TEST_CASE("decomposition into maximal intervals") {
  const GroundSet g(14);
  const Subset e = Subset::of({1, 2, 7, 8, 9, 10, 13});
  const Decomposition dec = g.decompose(e);
  REQUIRE(dec.proper());
  CHECK(dec.intervals == std::vector<CyclicInterval>{{1, 2}, {7, 10}, {13, 13}});
  CHECK(g.decompose(Subset::of({14, 1, 5})).intervals == std::vector<CyclicInterval>{{5, 5}, {14, 1}});
  CHECK(g.decompose(Subset{}).kind == Decomposition::Kind::kEmpty);
  CHECK(g.decompose(g.all()).kind == Decomposition::Kind::kFull);

  for (int n = 1; n <= 8; ++n) {
    const GroundSet h(n);
    for (std::uint64_t bits = 1; bits + 1 < (std::uint64_t{1} << n); ++bits) {
      const Decomposition d = h.decompose(Subset(bits));
      CHECK(h.union_of(d.intervals) == Subset(bits));
      for (std::size_t i = 0; i < d.intervals.size(); ++i) {
        const auto& iv = d.intervals[i];
        CHECK_FALSE(Subset(bits).contains(h.prev(iv.first)));
        CHECK_FALSE(Subset(bits).contains(h.next(iv.last)));
      }
    }
  }
}

TEST_CASE("gale order agrees with sort-and-compare") {
  for (int n = 1; n <= 7; ++n) {
    const GroundSet g(n);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
      for (std::uint64_t t = 0; t < (std::uint64_t{1} << n); ++t) {
        if (std::popcount(s) != std::popcount(t)) continue;
        for (int i = 1; i <= n; ++i) CHECK(gale_le(g, i, Subset(s), Subset(t)) == brute::gale_leq(s, t, n, i));
      }
    }
  }
  CHECK_THROWS_AS(gale_le(GroundSet(4), 1, Subset::of({1}), Subset::of({1, 2})), InputError);
}

TEST_CASE("set parsing") {
  const GroundSet g(14);
  CHECK(parse_subset(g, "1,2,3,8,9,10") == Subset::of({1, 2, 3, 8, 9, 10}));
  CHECK(parse_subset(g, "1..3, 8..10") == Subset::of({1, 2, 3, 8, 9, 10}));
  CHECK(parse_subset(g, "13..2") == Subset::of({13, 14, 1, 2}));
  CHECK(parse_subset(g, "").empty());
  CHECK_THROWS_AS(parse_subset(g, "1,,2"), InputError);
  CHECK_THROWS_AS(parse_subset(g, "15"), InputError);
  CHECK_THROWS_AS(parse_subset(g, "a"), InputError);
  CHECK_THROWS_AS(parse_subset(g, "3.."), InputError);
}
