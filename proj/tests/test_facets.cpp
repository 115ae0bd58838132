#include <doctest.h>

#include "positroid/error.hpp"
#include "positroid/facets.hpp"
#include "positroid/oracle.hpp"
#include "positroid/rank.hpp"
#include "support/brute.hpp"
#include "support/golden.hpp"

using namespace positroid;

namespace {

bool has_bound(const FacetSystem& s, Subset support, int rhs) {
  return std::any_of(s.inequalities.begin(), s.inequalities.end(), [&](const Inequality& i) {
    return i.kind == InequalityKind::kRankBound && i.support == support && i.rhs == rhs;
  });
}

}  // namespace

TEST_CASE("uniform matroid systems are pinned") {
  const Positroid p = Positroid::parse(kUniform24);
  CHECK(to_hrep(independent_set_facets(p)) ==
        "4 2\n"
        "ge 0 1\nge 0 2\nge 0 3\nge 0 4\n"
        "le 1 1\nle 2 1 2 3 4\nle 1 2\nle 1 3\nle 1 4\n");
  const FacetSystem basis = basis_polytope_system(p);
  CHECK(basis.equalities.size() == 1);
  CHECK(basis.inequalities.size() == 4 * 4 - 4 + 1);
  CHECK(to_hrep(basis).rfind("4 2\neq 2 1 2 3 4\n", 0) == 0);
}

TEST_CASE("running example facets") {
  const Positroid p = Positroid::parse(kRunningExample);
  const FacetSystem s = independent_set_facets(p);
  // x_{1,2,3,8,9,10} <= 3 is the sum of x_{1,2,3,8,9} <= 2 and x_10 <= 1.
  CHECK_FALSE(has_bound(s, Subset::of({1, 2, 3, 8, 9, 10}), 3));
  CHECK(has_bound(s, Subset::of({1, 2, 3, 8, 9}), 2));
  CHECK(has_bound(s, Subset::of({10}), 1));
  CHECK(has_bound(independent_set_facets(p, IndependentSystem::kIntervalFlatIntersections),
                  Subset::of({1, 2, 3, 8, 9, 10}), 3));
  CHECK_FALSE(satisfies(s, Subset::of({1, 2, 3, 8, 9, 10})));
  CHECK(satisfies(s, Subset{}));
  const Subset h = Subset::of({1, 4, 7, 8, 10, 11, 13});
  CHECK(satisfies(s, h));
  CHECK(satisfies(basis_polytope_system(p), h));
  for (const Inequality& i : s.inequalities) {
    if (i.kind == InequalityKind::kRankBound) CHECK(i.rhs == rank(p, i.support));
  }
}

TEST_CASE("every rank bound of the minimal system has a half-integral witness") {
  for (const char* text : {kUniform24, kRunningExample}) {
    const FacetSystem s = independent_set_facets(Positroid::parse(text));
    for (const MinimalityWitness& w : probe_minimality(s)) {
      REQUIRE(w.doubled_point);
      const auto& point = *w.doubled_point;
      int removed_sum = 0;
      for (int x : w.removed.support.labels()) removed_sum += point[static_cast<std::size_t>(x - 1)];
      CHECK(removed_sum > 2 * w.removed.rhs);
      for (const Inequality& other : s.inequalities) {
        if (other == w.removed) continue;
        int sum = 0;
        for (int x : other.support.labels()) sum += point[static_cast<std::size_t>(x - 1)];
        if (other.sense == Sense::kLe) CHECK(sum <= 2 * other.rhs);
        if (other.sense == Sense::kGe) CHECK(sum >= 2 * other.rhs);
      }
    }
  }
}

TEST_CASE("0/1 points match the reference matroid") {
  std::uint64_t state = 77;
  for (int n = 2; n <= 8; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto images = brute::random_derangement(n, state);
      const Positroid p{DecoratedPermutation(images)};
      const brute::Matroid ref = brute::matroid_of(images);
      const FacetSystem minimal = independent_set_facets(p);
      const FacetSystem wide = independent_set_facets(p, IndependentSystem::kIntervalFlatIntersections);
      const FacetSystem basis = basis_polytope_system(p);
      const FacetSystem pruned = basis_polytope_system(p, true);
      CHECK(pruned.inequalities.size() <= basis.inequalities.size() + static_cast<std::size_t>(n));
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        const bool independent = ref.independent(s);
        const bool is_base = std::binary_search(ref.bases.begin(), ref.bases.end(), s);
        CHECK(satisfies(minimal, Subset(s)) == independent);
        CHECK(satisfies(wide, Subset(s)) == independent);
        CHECK(satisfies(basis, Subset(s)) == is_base);
        CHECK(satisfies(pruned, Subset(s)) == is_base);
      }
      CHECK(validate_01_points(p, minimal, PolytopeMode::kIndependentSet).ok);
      CHECK(validate_01_points(p, basis, PolytopeMode::kBasis).ok);
    }
  }
}

TEST_CASE("validator reports a counterexample") {
  const Positroid p = Positroid::parse(kUniform24);
  FacetSystem s = independent_set_facets(p);
  std::erase_if(s.inequalities, [&](const Inequality& i) { return i.support == p.ground().all(); });
  const PointCheck check = validate_01_points(p, s, PolytopeMode::kIndependentSet);
  CHECK_FALSE(check.ok);
  REQUIRE(check.counterexample);
  CHECK_FALSE(satisfies(independent_set_facets(p), *check.counterexample));
}

TEST_CASE("H-representation round trip and errors") {
  for (const char* text : {kUniform24, kRunningExample}) {
    const Positroid p = Positroid::parse(text);
    for (const FacetSystem& s : {independent_set_facets(p), basis_polytope_system(p), basis_polytope_system(p, true)}) {
      const std::string h = to_hrep(s);
      CHECK(parse_hrep(h) == s);
      CHECK(h.back() == '\n');
    }
  }
  CHECK_THROWS_AS(parse_hrep(""), InputError);
  CHECK_THROWS_AS(parse_hrep("4\n"), InputError);
  CHECK_THROWS_AS(parse_hrep("4 2\nlt 1 1\n"), InputError);
  CHECK_THROWS_AS(parse_hrep("4 2\nle 1 5\n"), InputError);
  CHECK_THROWS_AS(parse_hrep("4 2\nle x 1\n"), InputError);
}

TEST_CASE("basis system allows fixed points; independent system does not") {
  const Positroid p = Positroid::parse("2 1 3b 4w");
  const FacetSystem s = basis_polytope_system(p);
  CHECK(satisfies(s, Subset::of({1, 3})));
  CHECK_FALSE(satisfies(s, Subset::of({1, 2})));
  CHECK_FALSE(satisfies(s, Subset::of({1, 4})));
  CHECK_THROWS_AS(independent_set_facets(p), FixedPointError);
}
