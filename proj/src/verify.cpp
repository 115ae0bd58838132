#include "positroid/verify.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <random>
#include <set>

#include "positroid/facets.hpp"
#include "positroid/flats.hpp"
#include "positroid/oracle.hpp"
#include "positroid/rank.hpp"

namespace positroid {

bool VerifyReport::passed() const {
  return std::ranges::all_of(checks, [](const CheckResult& c) { return c.passed; });
}

namespace {

std::string braces(Subset s) { return "{" + to_string(s) + "}"; }

std::string interval_text(CyclicInterval iv) {
  return "[" + std::to_string(iv.first) + "," + std::to_string(iv.last) + "]";
}

// Records cases until the first failure; later failures are ignored so the
// reported counterexample is the first one in sweep order.
class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& describe, std::uint64_t cases = 1) {
    result_.cases += cases;
    if (ok || !result_.passed) return;
    result_.passed = false;
    result_.counterexample = describe();
  }

  bool failed() const { return !result_.passed; }
  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

class Verifier {
 public:
  Verifier(const Positroid& p, const VerifyOptions& options, VerifyReport& report)
      : p_(p),
        g_(p.ground()),
        options_(options),
        report_(report),
        oracle_(OracleMatroid::from_positroid(p)),
        exhaustive_(p.size() <= std::min(options.exhaustive_limit, kMaxSweepSize)) {
    if (exhaustive_) ranks_ = oracle_rank_table(oracle_);
    build_subsets();
  }

  void run() {
    necklace_structure();
    exchange_axioms();
    interval_extremal_counts();
    interval_exchange();
    interval_rank_formulas();
    rank_against_oracle();
    closure_against_oracle();
    separability_against_oracle();
    interval_flats_against_oracle();
    if (!exhaustive_) {
      report_.warnings.push_back("n = " + std::to_string(p_.size()) + " exceeds the exhaustive limit of " +
                                 std::to_string(std::min(options_.exhaustive_limit, kMaxSweepSize)) + "; subset checks sampled " +
                                 std::to_string(subsets_.size()) + " sets, flat enumeration and 0/1 "
                                 "polytope sweeps skipped");
      return;
    }
    cover_criteria();
    inseparable_flats();
    polytopes();
  }

 private:
  int oracle_rank_of(Subset s) const {
    return ranks_.empty() ? oracle_rank(oracle_, s) : static_cast<int>(ranks_[s.bits()]);
  }

  // Exhaustive sweeps visit sets by size, then bit pattern, so the first
  // failure is a smallest counterexample.
  void build_subsets() {
    const std::uint64_t full = g_.all().bits();
    if (exhaustive_) {
      for (std::uint64_t bits = 0;; ++bits) {
        subsets_.emplace_back(bits);
        if (bits == full) break;
      }
    } else {
      std::mt19937_64 rng(options_.seed);
      std::set<std::uint64_t> seen{0, full};
      const std::uint64_t target = p_.size() >= 63 ? options_.samples + 2
                                                    : std::min(options_.samples + 2, full + 1);
      while (seen.size() < target) seen.insert(rng() & full);
      for (std::uint64_t bits : seen) subsets_.emplace_back(bits);
    }
    std::ranges::sort(subsets_, [](Subset a, Subset b) {
      return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
    });
  }

  void add(Check& check) { report_.checks.push_back(check.take()); }

  void necklace_structure() {
    Check roundtrip("necklace round trip");
    const auto& perm = p_.permutation();
    const auto back = permutation_from_necklace(necklace_from_permutation(perm));
    roundtrip.expect(back == perm, [&] { return "permutation " + perm.to_string() + " came back as " + back.to_string(); });
    const auto reparsed = GrassmannNecklace::parse(p_.necklace().to_string());
    roundtrip.expect(reparsed == p_.necklace(), [&] { return "necklace text did not parse back"; });
    add(roundtrip);

    Check minimal("necklace minimality");
    for (int k = 1; k <= p_.size(); ++k) {
      const Subset ik = p_.necklace_at(k);
      minimal.expect(oracle_.is_basis(ik), [&] { return "I_" + std::to_string(k) + " is not a basis"; });
      for (Subset b : oracle_.bases()) {
        minimal.expect(gale_le(g_, k, ik, b), [&] {
          return "basis " + braces(b) + " is not >=_" + std::to_string(k) + " I_" + std::to_string(k);
        });
      }
    }
    add(minimal);

    Check sharing("sharing property");
    for (int a = 1; a <= p_.size(); ++a) {
      for (int b = 1; b <= p_.size(); ++b) {
        const Subset shared = p_.necklace_at(a) & g_.half_open(b, a);
        sharing.expect(shared.is_subset_of(p_.necklace_at(b)), [&] {
          return "I_" + std::to_string(a) + " & [" + std::to_string(b) + "," + std::to_string(a) +
                 ") = " + braces(shared) + " not inside I_" + std::to_string(b);
        });
      }
    }
    add(sharing);
  }

  void exchange_axioms() {
    Check check("basis exchange axioms");
    check.expect(check_exchange_axioms(oracle_), [] { return "exchange or dual exchange fails"; });
    check.expect(check_exchange_axioms(oracle_dual(oracle_)), [] { return "dual matroid fails exchange"; });
    add(check);
  }

  void interval_extremal_counts() {
    Check check("interval extremal counts");
    for (int a = 1; a <= p_.size(); ++a) {
      for (int b = 1; b <= p_.size(); ++b) {
        const Subset inside = g_.interval(a, b);
        const Subset gap = g_.open_interval(b, a);
        int most = 0;
        int fewest = std::numeric_limits<int>::max();
        for (Subset basis : oracle_.bases()) {
          most = std::max(most, (basis & inside).size());
          fewest = std::min(fewest, (basis & gap).size());
        }
        const Subset ia = p_.necklace_at(a);
        check.expect(most == (ia & inside).size() && fewest == (ia & gap).size(), [&] {
          return "interval [" + std::to_string(a) + "," + std::to_string(b) + "]: oracle max " +
                 std::to_string(most) + ", min in gap " + std::to_string(fewest);
        });
      }
    }
    add(check);
  }

  void interval_exchange() {
    Check check("interval exchange");
    for (int a = 1; a <= p_.size(); ++a) {
      for (int b = 1; b <= p_.size(); ++b) {
        const Subset inside = g_.interval(a, b);
        const Subset pool = p_.necklace_at(a) & inside;
        for (Subset j : oracle_.bases()) {
          const Subset kept = j - inside;
          const int needed = (j & inside).size();
          bool found = false;
          for_each_submask(pool, [&](Subset replacement) {
            if (!found && replacement.size() == needed && oracle_.is_basis(kept | replacement)) found = true;
          });
          check.expect(found, [&] {
            return "basis " + braces(j) + " and interval [" + std::to_string(a) + "," + std::to_string(b) +
                   "] have no replacement inside I_a";
          });
          if (check.failed()) break;
        }
      }
    }
    add(check);
  }

  void interval_rank_formulas() {
    Check check("interval rank formulas");
    for (int a = 1; a <= p_.size(); ++a) {
      for (int b = 1; b <= p_.size(); ++b) {
        const int by_necklace = interval_rank(p_, {a, b});
        const int by_chords = interval_rank_by_chords(p_, {a, b});
        const int gap = minelts(p_, b, a);
        const int gap_chords = minelts_by_chords(p_, b, a);
        check.expect(by_necklace == by_chords && gap == gap_chords && gap + by_necklace == p_.rank() &&
                         by_necklace == oracle_rank_of(g_.interval(a, b)),
                     [&] {
                       return "[" + std::to_string(a) + "," + std::to_string(b) + "]: rank " +
                              std::to_string(by_necklace) + " / " + std::to_string(by_chords) + ", minelts " +
                              std::to_string(gap) + " / " + std::to_string(gap_chords);
                     });
      }
    }
    add(check);
  }

  void rank_against_oracle() {
    Check ranks("rank vs oracle");
    Check rotations("push start independence");
    Check bounds("non-crossing bounds");
    for (Subset e : subsets_) {
      const int fast = rank(p_, e);
      const int expected = oracle_rank_of(e);
      ranks.expect(fast == expected, [&] {
        return "rank " + braces(e) + " = " + std::to_string(fast) + ", oracle " + std::to_string(expected);
      });
      const auto dec = g_.decompose(e);
      if (!dec.proper()) continue;
      for (int start = 1; start < dec.count(); ++start) {
        const int rotated = (push_procedure(p_, e, start).basis & e).size();
        rotations.expect(rotated == fast, [&] {
          return braces(e) + " starting from interval " + std::to_string(start + 1) + " gives " +
                 std::to_string(rotated) + ", expected " + std::to_string(fast);
        });
      }
      if (dec.count() > kMaxNonCrossingBlocks) continue;
      int best = std::numeric_limits<int>::max();
      bool all_above = true;
      for (const auto& partition : enumerate_noncrossing_partitions(dec.count())) {
        const int bound = nbd_with_partition(p_, e, partition);
        all_above = all_above && bound >= expected;
        best = std::min(best, bound);
      }
      bounds.expect(all_above && best == expected, [&] {
        return braces(e) + ": least non-crossing bound " + std::to_string(best) + ", oracle rank " +
               std::to_string(expected);
      });
    }
    add(ranks);
    add(rotations);
    add(bounds);
  }

  void closure_against_oracle() {
    Check check("closure vs oracle");
    for (Subset e : subsets_) {
      const Subset fast = closure(p_, e);
      const Subset expected = oracle_closure(oracle_, e);
      check.expect(fast == expected, [&] {
        return "closure " + braces(e) + " = " + braces(fast) + ", oracle " + braces(expected);
      });
      if (check.failed()) break;
    }
    add(check);
  }

  void separability_against_oracle() {
    Check check("separability vs oracle");
    for (Subset e : subsets_) {
      if (e.size() > 12) continue;
      const bool fast = is_separable(p_, e);
      const bool expected = ranks_.empty() ? oracle_is_separable(oracle_, e) : separable_from_table(ranks_, e);
      check.expect(fast == expected, [&] {
        return braces(e) + (fast ? " separable" : " inseparable") + " by fast rank, oracle disagrees";
      });
      if (check.failed()) break;
    }
    add(check);
  }

  void interval_flats_against_oracle() {
    Check check("interval flats vs oracle");
    for (int a = 1; a <= p_.size(); ++a) {
      for (int b = 1; b <= p_.size(); ++b) {
        const bool fast = is_interval_flat(p_, {a, b});
        const bool expected = oracle_is_flat(oracle_, g_.interval(a, b));
        check.expect(fast == expected, [&] {
          return interval_text({a, b}) + (fast ? " passes" : " fails") + " the arc test, oracle disagrees";
        });
      }
    }
    add(check);
  }

  void cover_criteria() {
    Check cover("intersections of interval flats are flats");
    Check criterion("inseparable flat criterion");
    const auto flats = oracle_all_flats(oracle_);
    const std::set<std::uint64_t> flat_bits = [&] {
      std::set<std::uint64_t> out;
      for (Subset f : flats) out.insert(f.bits());
      return out;
    }();
    for (Subset e : subsets_) {
      if (e.empty()) continue;
      const bool covered = (g_.all() - e).is_subset_of(covered_complement(p_, e));
      const bool flat = flat_bits.contains(e.bits());
      if (covered) {
        cover.expect(flat, [&] { return braces(e) + " passes the cover test but is not a flat"; });
      }
      if (!separable_from_table(ranks_, e)) {
        criterion.expect(covered == flat, [&] {
          return "inseparable " + braces(e) + (flat ? " is" : " is not") + " a flat, cover test says " +
                 (covered ? "yes" : "no");
        });
      }
    }
    add(cover);
    add(criterion);
  }

  void inseparable_flats() {
    Check check("inseparable flats vs oracle");
    const auto fast = enumerate_inseparable_flats(p_);
    const auto expected = oracle_inseparable_flats(oracle_);
    check.expect(fast.size() == expected.size(), [&] {
      return std::to_string(fast.size()) + " inseparable flats, oracle has " + std::to_string(expected.size());
    });
    for (std::size_t i = 0; i < std::min(fast.size(), expected.size()); ++i) {
      const int expected_rank = oracle_rank_of(expected[i]);
      check.expect(fast[i].members == expected[i] && fast[i].rank == expected_rank, [&] {
        return "flat #" + std::to_string(i + 1) + ": " + braces(fast[i].members) + " rank " +
               std::to_string(fast[i].rank) + ", oracle " + braces(expected[i]) + " rank " +
               std::to_string(expected_rank);
      });
    }
    add(check);
  }

  void polytopes() {
    if (p_.size() > kMaxPointSweepSize) return;
    auto sweep = [&](const std::string& name, const FacetSystem& system, PolytopeMode mode) {
      Check check(name);
      const PointCheck result = validate_01_points(p_, system, mode);
      check.expect(result.ok, [&] { return "0/1 point " + braces(*result.counterexample) + " misclassified"; },
                   result.points);
      add(check);
    };
    sweep("independent set polytope 0/1 points", independent_set_facets(p_), PolytopeMode::kIndependentSet);
    sweep("interval flat intersection system 0/1 points",
          independent_set_facets(p_, IndependentSystem::kIntervalFlatIntersections), PolytopeMode::kIndependentSet);
    sweep("basis polytope 0/1 points", basis_polytope_system(p_), PolytopeMode::kBasis);
    sweep("pruned basis polytope 0/1 points", basis_polytope_system(p_, true), PolytopeMode::kBasis);
  }

  const Positroid& p_;
  const GroundSet& g_;
  const VerifyOptions& options_;
  VerifyReport& report_;
  OracleMatroid oracle_;
  bool exhaustive_;
  std::vector<std::uint8_t> ranks_;
  std::vector<Subset> subsets_;
};

}  // namespace

VerifyReport verify_suite(const Positroid& p, const VerifyOptions& options) {
  p.require_fixed_point_free("verify");
  VerifyReport report;
  Verifier(p, options, report).run();
  return report;
}

}  // namespace positroid
