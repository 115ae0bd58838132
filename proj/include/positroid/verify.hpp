#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "positroid/positroid.hpp"

namespace positroid {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  /// First (smallest) failing case, human readable. Empty when passed.
  std::string counterexample;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  /// Checks downgraded from exhaustive to sampled, or skipped.
  std::vector<std::string> warnings;

  bool passed() const;
};

struct VerifyOptions {
  /// Subset sweeps are exhaustive up to this n and sampled above it.
  int exhaustive_limit = 16;
  std::uint64_t samples = 4096;
  std::uint64_t seed = 1;
};

/// Cross-checks every fast computation on `p` against the brute-force
/// oracle: necklace structure, exchange properties, interval ranks, rank
/// and closure of subsets, interval flats, inseparable flats, and 0/1
/// points of both polytopes. Throws FixedPointError for permutations with
/// fixed points and CapacityError when the bases cannot be enumerated.
VerifyReport verify_suite(const Positroid& p, const VerifyOptions& options = {});

}  // namespace positroid
