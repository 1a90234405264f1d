#pragma once

// Randomized invariant suites with exact oracles. Used by `orbimod check`
// and by the acceptance test binary.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orbimod {

inline constexpr std::uint64_t kDefaultCheckSeed = 20240611;

struct SuiteResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::size_t cases = 0;
  std::string failure;  // first violated check, empty on success
  double seconds = 0.0;
  std::optional<double> time_limit;  // seconds; exceeding it fails the suite
};

/// Suites numbered 1-12 in the order of the acceptance list.
std::vector<SuiteResult> acceptance_suites(std::uint64_t seed = kDefaultCheckSeed);
SuiteResult acceptance_suite(int number, std::uint64_t seed = kDefaultCheckSeed);

/// Cross-module invariants not already covered by the acceptance suites.
std::vector<SuiteResult> invariant_suites(std::uint64_t seed = kDefaultCheckSeed);

}  // namespace orbimod
