#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "awi/belief.hpp"
#include "awi/rng.hpp"

namespace awi {

struct RandomChannelOptions {
  int sign = 0;          // +1 forces p11 > p01, -1 forces p11 < p01, 0 either
  int levels = 2;        // CQI levels
  double min_memory = 0.05;  // lower bound on |p11 - p01|
  bool informative = true;   // false makes both likelihood columns identical
};

ChannelParams random_channel(Rng& rng, const RandomChannelOptions& opt = {});

struct PropertyResult {
  std::string name;
  bool pass = true;
  long checks = 0;   // assertions evaluated
  long skips = 0;    // sample points skipped (kinks, out-of-scope draws)
  double worst = 0.0;  // largest residual observed, property-specific units
  std::string detail;  // first failure description, or notes
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<PropertyResult> properties;
  bool all_pass() const;
};

// Randomized property suites shared by `awi validate` and the acceptance
// harness. `budget` scales the trial counts (1.0 = the defaults).
SuiteReport run_crossing_suite(std::uint64_t seed, double budget = 1.0);
SuiteReport run_lemma_suite(std::uint64_t seed, double budget = 1.0);
SuiteReport run_oracle_suite(std::uint64_t seed, double budget = 1.0);
SuiteReport run_indexability_suite(std::uint64_t seed, double budget = 1.0);

}  // namespace awi
