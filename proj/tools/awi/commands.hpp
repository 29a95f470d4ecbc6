#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace awi::cli {

// Exit codes shared by the subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailure = 1;  // validate: a property failed
inline constexpr int kExitBadInput = 2;         // flags, config, schema
inline constexpr int kExitRuntime = 3;          // IO or internal failure

struct SimulateOptions {
  std::string config_path;
  std::string out_path;
  std::uint64_t seed = 0;
  std::optional<int> runs;
  std::optional<int> horizon;
  std::optional<std::string> beta;        // number or the bound token
  std::vector<std::string> policies;      // non-empty replaces config lists
  int threads = 1;
  std::string trace_path;                 // non-empty emits a slot trace JSON
};

struct IndexOptions {
  // Either a preset reference...
  std::string system;
  int channel = 1;  // 1-based position within the system
  // ...or explicit channel parameters.
  std::optional<double> p01;
  std::optional<double> p11;
  std::vector<double> obs_given_poor;
  std::vector<double> obs_given_good;
  double throughput = 1.0;

  std::string beta;  // number or the bound token
  int iterations = 0;
  int grid = 1001;
  std::string out_path;  // empty prints to stdout
};

struct ValidateOptions {
  std::string suite;
  std::uint64_t seed = 1;
  double budget = 1.0;
  std::string out_path;  // empty skips the JSON report
};

int run_simulate(const SimulateOptions& opt, std::ostream& out, std::ostream& err);
int run_index(const IndexOptions& opt, std::ostream& out, std::ostream& err);
int run_validate(const ValidateOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace awi::cli
