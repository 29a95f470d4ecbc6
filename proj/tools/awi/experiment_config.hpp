#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "awi/policy.hpp"
#include "awi/sim.hpp"

namespace awi::cli {

inline constexpr int kExperimentFileVersion = 1;

// Token accepted wherever a numeric discount factor is: resolves to the
// tightest proven bound over the experiment's channels.
inline constexpr const char* kBetaBoundToken = "paper-bound";

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentSpec {
  std::string name = "custom";     // CSV system column
  std::vector<ChannelParams> channels;
  bool from_preset = false;
  int num_active = 1;
  std::optional<double> beta;      // empty = resolve from the bound token
  int horizon = kDefaultSimHorizon;
  int runs = kDefaultSimRuns;
  InitialBeliefMode initial_mode = InitialBeliefMode::kSteadyState;
  std::vector<double> initial_beliefs;
  std::vector<PolicySpec> policies;
  TieBreak tie_break = TieBreak::kLowestIndex;

  double resolved_beta() const;
  SystemConfig to_system_config(std::uint64_t master_seed) const;
};

struct ExperimentFile {
  int version = kExperimentFileVersion;
  std::vector<ExperimentSpec> experiments;
};

// Parse/serialize the versioned JSON experiment schema. parse -> serialize ->
// parse is idempotent. Errors carry a human-readable location.
ExperimentFile parse_experiment_file(const std::string& text);
ExperimentFile load_experiment_file(const std::string& path);
std::string serialize_experiment_file(const ExperimentFile& file);

// "myopic", "random", "awi:N" (bare "awi" means depth 0).
PolicySpec parse_policy(const std::string& token);

}  // namespace awi::cli
