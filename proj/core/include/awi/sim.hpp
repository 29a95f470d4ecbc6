#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "awi/belief.hpp"
#include "awi/policy.hpp"
#include "awi/rng.hpp"

namespace awi {

inline constexpr int kDefaultSimHorizon = 100;
inline constexpr int kDefaultSimRuns = 10000;

enum class InitialBeliefMode {
  kSteadyState,  // every channel starts at its passive fixed point
  kExplicit,     // caller provides one belief per channel
};

struct SystemConfig {
  std::vector<ChannelParams> channels;
  int num_active = 1;
  double beta = 0.5;
  int horizon = kDefaultSimHorizon;
  int runs = kDefaultSimRuns;
  std::uint64_t master_seed = 0;
  InitialBeliefMode initial_mode = InitialBeliefMode::kSteadyState;
  std::vector<double> initial_beliefs;  // read only in kExplicit mode

  void validate() const;
  // Stable digest of every field that influences simulation output; rows
  // produced under different configs can be told apart downstream.
  std::uint64_t fingerprint() const;
  std::vector<Belief> resolve_initial_beliefs() const;
};

// Everything observable about one slot, recorded before the state transition.
struct SlotRecord {
  std::vector<int> states;        // true channel states when the slot began
  std::vector<double> beliefs;    // beliefs the decision was based on
  std::vector<int> actions;       // probed channel ids, 1-based, ascending
  std::map<int, int> observations;  // CQI per probed channel
  double reward = 0.0;            // undiscounted slot reward
};

struct EpisodeTrace {
  std::vector<SlotRecord> slots;
};

// Draw a true initial state consistent with the initial belief.
int sample_initial_state(const ChannelParams& ch, Belief w, Rng& rng);

// One Markov transition of the true state; happens every slot for every
// channel whether or not it was probed.
int step_state(const ChannelParams& ch, int state, Rng& rng);

// Draw a CQI level from the state-conditional observation column.
int sample_cqi(const ChannelParams& ch, int state, Rng& rng);

// Discounted return of a single episode. Stream seeds derive from
// (master_seed, run_id) only, and every stream consumes the same number of
// draws per slot regardless of the policy, so different policies on the same
// run_id face identical channel randomness.
double run_episode(const SystemConfig& config, const PolicySpec& policy,
                   std::uint64_t run_id, EpisodeTrace* trace = nullptr,
                   std::vector<double>* partial_returns = nullptr);

struct RunStats {
  PolicySpec policy;
  int runs = 0;
  double mean_return = 0.0;
  double std_err = 0.0;  // sample std / sqrt(runs); 0 for a single run
  std::uint64_t config_fingerprint = 0;
  std::optional<std::vector<double>> per_run_returns;
  // mean over runs of the partial return through slot t (1-based index t-1).
  std::optional<std::vector<double>> mean_partial_returns;
};

struct ExperimentOptions {
  int threads = 1;
  bool keep_per_run_returns = false;
  bool keep_partial_returns = false;
};

// Run every policy over the same run_id grid. Results are aggregated in
// run_id order no matter how work was scheduled, so output is bitwise
// reproducible for any thread count.
std::vector<RunStats> run_experiment(const SystemConfig& config,
                                     std::span<const PolicySpec> policies,
                                     const ExperimentOptions& options = {});

}  // namespace awi
