#include "awi/sim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstring>
#include <exception>
#include <mutex>
#include <thread>

namespace awi {

namespace {

// FNV-1a over the canonical little-endian byte image of each field.
class Digest {
 public:
  void add_u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h_ ^= (v >> (8 * i)) & 0xffu;
      h_ *= 0x100000001b3ull;
    }
  }
  void add_double(double d) {
    std::uint64_t bits;
    std::memcpy(&bits, &d, sizeof(bits));
    add_u64(bits);
  }
  std::uint64_t value() const { return h_; }

 private:
  std::uint64_t h_ = 0xcbf29ce484222325ull;
};

}  // namespace

void SystemConfig::validate() const {
  if (channels.size() < 2) {
    throw ValidationError("a system needs at least two channels");
  }
  const int n = static_cast<int>(channels.size());
  if (num_active < 1 || num_active >= n) {
    throw ValidationError("num_active must satisfy 1 <= M < N");
  }
  if (!(beta > 0.0 && beta < 1.0)) {
    throw ValidationError("beta must lie strictly inside (0,1)");
  }
  if (horizon < 1) throw ValidationError("horizon must be at least 1");
  if (runs < 1) throw ValidationError("runs must be at least 1");
  if (initial_mode == InitialBeliefMode::kExplicit) {
    if (initial_beliefs.size() != channels.size()) {
      throw ValidationError("explicit initial beliefs must cover every channel");
    }
    for (double w : initial_beliefs) (void)Belief(w);
  } else if (!initial_beliefs.empty()) {
    throw ValidationError(
        "initial beliefs given but initial mode is steady-state");
  }
}

std::uint64_t SystemConfig::fingerprint() const {
  Digest d;
  d.add_u64(static_cast<std::uint64_t>(channels.size()));
  for (const ChannelParams& ch : channels) {
    d.add_double(ch.p01());
    d.add_double(ch.p11());
    d.add_double(ch.throughput());
    d.add_u64(static_cast<std::uint64_t>(ch.levels()));
    for (int i = 1; i <= ch.levels(); ++i) {
      d.add_double(ch.obs_given_poor(i));
      d.add_double(ch.obs_given_good(i));
    }
  }
  d.add_u64(static_cast<std::uint64_t>(num_active));
  d.add_double(beta);
  d.add_u64(static_cast<std::uint64_t>(horizon));
  d.add_u64(static_cast<std::uint64_t>(runs));
  d.add_u64(master_seed);
  d.add_u64(initial_mode == InitialBeliefMode::kSteadyState ? 0u : 1u);
  for (double w : initial_beliefs) d.add_double(w);
  return d.value();
}

std::vector<Belief> SystemConfig::resolve_initial_beliefs() const {
  std::vector<Belief> out;
  out.reserve(channels.size());
  if (initial_mode == InitialBeliefMode::kSteadyState) {
    for (const ChannelParams& ch : channels) out.push_back(steady_state(ch));
  } else {
    for (double w : initial_beliefs) out.push_back(Belief(w));
  }
  return out;
}

int sample_initial_state(const ChannelParams& ch, Belief w, Rng& rng) {
  (void)ch;
  return rng.uniform() < w.value() ? 1 : 0;
}

int step_state(const ChannelParams& ch, int state, Rng& rng) {
  const double p_good = state == 1 ? ch.p11() : ch.p01();
  return rng.uniform() < p_good ? 1 : 0;
}

int sample_cqi(const ChannelParams& ch, int state, Rng& rng) {
  const double u = rng.uniform();
  double cum = 0.0;
  int last_positive = 1;
  for (int i = 1; i <= ch.levels(); ++i) {
    const double p =
        state == 1 ? ch.obs_given_good(i) : ch.obs_given_poor(i);
    if (p > 0.0) last_positive = i;
    cum += p;
    if (u < cum) return i;
  }
  return last_positive;  // u fell into the round-off tail of the CDF
}

double run_episode(const SystemConfig& config, const PolicySpec& policy,
                   std::uint64_t run_id, EpisodeTrace* trace,
                   std::vector<double>* partial_returns) {
  config.validate();
  policy.validate();
  const int n = static_cast<int>(config.channels.size());

  Rng state_rng(derive_stream_seed(config.master_seed, run_id, kStateStream));
  Rng obs_rng(derive_stream_seed(config.master_seed, run_id, kObsStream));
  Rng policy_rng(derive_stream_seed(config.master_seed, run_id, kPolicyStream));

  std::vector<Belief> beliefs = config.resolve_initial_beliefs();
  std::vector<int> states(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    states[static_cast<std::size_t>(j)] = sample_initial_state(
        config.channels[static_cast<std::size_t>(j)],
        beliefs[static_cast<std::size_t>(j)], state_rng);
  }

  if (trace) {
    trace->slots.clear();
    trace->slots.reserve(static_cast<std::size_t>(config.horizon));
  }
  if (partial_returns) {
    partial_returns->clear();
    partial_returns->reserve(static_cast<std::size_t>(config.horizon));
  }

  double total = 0.0;
  double discount = 1.0;
  for (int t = 1; t <= config.horizon; ++t) {
    const std::vector<int> actions =
        select(policy, config.channels, beliefs, config.num_active, config.beta,
               policy_rng);

    double reward = 0.0;
    for (int id : actions) {
      reward += states[static_cast<std::size_t>(id - 1)] *
                config.channels[static_cast<std::size_t>(id - 1)].throughput();
    }
    total += discount * reward;
    if (partial_returns) partial_returns->push_back(total);

    // CQI is drawn for every channel so obs-stream usage is policy
    // independent; only probed channels reveal theirs to the policy.
    std::map<int, int> observations;
    for (int j = 0; j < n; ++j) {
      const int cqi = sample_cqi(config.channels[static_cast<std::size_t>(j)],
                                 states[static_cast<std::size_t>(j)], obs_rng);
      if (std::binary_search(actions.begin(), actions.end(), j + 1)) {
        observations[j + 1] = cqi;
      }
    }

    if (trace) {
      SlotRecord rec;
      rec.states = states;
      rec.beliefs.assign(beliefs.begin(), beliefs.end());
      rec.actions = actions;
      rec.observations = observations;
      rec.reward = reward;
      trace->slots.push_back(std::move(rec));
    }

    // Restless: every channel's true state moves, probed or not.
    for (int j = 0; j < n; ++j) {
      states[static_cast<std::size_t>(j)] =
          step_state(config.channels[static_cast<std::size_t>(j)],
                     states[static_cast<std::size_t>(j)], state_rng);
    }
    beliefs = update_beliefs(config.channels, beliefs, actions, observations);
    discount *= config.beta;
  }
  return total;
}

std::vector<RunStats> run_experiment(const SystemConfig& config,
                                     std::span<const PolicySpec> policies,
                                     const ExperimentOptions& options) {
  config.validate();
  if (policies.empty()) throw ValidationError("no policies given");
  for (const PolicySpec& p : policies) p.validate();
  if (options.threads < 1) throw ValidationError("threads must be at least 1");

  const std::size_t n_pol = policies.size();
  const std::size_t runs = static_cast<std::size_t>(config.runs);
  std::vector<std::vector<double>> returns(n_pol, std::vector<double>(runs));
  std::vector<std::vector<std::vector<double>>> partials;
  if (options.keep_partial_returns) {
    partials.assign(n_pol, std::vector<std::vector<double>>(runs));
  }

  const std::size_t total_tasks = n_pol * runs;
  auto run_task = [&](std::size_t task) {
    const std::size_t p = task / runs;
    const std::size_t r = task % runs;
    std::vector<double>* curve =
        options.keep_partial_returns ? &partials[p][r] : nullptr;
    returns[p][r] = run_episode(config, policies[p], r, nullptr, curve);
  };

  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(options.threads), total_tasks);
  if (workers <= 1) {
    for (std::size_t task = 0; task < total_tasks; ++task) run_task(task);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t wkr = 0; wkr < workers; ++wkr) {
      pool.emplace_back([&] {
        while (true) {
          const std::size_t task = next.fetch_add(1);
          if (task >= total_tasks) return;
          try {
            run_task(task);
          } catch (...) {
            std::scoped_lock lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
            return;
          }
        }
      });
    }
    for (std::thread& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  // Aggregate in ascending run order regardless of scheduling, so the stats
  // are bitwise identical for any thread count.
  const std::uint64_t digest = config.fingerprint();
  std::vector<RunStats> out(n_pol);
  for (std::size_t p = 0; p < n_pol; ++p) {
    RunStats& st = out[p];
    st.policy = policies[p];
    st.runs = config.runs;
    st.config_fingerprint = digest;
    double sum = 0.0;
    for (std::size_t r = 0; r < runs; ++r) sum += returns[p][r];
    st.mean_return = sum / static_cast<double>(runs);
    if (runs > 1) {
      double ss = 0.0;
      for (std::size_t r = 0; r < runs; ++r) {
        const double d = returns[p][r] - st.mean_return;
        ss += d * d;
      }
      const double var = ss / static_cast<double>(runs - 1);
      st.std_err = std::sqrt(var / static_cast<double>(runs));
    }
    if (options.keep_per_run_returns) st.per_run_returns = returns[p];
    if (options.keep_partial_returns) {
      std::vector<double> mean_curve(static_cast<std::size_t>(config.horizon), 0.0);
      for (std::size_t r = 0; r < runs; ++r) {
        for (std::size_t t = 0; t < mean_curve.size(); ++t) {
          mean_curve[t] += partials[p][r][t];
        }
      }
      for (double& v : mean_curve) v /= static_cast<double>(runs);
      st.mean_partial_returns = std::move(mean_curve);
    }
  }
  return out;
}

}  // namespace awi
