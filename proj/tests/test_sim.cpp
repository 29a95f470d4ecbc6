#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"

#include "awi/sim.hpp"
#include "test_util.hpp"

using namespace awi;

namespace {

ChannelParams two_level(double p01, double p11,
                        std::vector<double> poor = {0.9, 0.1},
                        std::vector<double> good = {0.1, 0.9},
                        double throughput = 1.0) {
  return ChannelParams(p01, p11, std::move(poor), std::move(good), throughput);
}

SystemConfig small_config(std::uint64_t seed) {
  SystemConfig cfg;
  cfg.channels = {two_level(0.2, 0.8), two_level(0.3, 0.6),
                  two_level(0.45, 0.15)};
  cfg.num_active = 1;
  cfg.beta = 0.8;
  cfg.horizon = 25;
  cfg.runs = 60;
  cfg.master_seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("system configs validate their invariants") {
  SystemConfig cfg = small_config(1);
  CHECK_NOTHROW(cfg.validate());

  SystemConfig bad = cfg;
  bad.channels.erase(bad.channels.begin() + 1, bad.channels.end());
  CHECK_THROWS_AS(bad.validate(), ValidationError);

  bad = cfg;
  bad.num_active = 0;
  CHECK_THROWS_AS(bad.validate(), ValidationError);
  bad.num_active = 3;
  CHECK_THROWS_AS(bad.validate(), ValidationError);

  bad = cfg;
  bad.beta = 0.0;
  CHECK_THROWS_AS(bad.validate(), ValidationError);
  bad.beta = 1.0;
  CHECK_THROWS_AS(bad.validate(), ValidationError);

  bad = cfg;
  bad.horizon = 0;
  CHECK_THROWS_AS(bad.validate(), ValidationError);

  bad = cfg;
  bad.runs = 0;
  CHECK_THROWS_AS(bad.validate(), ValidationError);

  bad = cfg;
  bad.initial_mode = InitialBeliefMode::kExplicit;
  bad.initial_beliefs = {0.5, 0.5};
  CHECK_THROWS_AS(bad.validate(), ValidationError);
  bad.initial_beliefs = {0.5, 0.5, 0.5};
  CHECK_NOTHROW(bad.validate());

  bad = cfg;
  bad.initial_beliefs = {0.5, 0.5, 0.5};  // steady-state mode must stay bare
  CHECK_THROWS_AS(bad.validate(), ValidationError);

  // Fingerprints separate configs that simulate differently.
  SystemConfig other = cfg;
  other.master_seed = cfg.master_seed + 1;
  CHECK(cfg.fingerprint() != other.fingerprint());
  other = cfg;
  other.beta = 0.81;
  CHECK(cfg.fingerprint() != other.fingerprint());
  CHECK(cfg.fingerprint() == small_config(1).fingerprint());
}

TEST_CASE("initial states follow the initial belief") {
  const ChannelParams ch = two_level(0.2, 0.8);
  Rng rng(61);
  for (int c = 0; c < 50; ++c) {
    CHECK(sample_initial_state(ch, Belief(1.0), rng) == 1);
    CHECK(sample_initial_state(ch, Belief(0.0), rng) == 0);
  }
  long good = 0;
  const int trials = 100000;
  const double ws = steady_state(ch).value();
  for (int c = 0; c < trials; ++c) good += sample_initial_state(ch, Belief(ws), rng);
  const double sigma = std::sqrt(ws * (1.0 - ws) / trials);
  CHECK(std::abs(static_cast<double>(good) / trials - ws) <= 3.5 * sigma);
}

TEST_CASE("state transitions match the chain statistics") {
  Rng rng(62);
  const ChannelParams ch = two_level(0.5, 0.7);
  long up = 0;
  const int trials = 100000;
  for (int c = 0; c < trials; ++c) up += step_state(ch, 0, rng);
  CHECK(std::abs(up / static_cast<double>(trials) - 0.5) <=
        3.5 * std::sqrt(0.25 / trials));

  // Long-chain occupancy settles at the stationary point.
  const ChannelParams mix = two_level(0.3, 0.7);
  int s = 0;
  long occupancy = 0;
  const int steps = 200000;
  for (int t = 0; t < steps; ++t) {
    s = step_state(mix, s, rng);
    occupancy += s;
  }
  CHECK(std::abs(occupancy / static_cast<double>(steps) -
                 steady_state(mix).value()) <= 0.01);

  // A nearly absorbing good state almost never drops out.
  const ChannelParams sticky = two_level(0.000001, 0.999999);
  int state = 1;
  long flips = 0;
  for (int t = 0; t < 1000000; ++t) {
    const int next = step_state(sticky, state, rng);
    if (next != state) ++flips;
    state = next;
  }
  CHECK(flips <= 10);
}

TEST_CASE("observation sampling follows the state-conditional column") {
  Rng rng(63);
  const ChannelParams certain = two_level(0.3, 0.7, {1.0, 0.0}, {0.0, 1.0});
  for (int c = 0; c < 200; ++c) {
    CHECK(sample_cqi(certain, 0, rng) == 1);
    CHECK(sample_cqi(certain, 1, rng) == 2);
  }

  const ChannelParams single = ChannelParams(0.3, 0.7, {1.0}, {1.0}, 1.0);
  for (int c = 0; c < 50; ++c) CHECK(sample_cqi(single, c % 2, rng) == 1);

  const ChannelParams noisy = two_level(0.3, 0.7);
  long hits = 0;
  const int trials = 100000;
  for (int c = 0; c < trials; ++c) {
    if (sample_cqi(noisy, 1, rng) == 2) ++hits;
  }
  CHECK(std::abs(hits / static_cast<double>(trials) - 0.9) <=
        3.5 * std::sqrt(0.09 / trials));
}

TEST_CASE("an episode on pinned-good channels collects the geometric sum") {
  SystemConfig cfg;
  cfg.channels = {two_level(0.000001, 0.999999), two_level(0.000001, 0.999999)};
  cfg.num_active = 1;
  cfg.beta = 0.5;
  cfg.horizon = 3;
  cfg.runs = 1;
  cfg.master_seed = 7;
  cfg.initial_mode = InitialBeliefMode::kExplicit;
  cfg.initial_beliefs = {1.0, 1.0};
  const double g = run_episode(cfg, PolicySpec::myopic(), 0);
  CHECK(g == doctest::Approx(1.75).epsilon(1e-9));
}

TEST_CASE("single-slot return is the chosen channel's state value") {
  SystemConfig cfg = small_config(9);
  cfg.horizon = 1;
  EpisodeTrace trace;
  const double g = run_episode(cfg, PolicySpec::myopic(), 3, &trace);
  REQUIRE(trace.slots.size() == 1);
  const SlotRecord& rec = trace.slots[0];
  REQUIRE(rec.actions.size() == 1);
  const int id = rec.actions[0];
  CHECK(g == rec.states[static_cast<std::size_t>(id - 1)] *
                 cfg.channels[static_cast<std::size_t>(id - 1)].throughput());
}

TEST_CASE("trace rewards and discounting reconstruct the return") {
  SystemConfig cfg = small_config(10);
  cfg.num_active = 2;
  EpisodeTrace trace;
  const double g = run_episode(cfg, PolicySpec::awi(1), 5, &trace);
  REQUIRE(static_cast<int>(trace.slots.size()) == cfg.horizon);

  double total = 0.0, disc = 1.0;
  for (const SlotRecord& rec : trace.slots) {
    double reward = 0.0;
    for (int id : rec.actions) {
      reward += rec.states[static_cast<std::size_t>(id - 1)] *
                cfg.channels[static_cast<std::size_t>(id - 1)].throughput();
    }
    CHECK(reward == rec.reward);
    CHECK(rec.observations.size() == rec.actions.size());
    for (int id : rec.actions) CHECK(rec.observations.contains(id));
    total += disc * rec.reward;
    disc *= cfg.beta;
  }
  CHECK(total == g);

  // Partial returns are the same accumulation, slot by slot.
  std::vector<double> partial;
  const double g2 = run_episode(cfg, PolicySpec::awi(1), 5, nullptr, &partial);
  CHECK(g2 == g);
  REQUIRE(static_cast<int>(partial.size()) == cfg.horizon);
  CHECK(partial.back() == g);
  CHECK(std::is_sorted(partial.begin(), partial.end()));
}

TEST_CASE("episodes replay bitwise under a fixed run id") {
  const SystemConfig cfg = small_config(11);
  for (const PolicySpec& spec :
       {PolicySpec::myopic(), PolicySpec::awi(2), PolicySpec::random()}) {
    CHECK(run_episode(cfg, spec, 4) == run_episode(cfg, spec, 4));
  }
  // Different run ids face different randomness.
  CHECK(run_episode(cfg, PolicySpec::myopic(), 0) !=
        run_episode(cfg, PolicySpec::myopic(), 1));
}

TEST_CASE("paired runs expose every policy to identical channel randomness") {
  const SystemConfig cfg = small_config(12);
  EpisodeTrace a, b;
  run_episode(cfg, PolicySpec::myopic(), 2, &a);
  run_episode(cfg, PolicySpec::random(), 2, &b);
  REQUIRE(a.slots.size() == b.slots.size());
  for (std::size_t t = 0; t < a.slots.size(); ++t) {
    // True trajectories coincide even though the probes differ.
    CHECK(a.slots[t].states == b.slots[t].states);
    // Where both policies probed the same channel, they saw the same CQI.
    for (const auto& [id, cqi] : a.slots[t].observations) {
      const auto it = b.slots[t].observations.find(id);
      if (it != b.slots[t].observations.end()) CHECK(it->second == cqi);
    }
  }
}

TEST_CASE("idle channels keep moving at the chain rate") {
  SystemConfig cfg = small_config(13);
  cfg.horizon = 4000;
  EpisodeTrace trace;
  run_episode(cfg, PolicySpec::random(), 0, &trace);

  for (std::size_t j = 0; j < cfg.channels.size(); ++j) {
    long idle_up = 0, idle_zero = 0;
    for (std::size_t t = 0; t + 1 < trace.slots.size(); ++t) {
      const bool probed =
          std::binary_search(trace.slots[t].actions.begin(),
                             trace.slots[t].actions.end(), static_cast<int>(j) + 1);
      if (probed) continue;  // count transitions on idle slots only
      if (trace.slots[t].states[j] == 0) {
        ++idle_zero;
        idle_up += trace.slots[t + 1].states[j];
      }
    }
    REQUIRE(idle_zero > 200);
    const double p01 = cfg.channels[j].p01();
    const double sigma = std::sqrt(p01 * (1.0 - p01) / idle_zero);
    CHECK(std::abs(idle_up / static_cast<double>(idle_zero) - p01) <=
          4.0 * sigma);
  }
}

TEST_CASE("returns stay inside the discounted throughput envelope") {
  Rng rng(64);
  for (int c = 0; c < 15; ++c) {
    SystemConfig cfg;
    const int n = 3 + c % 3;
    std::vector<double> tps;
    for (int j = 0; j < n; ++j) {
      cfg.channels.push_back(
          testutil::draw_channel(rng, 0, 2, true, testutil::uni(rng, 0.3, 1.5)));
      tps.push_back(cfg.channels.back().throughput());
    }
    cfg.num_active = 1 + c % 2;
    cfg.beta = testutil::uni(rng, 0.2, 0.95);
    cfg.horizon = 30;
    cfg.runs = 1;
    cfg.master_seed = 100 + static_cast<std::uint64_t>(c);
    std::sort(tps.rbegin(), tps.rend());
    double cap = 0.0;
    for (int j = 0; j < cfg.num_active; ++j) cap += tps[static_cast<std::size_t>(j)];
    cap *= (1.0 - std::pow(cfg.beta, cfg.horizon)) / (1.0 - cfg.beta);
    const double g = run_episode(cfg, PolicySpec::awi(1), 0);
    CHECK(g >= 0.0);
    CHECK(g <= cap + 1e-12);
  }
}

TEST_CASE("experiments aggregate deterministically across thread counts") {
  const SystemConfig cfg = small_config(14);
  const std::vector<PolicySpec> policies = {PolicySpec::myopic(),
                                            PolicySpec::awi(2)};
  ExperimentOptions serial;
  serial.threads = 1;
  serial.keep_per_run_returns = true;
  ExperimentOptions parallel;
  parallel.threads = 4;
  parallel.keep_per_run_returns = true;
  parallel.keep_partial_returns = true;

  const std::vector<RunStats> a = run_experiment(cfg, policies, serial);
  const std::vector<RunStats> b = run_experiment(cfg, policies, parallel);
  REQUIRE(a.size() == 2);
  REQUIRE(b.size() == 2);
  for (std::size_t p = 0; p < 2; ++p) {
    CHECK(a[p].mean_return == b[p].mean_return);
    CHECK(a[p].std_err == b[p].std_err);
    CHECK(a[p].config_fingerprint == b[p].config_fingerprint);
    REQUIRE(a[p].per_run_returns.has_value());
    REQUIRE(b[p].per_run_returns.has_value());
    CHECK(*a[p].per_run_returns == *b[p].per_run_returns);

    // Statistics recompute from the retained per-run returns.
    const std::vector<double>& r = *a[p].per_run_returns;
    double sum = 0.0;
    for (double v : r) sum += v;
    const double mean = sum / static_cast<double>(r.size());
    CHECK(a[p].mean_return == mean);
    double ss = 0.0;
    for (double v : r) ss += (v - mean) * (v - mean);
    CHECK(a[p].std_err ==
          std::sqrt(ss / static_cast<double>(r.size() - 1) /
                    static_cast<double>(r.size())));

    // The mean cumulative-return curve ends at the mean return.
    REQUIRE(b[p].mean_partial_returns.has_value());
    CHECK(b[p].mean_partial_returns->back() == b[p].mean_return);
  }
}

TEST_CASE("identical policies produce identical statistics") {
  const SystemConfig cfg = small_config(15);
  const std::vector<PolicySpec> twins = {PolicySpec::myopic(),
                                         PolicySpec::myopic()};
  const std::vector<RunStats> stats = run_experiment(cfg, twins, {});
  REQUIRE(stats.size() == 2);
  CHECK(stats[0].mean_return == stats[1].mean_return);
  CHECK(stats[0].std_err == stats[1].std_err);
}

TEST_CASE("single-run experiments report zero uncertainty") {
  SystemConfig cfg = small_config(16);
  cfg.runs = 1;
  const std::vector<PolicySpec> policies = {PolicySpec::awi(0)};
  const std::vector<RunStats> stats = run_experiment(cfg, policies, {});
  REQUIRE(stats.size() == 1);
  CHECK(stats[0].runs == 1);
  CHECK(stats[0].std_err == 0.0);
  CHECK(stats[0].mean_return == run_episode(cfg, PolicySpec::awi(0), 0));
}
