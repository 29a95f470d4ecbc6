#include <benchmark/benchmark.h>

#include <vector>

#include "awi/belief.hpp"
#include "awi/index.hpp"
#include "awi/oracle.hpp"
#include "awi/policy.hpp"
#include "awi/presets.hpp"
#include "awi/rng.hpp"
#include "awi/sim.hpp"

using namespace awi;

namespace {

ChannelParams bench_channel() {
  return ChannelParams(0.3, 0.7, {0.9, 0.1}, {0.1, 0.9}, 1.0);
}

void BM_PassiveUpdateK(benchmark::State& state) {
  const ChannelParams ch = bench_channel();
  const long k = state.range(0);
  double w = 0.37;
  for (auto _ : state) {
    benchmark::DoNotOptimize(passive_update_k(ch, Belief(w), k).value());
  }
}
BENCHMARK(BM_PassiveUpdateK)->Arg(1)->Arg(16)->Arg(256);

void BM_FirstCrossingTime(benchmark::State& state) {
  const ChannelParams ch = bench_channel();
  Rng rng(1);
  std::vector<double> ws, ts;
  for (int i = 0; i < 1024; ++i) {
    ws.push_back(rng.uniform());
    ts.push_back(rng.uniform());
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        first_crossing_time(ch, Belief(ws[i]), Belief(ts[i])).is_infinite());
    i = (i + 1) & 1023;
  }
}
BENCHMARK(BM_FirstCrossingTime);

void BM_ApproxWhittle(benchmark::State& state) {
  const ChannelParams ch = bench_channel();
  const int n = static_cast<int>(state.range(0));
  Rng rng(2);
  std::vector<double> ws;
  for (int i = 0; i < 1024; ++i) ws.push_back(rng.uniform());
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(approx_whittle(ch, 0.45, Belief(ws[i]), n).value);
    i = (i + 1) & 1023;
  }
}
BENCHMARK(BM_ApproxWhittle)->Arg(0)->Arg(1)->Arg(2)->Arg(3);

void BM_BeliefTreeBuild(benchmark::State& state) {
  const ChannelParams ch = bench_channel();
  const int horizon = static_cast<int>(state.range(0));
  for (auto _ : state) {
    BeliefTreeDp dp(ch, 0.45, Belief(0.37), horizon);
    benchmark::DoNotOptimize(dp.node_count());
  }
}
BENCHMARK(BM_BeliefTreeBuild)->Arg(8)->Arg(10)->Arg(12);

void BM_BeliefTreeValueSweep(benchmark::State& state) {
  const ChannelParams ch = bench_channel();
  const BeliefTreeDp dp(ch, 0.45, Belief(0.37), static_cast<int>(state.range(0)));
  double m = -1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dp.value(m).total);
    m = m < 1.0 ? m + 0.01 : -1.0;
  }
}
BENCHMARK(BM_BeliefTreeValueSweep)->Arg(8)->Arg(12);

void BM_OracleWhittle(benchmark::State& state) {
  const ChannelParams ch = bench_channel();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        oracle_whittle(ch, 0.45, Belief(0.37), static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_OracleWhittle)->Arg(8)->Arg(12);

void BM_SelectAwi(benchmark::State& state) {
  const SystemPreset sys = builtin_systems()[0];
  const double beta = system_beta_bound(sys.channels);
  std::vector<Belief> beliefs;
  Rng rng(3);
  for (std::size_t j = 0; j < sys.channels.size(); ++j) {
    beliefs.emplace_back(rng.uniform());
  }
  const PolicySpec spec = PolicySpec::awi(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        select(spec, sys.channels, beliefs, 1, beta, rng).front());
  }
}
BENCHMARK(BM_SelectAwi)->Arg(0)->Arg(2)->Arg(3);

void BM_RunEpisode(benchmark::State& state) {
  const SystemPreset sys = builtin_systems()[0];
  SystemConfig cfg;
  cfg.channels = sys.channels;
  cfg.num_active = 1;
  cfg.beta = system_beta_bound(sys.channels);
  cfg.horizon = 100;
  cfg.runs = 1;
  cfg.master_seed = 4;
  const PolicySpec spec = PolicySpec::awi(static_cast<int>(state.range(0)));
  std::uint64_t run_id = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_episode(cfg, spec, run_id++));
  }
}
BENCHMARK(BM_RunEpisode)->Arg(0)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
