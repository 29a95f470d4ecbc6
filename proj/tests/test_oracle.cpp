#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <vector>

#include "doctest.h"

#include "awi/belief.hpp"
#include "awi/index.hpp"
#include "awi/oracle.hpp"
#include "awi/presets.hpp"
#include "test_util.hpp"

using namespace awi;

namespace {

ChannelParams two_level(double p01, double p11,
                        std::vector<double> poor = {0.9, 0.1},
                        std::vector<double> good = {0.1, 0.9},
                        double throughput = 1.0) {
  return ChannelParams(p01, p11, std::move(poor), std::move(good), throughput);
}

// Reference evaluator: plain top-down recursion with a per-depth map memo.
// Shares nothing with the flattened-tree implementation it checks.
struct NaiveDp {
  const ChannelParams& ch;
  double beta;
  double m;
  std::vector<std::map<long long, double>> value_memo;
  std::vector<std::map<long long, double>> idle_memo;

  NaiveDp(const ChannelParams& c, double b, double subsidy, int horizon)
      : ch(c), beta(b), m(subsidy), value_memo(horizon + 1), idle_memo(horizon + 1) {}

  static long long key(double w) { return llround(w * 4.0e15); }

  double actions(double w, int t, double* passive_out, double* active_out) {
    const double pas = m + beta * value(ch.p11() * w + ch.p01() * (1.0 - w), t - 1);
    double act = ch.throughput() * w;
    for (int i = 1; i <= ch.levels(); ++i) {
      const double p = observation_prob(ch, Belief(w), i);
      if (p <= 0.0) continue;
      act += beta * p * value(active_update(ch, Belief(w), i).value(), t - 1);
    }
    if (passive_out) *passive_out = pas;
    if (active_out) *active_out = act;
    return std::max(pas, act);
  }

  double value(double w, int t) {
    if (t == 0) return 0.0;
    auto& memo = value_memo[t];
    if (auto it = memo.find(key(w)); it != memo.end()) return it->second;
    const double v = actions(w, t, nullptr, nullptr);
    memo.emplace(key(w), v);
    return v;
  }

  // Discounted count of idle slots under the optimal policy, staying idle on
  // exact ties.
  double idle(double w, int t) {
    if (t == 0) return 0.0;
    auto& memo = idle_memo[t];
    if (auto it = memo.find(key(w)); it != memo.end()) return it->second;
    double pas, act;
    actions(w, t, &pas, &act);
    double d;
    if (pas >= act) {
      d = 1.0 + beta * idle(ch.p11() * w + ch.p01() * (1.0 - w), t - 1);
    } else {
      d = 0.0;
      for (int i = 1; i <= ch.levels(); ++i) {
        const double p = observation_prob(ch, Belief(w), i);
        if (p <= 0.0) continue;
        d += beta * p * idle(active_update(ch, Belief(w), i).value(), t - 1);
      }
    }
    memo.emplace(key(w), d);
    return d;
  }
};

}  // namespace

TEST_CASE("horizon value base cases") {
  const ChannelParams ch = two_level(0.3, 0.7);

  const HorizonValue empty = finite_horizon_value(ch, 0.5, 0.9, Belief(0.4), 0);
  CHECK(empty.total == 0.0);
  CHECK(empty.passive == 0.0);
  CHECK(empty.active == 0.0);
  CHECK(passive_time(ch, 0.5, 0.9, Belief(0.4), 0) == 0.0);

  // One slot: idle pays the subsidy, probing pays the belief.
  const HorizonValue one = finite_horizon_value(ch, 0.5, 0.5, Belief(0.3), 1);
  CHECK(one.passive == 0.5);
  CHECK(one.active == 0.3);
  CHECK(one.total == 0.5);

  // Exact tie resolves idle.
  const HorizonValue tie = finite_horizon_value(ch, 0.5, 0.3, Belief(0.3), 1);
  CHECK(tie.total == tie.passive);
  CHECK(passive_time(ch, 0.5, 0.3, Belief(0.3), 1) == 1.0);

  CHECK_THROWS_AS(finite_horizon_value(ch, 1.0, 0.5, Belief(0.3), 1),
                  ValidationError);
  CHECK_THROWS_AS(finite_horizon_value(ch, 0.5, 0.5, Belief(0.3), -1),
                  ValidationError);
}

TEST_CASE("two-slot hand expansion with flat observations") {
  // Flat columns make every continuation identical, so both action values
  // reduce to (immediate) + beta * max(m, next belief).
  const ChannelParams flat = two_level(0.3, 0.8, {0.5, 0.5}, {0.5, 0.5});
  const double beta = 0.5, m = 0.4, w = 0.55;
  const double next = flat.p11() * w + flat.p01() * (1.0 - w);
  const double cont = std::max(m, next);
  const HorizonValue v = finite_horizon_value(flat, beta, m, Belief(w), 2);
  CHECK(v.passive == doctest::Approx(m + beta * cont).epsilon(1e-14));
  CHECK(v.active == doctest::Approx(w + beta * cont).epsilon(1e-14));
  CHECK(v.total == std::max(v.passive, v.active));
}

TEST_CASE("horizon value matches an independent memoized recursion") {
  Rng rng(41);
  double worst = 0.0;
  for (int c = 0; c < 40; ++c) {
    const ChannelParams ch =
        testutil::draw_channel(rng, c % 2 == 0 ? 1 : -1, 1 + c % 3,
                               c % 4 != 0, c % 3 == 0 ? 0.63 : 1.0);
    const double beta = testutil::uni(rng, 0.05, 0.9);
    const double m = testutil::uni(rng, -0.5, 1.5);
    const double w = rng.uniform();
    const int horizon = 1 + c % 6;
    const HorizonValue got = finite_horizon_value(ch, beta, m, Belief(w), horizon);
    CHECK(got.total == std::max(got.passive, got.active));
    NaiveDp ref(ch, beta, m, horizon);
    double pas, act;
    ref.actions(w, horizon, &pas, &act);
    worst = std::max(worst, std::abs(got.passive - pas));
    worst = std::max(worst, std::abs(got.active - act));
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("idle-time accounting matches the independent recursion") {
  Rng rng(42);
  double worst = 0.0;
  for (int c = 0; c < 30; ++c) {
    const ChannelParams ch = testutil::draw_channel(rng, c % 2 == 0 ? 1 : -1);
    const double beta = testutil::uni(rng, 0.05, 0.9);
    const double m = testutil::uni(rng, -0.3, 1.2);
    const double w = rng.uniform();
    const int horizon = 1 + c % 6;
    NaiveDp ref(ch, beta, m, horizon);
    worst = std::max(worst, std::abs(passive_time(ch, beta, m, Belief(w), horizon) -
                                     ref.idle(w, horizon)));
  }
  CHECK(worst <= 1e-10);

  // All-idle and all-probe regimes have closed forms.
  const ChannelParams ch = two_level(0.2, 0.8);
  const double beta = 0.4;
  for (int horizon : {1, 3, 7}) {
    double geo = 0.0, disc = 1.0;
    for (int t = 0; t < horizon; ++t) {
      geo += disc;
      disc *= beta;
    }
    CHECK(passive_time(ch, beta, /*m=*/5.0, Belief(0.5), horizon) ==
          doctest::Approx(geo).epsilon(1e-12));
  }
  CHECK(passive_time(ch, beta, /*m=*/-2.0, Belief(0.5), 1) == 0.0);
}

TEST_CASE("tree reuse over subsidies and the horizon cap") {
  const ChannelParams ch = two_level(0.2, 0.8);
  BeliefTreeDp dp(ch, 0.4, Belief(0.35), 6);
  CHECK(dp.horizon() == 6);
  CHECK(dp.node_count() >= 6);
  for (double m : {-0.5, 0.1, 0.45, 2.0}) {
    const HorizonValue a = dp.value(m);
    const HorizonValue b = finite_horizon_value(ch, 0.4, m, Belief(0.35), 6);
    CHECK(a.total == b.total);
    CHECK(a.passive == b.passive);
    CHECK(a.active == b.active);
    CHECK(dp.passive_time(m) == passive_time(ch, 0.4, m, Belief(0.35), 6));
  }

  CHECK_THROWS_AS(finite_horizon_value(ch, 0.4, 0.0, Belief(0.5), 15),
                  HorizonTooLarge);
  CHECK_THROWS_AS(passive_time(ch, 0.4, 0.0, Belief(0.5), 15), HorizonTooLarge);

  // A single-level observation model keeps the raised-cap tree tiny.
  const ChannelParams blind = ChannelParams(0.2, 0.8, {1.0}, {1.0}, 1.0);
  const HorizonValue deep =
      finite_horizon_value(blind, 0.4, 0.1, Belief(0.5), 15, 16);
  CHECK(deep.total > 0.0);
}

TEST_CASE("bisection recovers the indifference subsidy") {
  const ChannelParams flat = two_level(0.3, 0.7, {0.5, 0.5}, {0.5, 0.5});
  CHECK(std::abs(oracle_whittle(flat, 0.4, Belief(0.42), 12, 1e-6) - 0.42) <=
        1e-6);

  const ChannelParams ch = two_level(0.1, 0.9);
  const double beta = 0.3;
  const double b12 = oracle_whittle(ch, beta, Belief(0.25), 12, 1e-6);
  const double b13 = oracle_whittle(ch, beta, Belief(0.25), 13, 1e-6);
  CHECK(std::abs(b13 - b12) <=
        std::pow(beta, 12) / (1.0 - beta) + 2e-6);

  // The returned subsidy really is the preference switch point.
  const double m_star = oracle_whittle(ch, beta, Belief(0.25), 12, 1e-7);
  const HorizonValue below =
      finite_horizon_value(ch, beta, m_star - 1e-3, Belief(0.25), 12);
  const HorizonValue above =
      finite_horizon_value(ch, beta, m_star + 1e-3, Belief(0.25), 12);
  CHECK(below.active > below.passive);
  CHECK(above.passive > above.active);

  // Throughput scales the whole subsidy axis.
  const ChannelParams scaled = two_level(0.1, 0.9, {0.9, 0.1}, {0.1, 0.9}, 2.0);
  CHECK(std::abs(oracle_whittle(scaled, beta, Belief(0.25), 12, 1e-7) -
                 2.0 * m_star) <= 4e-7 + 1e-9);

  // Within the proven discount range the approximation lands close.
  Rng rng(43);
  for (int c = 0; c < 5; ++c) {
    const ChannelParams rch = testutil::draw_channel(rng, c % 2 == 0 ? 1 : -1);
    const double b = 0.8 * beta_bound(rch);
    const double w = rng.uniform();
    const double ora = oracle_whittle(rch, b, Belief(w), 12, 1e-6);
    const double approx = approx_whittle(rch, b, Belief(w), 3).value;
    CHECK(std::abs(approx - ora) <= 0.1);
  }
}

TEST_CASE("threshold scans find a single crossing under the proven discount") {
  Rng rng(44);
  for (int c = 0; c < 12; ++c) {
    const ChannelParams ch = testutil::draw_channel(rng, c % 2 == 0 ? 1 : -1);
    const double beta = 0.9 * beta_bound(ch);
    const double m = testutil::uni(rng, -0.2, 1.2);
    const ThresholdScan scan = threshold_scan(ch, beta, m, 8, 201);
    CHECK(!scan.structure_violation);
    REQUIRE(scan.threshold.has_value());
    // Independent re-check at a few grid points on each side.
    for (int j = 0; j <= 10; ++j) {
      const double w = j / 10.0;
      if (std::abs(w - *scan.threshold) < 0.5 / 200.0) continue;
      const HorizonValue v = finite_horizon_value(ch, beta, m, Belief(w), 8);
      if (w < *scan.threshold) {
        CHECK(v.passive >= v.active);
      } else {
        CHECK(v.active > v.passive);
      }
    }
  }

  const ChannelParams ch = two_level(0.2, 0.8);
  const ThresholdScan all_idle = threshold_scan(ch, 0.4, /*m=*/2.0, 8, 101);
  REQUIRE(all_idle.threshold.has_value());
  CHECK(*all_idle.threshold == 1.0);
  const ThresholdScan all_probe = threshold_scan(ch, 0.4, /*m=*/-0.5, 8, 101);
  REQUIRE(all_probe.threshold.has_value());
  CHECK(*all_probe.threshold == 0.0);

  CHECK_THROWS_AS(threshold_scan(ch, 0.4, 0.3, 8, 2), ValidationError);
}

TEST_CASE("passive regions nest as the subsidy grows") {
  const ChannelParams ch = two_level(0.15, 0.75);

  const IndexabilityReport single =
      indexability_probe(ch, 0.3, {0.4}, 8, 51);
  CHECK(single.scans.size() == 1);
  CHECK(single.monotone);
  CHECK(single.nested);

  std::vector<double> grid;
  for (int j = 0; j <= 12; ++j) grid.push_back(-0.2 + 1.4 * j / 12.0);
  const IndexabilityReport rep = indexability_probe(ch, 0.3, grid, 8, 101);
  CHECK(rep.scans.size() == grid.size());
  CHECK(!rep.any_violation);
  CHECK(rep.monotone);
  CHECK(rep.nested);

  CHECK_THROWS_AS(indexability_probe(ch, 0.3, {}, 8, 51), ValidationError);
  CHECK_THROWS_AS(indexability_probe(ch, 0.3, {0.5, 0.1}, 8, 51),
                  ValidationError);

  // Outside the proven range the probe reports without judging.
  const IndexabilityReport wild = indexability_probe(ch, 0.9, grid, 8, 51);
  CHECK(wild.scans.size() == grid.size());
}

TEST_CASE("smoothness constant and horizon truncation bound formulas") {
  const ChannelParams ch = two_level(0.1, 0.9);  // gap 0.8, signal mass 0.8
  const double beta = 0.3;
  CHECK(lipschitz_constant(ch, beta) ==
        doctest::Approx(1.0 / (1.0 - beta * 0.8 * (1.0 + 2.0 * 0.8)))
            .epsilon(1e-12));
  CHECK(lipschitz_constant(ch, 0.9) == std::numeric_limits<double>::infinity());

  const ChannelParams wide = two_level(0.1, 0.9, {0.9, 0.1}, {0.1, 0.9}, 0.83);
  CHECK(truncation_bound(wide, 0.4, 7) ==
        doctest::Approx(std::pow(0.4, 7) * 0.83 / 0.6).epsilon(1e-12));
  CHECK(truncation_bound(wide, 0.4, 0) ==
        doctest::Approx(0.83 / 0.6).epsilon(1e-12));
}
