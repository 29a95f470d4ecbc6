#include "awi/index.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace awi {

long CrossingTime::steps() const {
  if (is_infinite()) throw ValidationError("steps() on an infinite crossing time");
  return steps_;
}

namespace {

// Beyond this many slots the crossing is located with the closed form for
// T^k instead of stepping; below it, stepping keeps results bit-identical to
// naive iteration.
constexpr long kDirectScanLimit = 64;
constexpr long kDirectRefineLimit = 16384;

double pow_int(double base, long e) {
  double r = 1.0;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

void check_beta(double beta) {
  if (!(beta > 0.0 && beta < 1.0)) {
    throw ValidationError("beta must lie strictly inside (0,1), got " +
                          std::to_string(beta));
  }
}

void check_iterations(int n) {
  if (n < 0 || n > kMaxIterationDepth) {
    throw ValidationError("iteration depth must lie in 0.." +
                          std::to_string(kMaxIterationDepth) + ", got " +
                          std::to_string(n));
  }
}

// Crossing time of the passive-update orbit over `threshold`, plus the belief
// at the crossing slot. Steps directly for short horizons (bit-identical to
// naive iteration); for long ones, jumps via the closed form
// T^k(w) = ws - (p11-p01)^k (ws - w) and then fixes the floor-log candidate
// up or down until it is exact.
CrossingTime crossing_with_activation(const ChannelParams& ch, double from,
                                      double threshold, double* activation) {
  if (from > threshold) {
    if (activation) *activation = from;
    return CrossingTime::finite(0);
  }
  const double p11 = ch.p11();
  const double p01 = ch.p01();
  double x = from;
  for (long k = 1; k <= kDirectScanLimit; ++k) {
    x = p11 * x + p01 * (1.0 - x);
    if (x > threshold) {
      if (activation) *activation = x;
      return CrossingTime::finite(k);
    }
  }
  const double ws = p01 / (1.0 + p01 - p11);
  // Round-off shadow around the fixed point: the iterated orbit's own
  // stationary point can sit a few ulps away from the closed-form ws, so
  // thresholds hugging it are resolved by stepping until the orbit either
  // crosses or stalls (keeping exact agreement with naive iteration).
  const double shadow = ws + 1e-9;
  if (p11 < p01) {
    // Oscillating regime: the first iterate is the supremum of the orbit, so
    // past the scan only the shadow band is ever in doubt. Follow the
    // monotone two-step suborbit there.
    if (threshold >= shadow) return CrossingTime::infinite();
    long k = kDirectScanLimit;
    while (true) {
      const double a = p11 * x + p01 * (1.0 - x);
      if (a > threshold) {
        if (activation) *activation = a;
        return CrossingTime::finite(k + 1);
      }
      const double b = p11 * a + p01 * (1.0 - a);
      if (b > threshold) {
        if (activation) *activation = b;
        return CrossingTime::finite(k + 2);
      }
      if (b <= x) return CrossingTime::infinite();
      x = b;
      k += 2;
    }
  }
  if (threshold >= ws) {
    if (threshold >= shadow) return CrossingTime::infinite();
    long k = kDirectScanLimit;
    while (true) {
      const double next = p11 * x + p01 * (1.0 - x);
      if (next > threshold) {
        if (activation) *activation = next;
        return CrossingTime::finite(k + 1);
      }
      if (next <= x) return CrossingTime::infinite();
      x = next;
      ++k;
    }
  }
  // threshold < ws: a crossing exists. Remaining steps r from x satisfy
  // (p11-p01)^r < (ws - threshold)/(ws - x).
  const double pd = p11 - p01;
  double cand = std::floor(std::log((ws - threshold) / (ws - x)) / std::log(pd)) + 1.0;
  if (!(cand >= 1.0)) cand = 1.0;
  if (!(cand <= 1e15)) cand = 1e15;
  if (kDirectScanLimit + static_cast<long>(cand) <= kDirectRefineLimit) {
    const long guard = kDirectScanLimit + static_cast<long>(cand) + 64;
    for (long k = kDirectScanLimit + 1; k <= guard; ++k) {
      x = p11 * x + p01 * (1.0 - x);
      if (x > threshold) {
        if (activation) *activation = x;
        return CrossingTime::finite(k);
      }
    }
    // The iteration stalled inside the threshold's round-off shadow; fall
    // through to the closed form.
  }
  long k = kDirectScanLimit + static_cast<long>(cand);
  auto hop = [&](long steps) {
    return passive_update_k(ch, Belief(from), steps).value();
  };
  while (k > 1 && hop(k - 1) > threshold) --k;
  while (!(hop(k) > threshold)) ++k;
  if (activation) *activation = hop(k);
  return CrossingTime::finite(k);
}

struct KA {
  double subsidy_coeff;
  double offset;
};

// n-iteration affine expansion of the threshold-policy value at `from`:
// V_n = subsidy_coeff * m + offset. Never-crossing nodes contribute the exact
// all-passive tail m/(1-beta) and stop the recursion regardless of n.
KA expand(const ChannelParams& ch, double beta, double from, double threshold,
          int n) {
  double act;
  const CrossingTime cross = crossing_with_activation(ch, from, threshold, &act);
  if (cross.is_infinite()) return {1.0 / (1.0 - beta), 0.0};
  const double bl = pow_int(beta, cross.steps());
  KA out{(1.0 - bl) / (1.0 - beta), bl * act};
  if (n > 0) {
    const Belief omega(act);
    const double w = beta * bl;
    for (int i = 1; i <= ch.levels(); ++i) {
      const double p = observation_prob(ch, omega, i);
      if (p <= 0.0) continue;
      const KA child =
          expand(ch, beta, active_update(ch, omega, i).value(), threshold, n - 1);
      out.subsidy_coeff += w * p * child.subsidy_coeff;
      out.offset += w * p * child.offset;
    }
  }
  return out;
}

}  // namespace

CrossingTime first_crossing_time(const ChannelParams& ch, Belief belief,
                                 Belief threshold) {
  return crossing_with_activation(ch, belief.value(), threshold.value(), nullptr);
}

ExpansionCoeffs expansion_coeffs(const ChannelParams& ch, double beta,
                                 Belief belief, Belief threshold) {
  check_beta(beta);
  const int K = ch.levels();
  ExpansionCoeffs e;
  e.continuation_weights.assign(static_cast<std::size_t>(K), 0.0);
  e.successor_beliefs.assign(static_cast<std::size_t>(K), std::nullopt);
  double act;
  e.crossing = crossing_with_activation(ch, belief.value(), threshold.value(), &act);
  if (e.crossing.is_infinite()) {
    e.subsidy_weight = 1.0 / (1.0 - beta);
    e.activation_discount = 0.0;
    return e;
  }
  const double bl = pow_int(beta, e.crossing.steps());
  e.subsidy_weight = (1.0 - bl) / (1.0 - beta);
  e.activation_discount = bl;
  e.activation = Belief(act);
  for (int i = 1; i <= K; ++i) {
    const double p = observation_prob(ch, *e.activation, i);
    if (p <= 0.0) continue;
    e.continuation_weights[static_cast<std::size_t>(i - 1)] = beta * bl * p;
    e.successor_beliefs[static_cast<std::size_t>(i - 1)] =
        active_update(ch, *e.activation, i);
  }
  return e;
}

AffineValue affine_value(const ChannelParams& ch, double beta, Belief belief,
                         Belief threshold, int n_iterations) {
  check_beta(beta);
  check_iterations(n_iterations);
  const KA ka = expand(ch, beta, belief.value(), threshold.value(), n_iterations);
  return {ka.subsidy_coeff, ka.offset};
}

IndexResult approx_whittle(const ChannelParams& ch, double beta, Belief w,
                           int n_iterations, double denominator_eps) {
  check_beta(beta);
  check_iterations(n_iterations);
  if (!(denominator_eps > 0.0)) {
    throw ValidationError("denominator_eps must be positive");
  }
  // Activation threshold sits at the queried belief itself: the subsidy that
  // makes w indifferent is read off the affine pieces of both actions'
  // continuations.
  const double wt = w.value();
  const KA passive_cont =
      expand(ch, beta, passive_update(ch, w).value(), wt, n_iterations);
  double num = wt - beta * passive_cont.offset;
  double den = 1.0 + beta * passive_cont.subsidy_coeff;
  for (int i = 1; i <= ch.levels(); ++i) {
    const double p = observation_prob(ch, w, i);
    if (p <= 0.0) continue;
    const KA active_cont =
        expand(ch, beta, active_update(ch, w, i).value(), wt, n_iterations);
    num += beta * p * active_cont.offset;
    den -= beta * p * active_cont.subsidy_coeff;
  }
  if (std::abs(den) <= denominator_eps) {
    return {ch.throughput() * wt, IndexKind::kFallbackMyopic};
  }
  // Throughput is a pure postfactor, so rescaling a channel rescales its
  // index exactly.
  return {ch.throughput() * (num / den), IndexKind::kApproxWhittle};
}

IndexResult imperfect_whittle(const ChannelParams& ch, double beta, Belief w,
                              double denominator_eps) {
  return approx_whittle(ch, beta, w, 0, denominator_eps);
}

double beta_bound(const ChannelParams& ch) {
  const DerivedChannelQuantities d = derive_quantities(ch);
  const double pd = std::abs(d.memory);
  const double raw = d.memory > 0.0
                         ? 1.0 / (2.0 * pd * (1.0 + d.positive_mass))
                         : 1.0 / (pd * (3.0 + 4.0 * d.positive_mass));
  return std::min(raw, 0.5);
}

double system_beta_bound(const std::vector<ChannelParams>& channels) {
  if (channels.empty()) {
    throw ValidationError("system_beta_bound requires at least one channel");
  }
  double b = 1.0;
  for (const ChannelParams& ch : channels) b = std::min(b, beta_bound(ch));
  return b;
}

}  // namespace awi
