#pragma once

#include <vector>

#include "awi/errors.hpp"

namespace awi {

// Probability that a two-state channel is in the good state, conditioned on
// the decision maker's observation history. Construction clamps values within
// 1e-12 of [0,1] (filter round-off) and rejects anything further out.
class Belief {
 public:
  explicit Belief(double omega);

  double value() const noexcept { return v_; }
  operator double() const noexcept { return v_; }

 private:
  double v_;
};

inline constexpr double kBeliefClampTol = 1e-12;

// Two-state Markov channel (0 = poor, 1 = good) with a K-level soft
// observation model and a per-slot throughput earned when the channel is used
// while good. CQI levels are 1-based throughout.
class ChannelParams {
 public:
  ChannelParams(double p01, double p11, std::vector<double> obs_given_poor,
                std::vector<double> obs_given_good, double throughput);

  double p01() const noexcept { return p01_; }
  double p11() const noexcept { return p11_; }
  int levels() const noexcept { return static_cast<int>(obs_good_.size()); }
  double throughput() const noexcept { return throughput_; }

  // Likelihood of CQI level i (1-based) given the true channel state.
  double obs_given_good(int level) const;
  double obs_given_poor(int level) const;

 private:
  double p01_;
  double p11_;
  double throughput_;
  std::vector<double> obs_poor_;
  std::vector<double> obs_good_;
};

// Quantities derived from the transition/observation parameters that the
// index and oracle math keep reaching for.
struct DerivedChannelQuantities {
  double memory;        // p11 - p01; sign picks the positively/negatively correlated regime
  double steady_state;  // fixed point of the passive update
  std::vector<int> positive_levels;  // CQI levels with obs_given_good >= obs_given_poor
  std::vector<int> negative_levels;  // the rest
  double positive_mass;              // sum over positive_levels of (good - poor) likelihood gap
};

DerivedChannelQuantities derive_quantities(const ChannelParams& ch);

// One slot of unobserved Markov evolution: T(w) = p11*w + p01*(1-w).
Belief passive_update(const ChannelParams& ch, Belief w);

// k slots of unobserved evolution in closed form; k = 0 returns w unchanged.
Belief passive_update_k(const ChannelParams& ch, Belief w, long k);

// Fixed point of the passive update.
Belief steady_state(const ChannelParams& ch);

// Probability of observing CQI level i next slot given belief w now.
double observation_prob(const ChannelParams& ch, Belief w, int cqi);

// Bayes posterior on the *current* state after seeing CQI level i.
Belief bayes_filter(const ChannelParams& ch, Belief w, int cqi);

// Posterior pushed through one transition: the belief entering the next slot
// after the channel was probed and level i came back.
Belief active_update(const ChannelParams& ch, Belief w, int cqi);

}  // namespace awi
