#include "awi/belief.hpp"

#include <cmath>
#include <string>

namespace awi {

Belief::Belief(double omega) {
  if (!(omega >= -kBeliefClampTol && omega <= 1.0 + kBeliefClampTol)) {
    throw ValidationError("belief " + std::to_string(omega) +
                          " outside [0,1] beyond clamp tolerance");
  }
  v_ = omega < 0.0 ? 0.0 : (omega > 1.0 ? 1.0 : omega);
}

namespace {

bool is_prob(double x) { return x >= 0.0 && x <= 1.0; }

void validate_obs_column(const std::vector<double>& col, const char* which) {
  if (col.empty()) {
    throw ValidationError(std::string("empty observation column for ") + which);
  }
  double sum = 0.0;
  for (double p : col) {
    if (!is_prob(p)) {
      throw ValidationError(std::string("observation likelihood outside [0,1] for ") + which);
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw ValidationError(std::string("observation column for ") + which +
                          " sums to " + std::to_string(sum) + ", expected 1");
  }
}

}  // namespace

ChannelParams::ChannelParams(double p01, double p11,
                             std::vector<double> obs_given_poor,
                             std::vector<double> obs_given_good,
                             double throughput)
    : p01_(p01),
      p11_(p11),
      throughput_(throughput),
      obs_poor_(std::move(obs_given_poor)),
      obs_good_(std::move(obs_given_good)) {
  if (!(p01_ > 0.0 && p01_ < 1.0) || !(p11_ > 0.0 && p11_ < 1.0)) {
    throw ValidationError("transition probabilities must lie strictly inside (0,1)");
  }
  if (p01_ == p11_) {
    // Degenerate memoryless channel: the crossing-time and index math divides
    // by p11 - p01, so reject it up front rather than NaN later.
    throw ValidationError("p01 == p11 is not supported (memoryless channel)");
  }
  if (!(throughput_ > 0.0)) {
    throw ValidationError("throughput must be positive");
  }
  if (obs_poor_.size() != obs_good_.size()) {
    throw ValidationError("observation columns must have the same number of levels");
  }
  validate_obs_column(obs_poor_, "poor state");
  validate_obs_column(obs_good_, "good state");
}

double ChannelParams::obs_given_good(int level) const {
  if (level < 1 || level > levels()) {
    throw ValidationError("CQI level " + std::to_string(level) + " outside 1.." +
                          std::to_string(levels()));
  }
  return obs_good_[static_cast<std::size_t>(level - 1)];
}

double ChannelParams::obs_given_poor(int level) const {
  if (level < 1 || level > levels()) {
    throw ValidationError("CQI level " + std::to_string(level) + " outside 1.." +
                          std::to_string(levels()));
  }
  return obs_poor_[static_cast<std::size_t>(level - 1)];
}

DerivedChannelQuantities derive_quantities(const ChannelParams& ch) {
  DerivedChannelQuantities d;
  d.memory = ch.p11() - ch.p01();
  d.steady_state = steady_state(ch);
  d.positive_mass = 0.0;
  for (int i = 1; i <= ch.levels(); ++i) {
    double gap = ch.obs_given_good(i) - ch.obs_given_poor(i);
    if (gap >= 0.0) {
      d.positive_levels.push_back(i);
      d.positive_mass += gap;
    } else {
      d.negative_levels.push_back(i);
    }
  }
  return d;
}

Belief passive_update(const ChannelParams& ch, Belief w) {
  return Belief(ch.p11() * w.value() + ch.p01() * (1.0 - w.value()));
}

Belief passive_update_k(const ChannelParams& ch, Belief w, long k) {
  if (k < 0) throw ValidationError("passive_update_k requires k >= 0");
  if (k == 0) return w;
  // T^k(w) = ws - (p11 - p01)^k * (ws - w), with ws the steady state.
  const double ws = steady_state(ch).value();
  const double pd = ch.p11() - ch.p01();
  double mag = std::pow(std::abs(pd), static_cast<double>(k));
  double sign = (pd < 0.0 && (k % 2 != 0)) ? -1.0 : 1.0;
  return Belief(ws - sign * mag * (ws - w.value()));
}

Belief steady_state(const ChannelParams& ch) {
  return Belief(ch.p01() / (1.0 + ch.p01() - ch.p11()));
}

double observation_prob(const ChannelParams& ch, Belief w, int cqi) {
  return ch.obs_given_good(cqi) * w.value() +
         ch.obs_given_poor(cqi) * (1.0 - w.value());
}

Belief bayes_filter(const ChannelParams& ch, Belief w, int cqi) {
  const double mass = observation_prob(ch, w, cqi);
  if (mass <= 0.0) {
    throw ZeroLikelihood("CQI level " + std::to_string(cqi) +
                         " has zero probability under the current belief");
  }
  return Belief(ch.obs_given_good(cqi) * w.value() / mass);
}

Belief active_update(const ChannelParams& ch, Belief w, int cqi) {
  return passive_update(ch, bayes_filter(ch, w, cqi));
}

}  // namespace awi
