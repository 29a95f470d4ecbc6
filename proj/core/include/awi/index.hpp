#pragma once

#include <optional>
#include <vector>

#include "awi/belief.hpp"

namespace awi {

// Deepest value-expansion recursion the index accepts. Past this depth the
// K^n tree blows up and the gain is below simulation noise.
inline constexpr int kMaxIterationDepth = 8;

// Denominator guard for the index ratio; below it the closed form is
// ill-conditioned and the myopic fallback is returned instead.
inline constexpr double kDefaultDenominatorEps = 1e-9;

// Number of unobserved slots until the belief first exceeds a threshold.
// May be infinite (the belief converges without ever crossing).
class CrossingTime {
 public:
  static CrossingTime finite(long steps) { return CrossingTime(steps); }
  static CrossingTime infinite() { return CrossingTime(-1); }

  bool is_infinite() const noexcept { return steps_ < 0; }
  // Valid only when finite.
  long steps() const;

  friend bool operator==(CrossingTime a, CrossingTime b) noexcept {
    return a.steps_ == b.steps_;
  }

 private:
  explicit CrossingTime(long s) : steps_(s) {}
  long steps_;
};

// Smallest k >= 0 with T^k(belief) strictly above threshold, where T is the
// passive update. Exact-integer semantics: agrees with step-by-step iteration
// wherever that iteration terminates.
CrossingTime first_crossing_time(const ChannelParams& ch, Belief belief,
                                 Belief threshold);

// One-node pieces of the value expansion under a threshold policy: starting
// from `belief` with activation threshold `threshold`, the arm stays passive
// for L slots and is probed at belief Omega = T^L(belief).
//
//   V(belief) = subsidy_weight * m + activation_discount * R(Omega)
//               + sum_i continuation_weights[i] * V(successor_beliefs[i])
//
// When the crossing never happens, subsidy_weight = 1/(1-beta) and the other
// coefficients are zero (the arm is passive forever; the tail is exact, not
// truncated).
struct ExpansionCoeffs {
  CrossingTime crossing = CrossingTime::infinite();
  double subsidy_weight = 0.0;      // (1 - beta^L) / (1 - beta)
  double activation_discount = 0.0; // beta^L
  std::vector<double> continuation_weights;  // beta^(L+1) * P(cqi = i at Omega)
  std::optional<Belief> activation;          // Omega; empty when never crossing
  std::vector<std::optional<Belief>> successor_beliefs;  // empty slot if weight 0
};

ExpansionCoeffs expansion_coeffs(const ChannelParams& ch, double beta,
                                 Belief belief, Belief threshold);

// The n-step truncated expansion is affine in the subsidy m:
//   V_n(belief) = subsidy_coeff * m + offset.
struct AffineValue {
  double subsidy_coeff = 0.0;
  double offset = 0.0;
};

AffineValue affine_value(const ChannelParams& ch, double beta, Belief belief,
                         Belief threshold, int n_iterations);

enum class IndexKind {
  kApproxWhittle,    // closed-form ratio was well conditioned
  kFallbackMyopic,   // denominator under eps; throughput-scaled belief used
};

struct IndexResult {
  double value = 0.0;
  IndexKind kind = IndexKind::kApproxWhittle;
};

// Approximated Whittle index at belief w, using the n-iteration value
// expansion with the activation threshold placed at w itself. Scaled by the
// channel's throughput.
IndexResult approx_whittle(const ChannelParams& ch, double beta, Belief w,
                           int n_iterations,
                           double denominator_eps = kDefaultDenominatorEps);

// Zero-iteration special case; kept as its own entry point because it is the
// natural baseline. Agrees with approx_whittle(..., 0) bit for bit.
IndexResult imperfect_whittle(const ChannelParams& ch, double beta, Belief w,
                              double denominator_eps = kDefaultDenominatorEps);

// Largest discount factor for which the index's threshold/indexability
// guarantees are proven, never above 0.5.
double beta_bound(const ChannelParams& ch);

// Min of beta_bound over a set of channels.
double system_beta_bound(const std::vector<ChannelParams>& channels);

}  // namespace awi
