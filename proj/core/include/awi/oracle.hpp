#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "awi/belief.hpp"

namespace awi {

// Horizon defaults for the exact single-arm evaluator. The reachable belief
// tree has up to (K+1)^depth nodes before deduplication, so the cap is hard.
inline constexpr int kDefaultOracleHorizon = 12;
inline constexpr int kOracleHorizonCap = 14;
inline constexpr double kDefaultBisectTol = 1e-7;
inline constexpr int kBisectMaxIter = 80;

struct HorizonValue {
  double total = 0.0;    // max of the two action values at the root
  double passive = 0.0;  // value of staying idle this slot
  double active = 0.0;   // value of probing this slot
};

// Exact T-slot evaluator for one subsidized arm. The reachable belief tree is
// flattened once per (channel, beta, root, horizon); its shape does not
// depend on the subsidy m, so value sweeps over m reuse the same tree and
// cost O(nodes) each.
class BeliefTreeDp {
 public:
  BeliefTreeDp(const ChannelParams& ch, double beta, Belief root, int horizon,
               int horizon_cap = kOracleHorizonCap);

  // Optimal value at the root for subsidy m, with both action values.
  HorizonValue value(double m) const;

  // Expected discounted number of passive slots under the optimal policy for
  // subsidy m (ties resolved passive, matching value()).
  double passive_time(double m) const;

  std::size_t node_count() const noexcept;
  int horizon() const noexcept { return horizon_; }

 private:
  struct Level {
    std::vector<double> belief;
    // Per node: K+1 child slots into the next level (passive, then one per
    // CQI level); -1 marks a zero-probability branch. Empty on the last level.
    std::vector<std::int32_t> child;
  };

  void backward_values(double m, std::vector<std::vector<double>>* all_levels,
                       HorizonValue* root_out) const;

  ChannelParams ch_;
  double beta_;
  int horizon_;
  std::vector<Level> levels_;
};

// One-shot helpers on top of BeliefTreeDp.
HorizonValue finite_horizon_value(const ChannelParams& ch, double beta, double m,
                                  Belief w, int horizon,
                                  int horizon_cap = kOracleHorizonCap);
double passive_time(const ChannelParams& ch, double beta, double m, Belief w,
                    int horizon, int horizon_cap = kOracleHorizonCap);

// Subsidy that equalizes the two action values at w, located by bisection on
// [-B/(1-beta), B/(1-beta)]. This is the finite-horizon reference index the
// approximation is judged against.
double oracle_whittle(const ChannelParams& ch, double beta, Belief w, int horizon,
                      double tol = kDefaultBisectTol,
                      int horizon_cap = kOracleHorizonCap);

// Optimal-action pattern over a belief grid at fixed subsidy. A clean
// threshold policy shows as passive* active*; the scan reports the midpoint
// of the bracketing cell, 0.0 if every grid point is active, 1.0 if every
// point is passive, and flags any interleaving as a structure violation.
struct ThresholdScan {
  double m = 0.0;
  int grid_points = 0;
  std::optional<double> threshold;
  bool structure_violation = false;
};

ThresholdScan threshold_scan(const ChannelParams& ch, double beta, double m,
                             int horizon, int grid_points);

// Threshold scans across a subsidy grid; monotone expansion of the passive
// region as m grows is the indexability property. Each grid belief's tree is
// built once and swept over every subsidy, so the probe costs roughly one
// scan regardless of the subsidy grid size.
struct IndexabilityReport {
  std::vector<ThresholdScan> scans;
  bool any_violation = false;
  // Thresholds nondecreasing in m up to one grid cell of slack; computed
  // over the scans with clean threshold structure.
  bool monotone = true;
  // Set-wise nesting of the passive region as m grows: once a grid belief
  // goes passive it stays passive for every larger subsidy. This is the
  // indexability property itself and needs no threshold structure.
  bool nested = true;
};

IndexabilityReport indexability_probe(const ChannelParams& ch, double beta,
                                      const std::vector<double>& m_grid,
                                      int horizon, int grid_points);

// Lipschitz constant of the value function in the belief argument; finite
// only when beta is small enough for the contraction argument to close.
double lipschitz_constant(const ChannelParams& ch, double beta);

// Value left on the table by stopping the horizon at T slots.
double truncation_bound(const ChannelParams& ch, double beta, int horizon);

}  // namespace awi
