#include "awi/oracle.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <unordered_map>

#include "awi/index.hpp"

namespace awi {

namespace {

void check_beta(double beta) {
  if (!(beta > 0.0 && beta < 1.0)) {
    throw ValidationError("beta must lie strictly inside (0,1), got " +
                          std::to_string(beta));
  }
}

// Beliefs within 1e-12 of each other share a tree node.
std::int64_t belief_key(double w) {
  return static_cast<std::int64_t>(std::llround(w * 1e12));
}

}  // namespace

BeliefTreeDp::BeliefTreeDp(const ChannelParams& ch, double beta, Belief root,
                           int horizon, int horizon_cap)
    : ch_(ch), beta_(beta), horizon_(horizon) {
  check_beta(beta);
  if (horizon < 1) throw ValidationError("horizon must be at least 1");
  if (horizon > horizon_cap) {
    throw HorizonTooLarge("horizon " + std::to_string(horizon) +
                          " exceeds cap " + std::to_string(horizon_cap));
  }
  const int K = ch_.levels();
  levels_.resize(static_cast<std::size_t>(horizon_));
  levels_[0].belief.push_back(root.value());
  for (int d = 0; d + 1 < horizon_; ++d) {
    Level& cur = levels_[static_cast<std::size_t>(d)];
    Level& nxt = levels_[static_cast<std::size_t>(d + 1)];
    std::unordered_map<std::int64_t, std::int32_t> interned;
    interned.reserve(cur.belief.size() * static_cast<std::size_t>(K + 1));
    cur.child.assign(cur.belief.size() * static_cast<std::size_t>(K + 1), -1);
    auto intern = [&](double w) {
      auto [it, inserted] = interned.try_emplace(
          belief_key(w), static_cast<std::int32_t>(nxt.belief.size()));
      if (inserted) nxt.belief.push_back(w);
      return it->second;
    };
    for (std::size_t j = 0; j < cur.belief.size(); ++j) {
      const Belief w(cur.belief[j]);
      std::int32_t* row = &cur.child[j * static_cast<std::size_t>(K + 1)];
      row[0] = intern(passive_update(ch_, w).value());
      for (int i = 1; i <= K; ++i) {
        if (observation_prob(ch_, w, i) > 0.0) {
          row[i] = intern(active_update(ch_, w, i).value());
        }
      }
    }
  }
}

std::size_t BeliefTreeDp::node_count() const noexcept {
  std::size_t n = 0;
  for (const Level& lv : levels_) n += lv.belief.size();
  return n;
}

void BeliefTreeDp::backward_values(double m,
                                   std::vector<std::vector<double>>* all_levels,
                                   HorizonValue* root_out) const {
  const int K = ch_.levels();
  const double B = ch_.throughput();
  const int T = horizon_;
  if (all_levels) all_levels->assign(static_cast<std::size_t>(T), {});

  const Level& last = levels_[static_cast<std::size_t>(T - 1)];
  std::vector<double> next(last.belief.size());
  for (std::size_t j = 0; j < last.belief.size(); ++j) {
    next[j] = std::max(m, B * last.belief[j]);
  }
  if (root_out && T == 1) {
    root_out->passive = m;
    root_out->active = B * last.belief[0];
    root_out->total = std::max(root_out->passive, root_out->active);
  }
  if (all_levels) (*all_levels)[static_cast<std::size_t>(T - 1)] = next;

  std::vector<double> cur;
  for (int d = T - 2; d >= 0; --d) {
    const Level& lv = levels_[static_cast<std::size_t>(d)];
    cur.resize(lv.belief.size());
    for (std::size_t j = 0; j < lv.belief.size(); ++j) {
      const double w = lv.belief[j];
      const std::int32_t* row = &lv.child[j * static_cast<std::size_t>(K + 1)];
      const double pas = m + beta_ * next[static_cast<std::size_t>(row[0])];
      double act = B * w;
      for (int i = 1; i <= K; ++i) {
        if (row[i] >= 0) {
          act += beta_ * observation_prob(ch_, Belief(w), i) *
                 next[static_cast<std::size_t>(row[i])];
        }
      }
      cur[j] = std::max(pas, act);
      if (d == 0 && root_out) {
        root_out->passive = pas;
        root_out->active = act;
        root_out->total = cur[j];
      }
    }
    if (all_levels) (*all_levels)[static_cast<std::size_t>(d)] = cur;
    std::swap(next, cur);
  }
}

HorizonValue BeliefTreeDp::value(double m) const {
  HorizonValue out;
  backward_values(m, nullptr, &out);
  return out;
}

double BeliefTreeDp::passive_time(double m) const {
  const int K = ch_.levels();
  const double B = ch_.throughput();
  const int T = horizon_;
  std::vector<std::vector<double>> V;
  backward_values(m, &V, nullptr);

  const Level& last = levels_[static_cast<std::size_t>(T - 1)];
  std::vector<double> next(last.belief.size());
  for (std::size_t j = 0; j < last.belief.size(); ++j) {
    next[j] = (m >= B * last.belief[j]) ? 1.0 : 0.0;
  }
  std::vector<double> cur;
  for (int d = T - 2; d >= 0; --d) {
    const Level& lv = levels_[static_cast<std::size_t>(d)];
    const std::vector<double>& vnext = V[static_cast<std::size_t>(d + 1)];
    cur.resize(lv.belief.size());
    for (std::size_t j = 0; j < lv.belief.size(); ++j) {
      const double w = lv.belief[j];
      const std::int32_t* row = &lv.child[j * static_cast<std::size_t>(K + 1)];
      const double pas = m + beta_ * vnext[static_cast<std::size_t>(row[0])];
      double act = B * w;
      double act_cont = 0.0;
      for (int i = 1; i <= K; ++i) {
        if (row[i] >= 0) {
          const double p = observation_prob(ch_, Belief(w), i);
          act += beta_ * p * vnext[static_cast<std::size_t>(row[i])];
          act_cont += p * next[static_cast<std::size_t>(row[i])];
        }
      }
      cur[j] = (pas >= act) ? 1.0 + beta_ * next[static_cast<std::size_t>(row[0])]
                            : beta_ * act_cont;
    }
    std::swap(next, cur);
  }
  return next[0];
}

HorizonValue finite_horizon_value(const ChannelParams& ch, double beta, double m,
                                  Belief w, int horizon, int horizon_cap) {
  if (horizon == 0) {
    check_beta(beta);
    return {0.0, 0.0, 0.0};  // empty horizon earns nothing either way
  }
  return BeliefTreeDp(ch, beta, w, horizon, horizon_cap).value(m);
}

double passive_time(const ChannelParams& ch, double beta, double m, Belief w,
                    int horizon, int horizon_cap) {
  if (horizon == 0) {
    check_beta(beta);
    return 0.0;
  }
  return BeliefTreeDp(ch, beta, w, horizon, horizon_cap).passive_time(m);
}

double oracle_whittle(const ChannelParams& ch, double beta, Belief w, int horizon,
                      double tol, int horizon_cap) {
  if (!(tol > 0.0)) throw ValidationError("bisection tolerance must be positive");
  const BeliefTreeDp dp(ch, beta, w, horizon, horizon_cap);
  const double span = ch.throughput() / (1.0 - beta);
  double lo = -span;
  double hi = span;
  auto indifference_gap = [&](double m) {
    const HorizonValue v = dp.value(m);
    return v.passive - v.active;
  };
  if (indifference_gap(lo) > 0.0 || indifference_gap(hi) < 0.0) {
    throw BracketFailure("no sign change on the admissible subsidy interval");
  }
  for (int it = 0; it < kBisectMaxIter && (hi - lo) > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    (indifference_gap(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

ThresholdScan threshold_scan(const ChannelParams& ch, double beta, double m,
                             int horizon, int grid_points) {
  if (grid_points < 3) throw ValidationError("threshold scan needs >= 3 grid points");
  ThresholdScan out;
  out.m = m;
  out.grid_points = grid_points;
  bool seen_active = false;
  int first_active = -1;
  auto grid_w = [&](int j) {
    return static_cast<double>(j) / static_cast<double>(grid_points - 1);
  };
  for (int j = 0; j < grid_points; ++j) {
    const HorizonValue v =
        finite_horizon_value(ch, beta, m, Belief(grid_w(j)), horizon);
    const bool is_passive = v.passive >= v.active;  // ties resolve passive
    if (is_passive && seen_active) {
      out.structure_violation = true;
      return out;
    }
    if (!is_passive && !seen_active) {
      seen_active = true;
      first_active = j;
    }
  }
  if (!seen_active) {
    out.threshold = 1.0;  // passive everywhere, activation never pays
  } else if (first_active == 0) {
    out.threshold = 0.0;  // active everywhere
  } else {
    out.threshold = 0.5 * (grid_w(first_active - 1) + grid_w(first_active));
  }
  return out;
}

IndexabilityReport indexability_probe(const ChannelParams& ch, double beta,
                                      const std::vector<double>& m_grid,
                                      int horizon, int grid_points) {
  if (m_grid.empty()) throw ValidationError("subsidy grid must not be empty");
  for (std::size_t j = 1; j < m_grid.size(); ++j) {
    if (!(m_grid[j] >= m_grid[j - 1])) {
      throw ValidationError("subsidy grid must be nondecreasing");
    }
  }
  if (grid_points < 3) throw ValidationError("probe needs >= 3 grid points");

  // passive[mi][j]: is staying idle optimal at grid belief j under subsidy mi?
  // One tree per grid belief serves the whole subsidy column.
  const std::size_t n_m = m_grid.size();
  std::vector<std::vector<char>> passive(
      n_m, std::vector<char>(static_cast<std::size_t>(grid_points)));
  for (int j = 0; j < grid_points; ++j) {
    const double w =
        static_cast<double>(j) / static_cast<double>(grid_points - 1);
    const BeliefTreeDp dp(ch, beta, Belief(w), horizon);
    for (std::size_t mi = 0; mi < n_m; ++mi) {
      const HorizonValue v = dp.value(m_grid[mi]);
      passive[mi][static_cast<std::size_t>(j)] = v.passive >= v.active;
    }
  }

  IndexabilityReport rep;
  rep.scans.reserve(n_m);
  const double slack =
      1.0 / static_cast<double>(grid_points - 1) + kBeliefClampTol;
  double prev = -std::numeric_limits<double>::infinity();
  auto grid_w = [&](int j) {
    return static_cast<double>(j) / static_cast<double>(grid_points - 1);
  };
  for (std::size_t mi = 0; mi < n_m; ++mi) {
    ThresholdScan scan;
    scan.m = m_grid[mi];
    scan.grid_points = grid_points;
    int first_active = -1;
    for (int j = 0; j < grid_points; ++j) {
      const bool is_passive = passive[mi][static_cast<std::size_t>(j)] != 0;
      if (is_passive && first_active >= 0) {
        scan.structure_violation = true;
        break;
      }
      if (!is_passive && first_active < 0) first_active = j;
    }
    if (scan.structure_violation) {
      rep.any_violation = true;
    } else {
      if (first_active < 0) {
        scan.threshold = 1.0;
      } else if (first_active == 0) {
        scan.threshold = 0.0;
      } else {
        scan.threshold = 0.5 * (grid_w(first_active - 1) + grid_w(first_active));
      }
      // A true threshold moving inside one grid cell can make the reported
      // midpoint wobble by a cell width; allow exactly that much slack.
      if (*scan.threshold < prev - slack) rep.monotone = false;
      prev = *scan.threshold;
    }
    rep.scans.push_back(std::move(scan));
    if (mi > 0) {
      for (int j = 0; j < grid_points; ++j) {
        if (passive[mi - 1][static_cast<std::size_t>(j)] &&
            !passive[mi][static_cast<std::size_t>(j)]) {
          rep.nested = false;
        }
      }
    }
  }
  return rep;
}

double lipschitz_constant(const ChannelParams& ch, double beta) {
  check_beta(beta);
  const DerivedChannelQuantities d = derive_quantities(ch);
  const double denom =
      1.0 - beta * std::abs(d.memory) * (1.0 + 2.0 * d.positive_mass);
  if (denom <= 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / denom;
}

double truncation_bound(const ChannelParams& ch, double beta, int horizon) {
  check_beta(beta);
  if (horizon < 0) throw ValidationError("horizon must be nonnegative");
  double b = 1.0;
  for (int i = 0; i < horizon; ++i) b *= beta;
  return b * ch.throughput() / (1.0 - beta);
}

}  // namespace awi
