#include "awi/commands.hpp"

#include <charconv>
#include <cmath>

#include "json.hpp"

#include "awi/csv.hpp"
#include "awi/experiment_config.hpp"
#include "awi/index.hpp"
#include "awi/presets.hpp"
#include "awi/report.hpp"
#include "awi/sim.hpp"
#include "awi/suites.hpp"

namespace awi::cli {

namespace {

std::optional<double> parse_beta_token(const std::string& token) {
  if (token == kBetaBoundToken) return std::nullopt;
  double v = 0.0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ConfigError("bad beta \"" + token + "\": expected a number or \"" +
                      std::string(kBetaBoundToken) + "\"");
  }
  return v;
}

nlohmann::ordered_json trace_json(const EpisodeTrace& trace) {
  nlohmann::ordered_json slots = nlohmann::ordered_json::array();
  int t = 1;
  for (const SlotRecord& rec : trace.slots) {
    nlohmann::ordered_json s;
    s["t"] = t++;
    s["states"] = rec.states;
    s["beliefs"] = rec.beliefs;
    s["actions"] = rec.actions;
    nlohmann::ordered_json obs = nlohmann::ordered_json::object();
    for (const auto& [id, cqi] : rec.observations) {
      obs[std::to_string(id)] = cqi;
    }
    s["observations"] = std::move(obs);
    s["reward"] = rec.reward;
    slots.push_back(std::move(s));
  }
  nlohmann::ordered_json j;
  j["slots"] = std::move(slots);
  return j;
}

}  // namespace

int run_simulate(const SimulateOptions& opt, std::ostream& out,
                 std::ostream& err) {
  ExperimentFile file;
  try {
    file = load_experiment_file(opt.config_path);
    for (ExperimentSpec& exp : file.experiments) {
      if (opt.runs) exp.runs = *opt.runs;
      if (opt.horizon) exp.horizon = *opt.horizon;
      if (opt.beta) exp.beta = parse_beta_token(*opt.beta);
      if (!opt.policies.empty()) {
        exp.policies.clear();
        for (const std::string& tok : opt.policies) {
          PolicySpec p = parse_policy(tok);
          p.tie_break = exp.tie_break;
          exp.policies.push_back(p);
        }
      }
    }
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kExitBadInput;
  }

  try {
    std::vector<ResultsRow> rows;
    nlohmann::ordered_json traces = nlohmann::ordered_json::array();
    for (const ExperimentSpec& exp : file.experiments) {
      const SystemConfig cfg = exp.to_system_config(opt.seed);
      ExperimentOptions run_opt;
      run_opt.threads = opt.threads;
      std::vector<RunStats> stats;
      try {
        stats = run_experiment(cfg, exp.policies, run_opt);
      } catch (const ValidationError& e) {
        err << "config error: " << e.what() << "\n";
        return kExitBadInput;
      }
      for (const RunStats& st : stats) {
        ResultsRow row;
        row.system = exp.name;
        row.policy = st.policy.name();
        row.n_iter = st.policy.kind == PolicyKind::kAwi
                         ? std::to_string(st.policy.awi_iterations)
                         : "";
        row.beta = cfg.beta;
        row.runs = cfg.runs;
        row.horizon = cfg.horizon;
        row.mean_return = st.mean_return;
        row.std_err = st.std_err;
        row.seed = opt.seed;
        rows.push_back(std::move(row));
      }
      if (!opt.trace_path.empty()) {
        for (const PolicySpec& pol : exp.policies) {
          EpisodeTrace trace;
          run_episode(cfg, pol, 0, &trace);
          nlohmann::ordered_json tj = trace_json(trace);
          tj["system"] = exp.name;
          tj["policy"] = pol.name();
          tj["run_id"] = 0;
          traces.push_back(std::move(tj));
        }
      }
    }
    atomic_write_file(opt.out_path, results_csv(rows));
    if (!opt.trace_path.empty()) {
      nlohmann::ordered_json troot;
      troot["version"] = 1;
      troot["seed"] = opt.seed;
      troot["traces"] = std::move(traces);
      atomic_write_file(opt.trace_path, troot.dump(2) + "\n");
    }
    out << "wrote " << rows.size() << " rows to " << opt.out_path << "\n";
    return kExitOk;
  } catch (const std::exception& e) {
    err << "simulate failed: " << e.what() << "\n";
    return kExitRuntime;
  }
}

namespace {

ChannelParams index_channel(const IndexOptions& opt) {
  const bool explicit_params = opt.p01.has_value() || opt.p11.has_value() ||
                               !opt.obs_given_poor.empty() ||
                               !opt.obs_given_good.empty();
  if (!opt.system.empty() && explicit_params) {
    throw ConfigError("give either --system or explicit channel parameters, not both");
  }
  if (!opt.system.empty()) {
    const std::optional<SystemPreset> preset = find_system(opt.system);
    if (!preset) throw ConfigError("unknown system \"" + opt.system + "\"");
    const int n_channels = static_cast<int>(preset->channels.size());
    if (opt.channel < 1 || opt.channel > n_channels) {
      throw ConfigError("channel must lie in 1.." + std::to_string(n_channels));
    }
    return preset->channels[static_cast<std::size_t>(opt.channel - 1)];
  }
  if (!opt.p01 || !opt.p11) {
    throw ConfigError("need --system, or --p01 and --p11 (plus observation columns)");
  }
  std::vector<double> poor = opt.obs_given_poor;
  std::vector<double> good = opt.obs_given_good;
  if (poor.empty() && good.empty()) {
    poor = default_obs_given_poor();
    good = default_obs_given_good();
  }
  return ChannelParams(*opt.p01, *opt.p11, poor, good, opt.throughput);
}

}  // namespace

int run_index(const IndexOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    const ChannelParams ch = index_channel(opt);
    const std::optional<double> beta_opt = parse_beta_token(opt.beta);
    const double beta = beta_opt ? *beta_opt : beta_bound(ch);
    if (opt.grid < 2) throw ConfigError("grid must have at least 2 points");

    std::vector<IndexRow> rows;
    rows.reserve(static_cast<std::size_t>(opt.grid));
    for (int j = 0; j < opt.grid; ++j) {
      const double w =
          static_cast<double>(j) / static_cast<double>(opt.grid - 1);
      const IndexResult res =
          approx_whittle(ch, beta, Belief(w), opt.iterations);
      rows.push_back({w, res.value,
                      res.kind == IndexKind::kApproxWhittle
                          ? "approx_whittle"
                          : "fallback_myopic"});
    }
    const std::string csv = index_csv(rows);
    if (opt.out_path.empty()) {
      out << csv;
    } else {
      atomic_write_file(opt.out_path, csv);
      out << "wrote " << rows.size() << " rows to " << opt.out_path << "\n";
    }
    return kExitOk;
  } catch (const ConfigError& e) {
    err << e.what() << "\n";
    return kExitBadInput;
  } catch (const ValidationError& e) {
    err << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    err << "index failed: " << e.what() << "\n";
    return kExitRuntime;
  }
}

int run_validate(const ValidateOptions& opt, std::ostream& out,
                 std::ostream& err) {
  try {
    SuiteReport report;
    if (opt.suite == "crossing") {
      report = run_crossing_suite(opt.seed, opt.budget);
    } else if (opt.suite == "lemmas") {
      report = run_lemma_suite(opt.seed, opt.budget);
    } else if (opt.suite == "oracle") {
      report = run_oracle_suite(opt.seed, opt.budget);
    } else if (opt.suite == "indexability") {
      report = run_indexability_suite(opt.seed, opt.budget);
    } else {
      err << "unknown suite \"" << opt.suite
          << "\" (expected crossing, lemmas, oracle, or indexability)\n";
      return kExitBadInput;
    }
    out << suite_report_text(report);
    if (!opt.out_path.empty()) {
      atomic_write_file(opt.out_path, suite_report_json(report, opt.budget));
    }
    return report.all_pass() ? kExitOk : kExitPropertyFailure;
  } catch (const std::exception& e) {
    err << "validate failed: " << e.what() << "\n";
    return kExitRuntime;
  }
}

}  // namespace awi::cli
