#include "awi/experiment_config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "awi/index.hpp"
#include "awi/presets.hpp"

namespace awi::cli {

namespace {

using nlohmann::ordered_json;

int line_of_offset(const std::string& text, std::size_t byte) {
  int line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

// Best-effort line lookup for semantic errors: first occurrence of the key.
int line_of_key(const std::string& text, const std::string& key) {
  const std::size_t pos = text.find("\"" + key + "\"");
  return pos == std::string::npos ? 0 : line_of_offset(text, pos);
}

[[noreturn]] void fail(const std::string& text, const std::string& key,
                       const std::string& msg) {
  const int line = line_of_key(text, key);
  std::ostringstream os;
  os << "config error";
  if (line > 0) os << " (line " << line << ")";
  os << ": " << msg;
  throw ConfigError(os.str());
}

ChannelParams parse_channel(const std::string& text, const ordered_json& j,
                            std::size_t idx) {
  const std::string where = "channel #" + std::to_string(idx + 1);
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "p01" && key != "p11" && key != "obs_given_poor" &&
        key != "obs_given_good" && key != "throughput") {
      fail(text, key, where + ": unknown key \"" + key + "\"");
    }
  }
  for (const char* key : {"p01", "p11", "obs_given_poor", "obs_given_good",
                          "throughput"}) {
    if (!j.contains(key)) fail(text, "channels", where + ": missing \"" + std::string(key) + "\"");
  }
  try {
    return ChannelParams(j.at("p01").get<double>(), j.at("p11").get<double>(),
                         j.at("obs_given_poor").get<std::vector<double>>(),
                         j.at("obs_given_good").get<std::vector<double>>(),
                         j.at("throughput").get<double>());
  } catch (const ValidationError& e) {
    fail(text, "channels", where + ": " + e.what());
  } catch (const ordered_json::exception& e) {
    fail(text, "channels", where + ": " + e.what());
  }
}

ExperimentSpec parse_experiment(const std::string& text, const ordered_json& j,
                                std::size_t idx) {
  const std::string where = "experiment #" + std::to_string(idx + 1);
  if (!j.is_object()) fail(text, "experiments", where + ": expected an object");
  static const char* known[] = {"name",    "system",          "channels",
                                "num_active", "beta",         "horizon",
                                "runs",    "initial_beliefs", "policies",
                                "tie_break"};
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) fail(text, key, where + ": unknown key \"" + key + "\"");
  }

  ExperimentSpec spec;
  const bool has_system = j.contains("system");
  const bool has_channels = j.contains("channels");
  if (has_system == has_channels) {
    fail(text, has_system ? "system" : "experiments",
         where + ": give exactly one of \"system\" or \"channels\"");
  }
  if (has_system) {
    const std::string name = j.at("system").get<std::string>();
    const std::optional<SystemPreset> preset = find_system(name);
    if (!preset) fail(text, "system", where + ": unknown system \"" + name + "\"");
    spec.channels = preset->channels;
    spec.from_preset = true;
    spec.name = name;
  } else {
    const ordered_json& arr = j.at("channels");
    if (!arr.is_array() || arr.empty()) {
      fail(text, "channels", where + ": \"channels\" must be a non-empty array");
    }
    for (std::size_t c = 0; c < arr.size(); ++c) {
      spec.channels.push_back(parse_channel(text, arr[c], c));
    }
  }
  if (j.contains("name")) spec.name = j.at("name").get<std::string>();

  try {
    if (j.contains("num_active")) spec.num_active = j.at("num_active").get<int>();
    if (j.contains("horizon")) spec.horizon = j.at("horizon").get<int>();
    if (j.contains("runs")) spec.runs = j.at("runs").get<int>();
  } catch (const ordered_json::exception& e) {
    fail(text, "experiments", where + ": " + e.what());
  }

  if (j.contains("beta")) {
    const ordered_json& b = j.at("beta");
    if (b.is_string()) {
      if (b.get<std::string>() != kBetaBoundToken) {
        fail(text, "beta", where + ": beta must be a number or \"" +
                               std::string(kBetaBoundToken) + "\"");
      }
      spec.beta.reset();
    } else if (b.is_number()) {
      spec.beta = b.get<double>();
    } else {
      fail(text, "beta", where + ": beta must be a number or \"" +
                             std::string(kBetaBoundToken) + "\"");
    }
  } else {
    fail(text, "experiments", where + ": missing \"beta\"");
  }

  if (j.contains("initial_beliefs")) {
    const ordered_json& ib = j.at("initial_beliefs");
    if (ib.is_string()) {
      if (ib.get<std::string>() != "steady-state") {
        fail(text, "initial_beliefs",
             where + ": initial_beliefs must be \"steady-state\" or an array");
      }
      spec.initial_mode = InitialBeliefMode::kSteadyState;
    } else if (ib.is_array()) {
      spec.initial_mode = InitialBeliefMode::kExplicit;
      spec.initial_beliefs = ib.get<std::vector<double>>();
    } else {
      fail(text, "initial_beliefs",
           where + ": initial_beliefs must be \"steady-state\" or an array");
    }
  }

  if (!j.contains("policies")) fail(text, "experiments", where + ": missing \"policies\"");
  const ordered_json& pol = j.at("policies");
  if (!pol.is_array() || pol.empty()) {
    fail(text, "policies", where + ": \"policies\" must be a non-empty array");
  }
  for (const ordered_json& p : pol) {
    try {
      spec.policies.push_back(parse_policy(p.get<std::string>()));
    } catch (const std::exception& e) {
      fail(text, "policies", where + ": " + e.what());
    }
  }

  if (j.contains("tie_break")) {
    const std::string tb = j.at("tie_break").get<std::string>();
    if (tb == "lowest-index") {
      spec.tie_break = TieBreak::kLowestIndex;
    } else if (tb == "random") {
      spec.tie_break = TieBreak::kRandom;
    } else {
      fail(text, "tie_break", where + ": unknown tie_break \"" + tb + "\"");
    }
  }
  for (PolicySpec& p : spec.policies) p.tie_break = spec.tie_break;

  try {
    spec.to_system_config(0).validate();
  } catch (const ValidationError& e) {
    fail(text, "experiments", where + ": " + e.what());
  }
  return spec;
}

}  // namespace

double ExperimentSpec::resolved_beta() const {
  return beta ? *beta : system_beta_bound(channels);
}

SystemConfig ExperimentSpec::to_system_config(std::uint64_t master_seed) const {
  SystemConfig cfg;
  cfg.channels = channels;
  cfg.num_active = num_active;
  cfg.beta = resolved_beta();
  cfg.horizon = horizon;
  cfg.runs = runs;
  cfg.master_seed = master_seed;
  cfg.initial_mode = initial_mode;
  cfg.initial_beliefs = initial_beliefs;
  return cfg;
}

ExperimentFile parse_experiment_file(const std::string& text) {
  ordered_json root;
  try {
    root = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ConfigError("config error (line " +
                      std::to_string(line_of_offset(text, e.byte)) +
                      "): " + e.what());
  }
  if (!root.is_object()) throw ConfigError("config error: top level must be an object");
  for (const auto& [key, value] : root.items()) {
    (void)value;
    if (key != "version" && key != "experiments") {
      fail(text, key, "unknown top-level key \"" + key + "\"");
    }
  }
  if (!root.contains("version") || !root.at("version").is_number_integer()) {
    fail(text, "version", "missing integer \"version\"");
  }
  const int version = root.at("version").get<int>();
  if (version != kExperimentFileVersion) {
    fail(text, "version",
         "unsupported version " + std::to_string(version) + ", expected " +
             std::to_string(kExperimentFileVersion));
  }
  if (!root.contains("experiments") || !root.at("experiments").is_array() ||
      root.at("experiments").empty()) {
    fail(text, "experiments", "\"experiments\" must be a non-empty array");
  }
  ExperimentFile file;
  file.version = version;
  const ordered_json& arr = root.at("experiments");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    file.experiments.push_back(parse_experiment(text, arr[i], i));
  }
  return file;
}

ExperimentFile load_experiment_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_experiment_file(buf.str());
}

std::string serialize_experiment_file(const ExperimentFile& file) {
  ordered_json root;
  root["version"] = file.version;
  root["experiments"] = ordered_json::array();
  for (const ExperimentSpec& e : file.experiments) {
    ordered_json j;
    j["name"] = e.name;
    if (e.from_preset) {
      j["system"] = e.name;
    } else {
      ordered_json arr = ordered_json::array();
      for (const ChannelParams& ch : e.channels) {
        ordered_json c;
        c["p01"] = ch.p01();
        c["p11"] = ch.p11();
        std::vector<double> poor;
        std::vector<double> good;
        for (int i = 1; i <= ch.levels(); ++i) {
          poor.push_back(ch.obs_given_poor(i));
          good.push_back(ch.obs_given_good(i));
        }
        c["obs_given_poor"] = poor;
        c["obs_given_good"] = good;
        c["throughput"] = ch.throughput();
        arr.push_back(std::move(c));
      }
      j["channels"] = std::move(arr);
    }
    j["num_active"] = e.num_active;
    if (e.beta) {
      j["beta"] = *e.beta;
    } else {
      j["beta"] = kBetaBoundToken;
    }
    j["horizon"] = e.horizon;
    j["runs"] = e.runs;
    if (e.initial_mode == InitialBeliefMode::kSteadyState) {
      j["initial_beliefs"] = "steady-state";
    } else {
      j["initial_beliefs"] = e.initial_beliefs;
    }
    std::vector<std::string> pol;
    for (const PolicySpec& p : e.policies) pol.push_back(p.name());
    j["policies"] = pol;
    j["tie_break"] =
        e.tie_break == TieBreak::kRandom ? "random" : "lowest-index";
    root["experiments"].push_back(std::move(j));
  }
  return root.dump(2) + "\n";
}

PolicySpec parse_policy(const std::string& token) {
  if (token == "myopic") return PolicySpec::myopic();
  if (token == "random") return PolicySpec::random();
  if (token == "awi") return PolicySpec::awi(0);
  if (token.rfind("awi:", 0) == 0) {
    const std::string num = token.substr(4);
    int n = -1;
    const auto [ptr, ec] =
        std::from_chars(num.data(), num.data() + num.size(), n);
    if (ec != std::errc() || ptr != num.data() + num.size() || n < 0 ||
        n > kMaxIterationDepth) {
      throw ConfigError("bad policy \"" + token + "\": iterations must be 0.." +
                        std::to_string(kMaxIterationDepth));
    }
    return PolicySpec::awi(n);
  }
  throw ConfigError("unknown policy \"" + token +
                    "\" (expected myopic, random, awi, or awi:N)");
}

}  // namespace awi::cli
