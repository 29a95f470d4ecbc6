#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "awi/belief.hpp"

namespace awi {

// A named bundle of channels used by the benchmark experiments. The
// transition rows and throughputs are the calibrated setting; the CQI
// likelihood columns are the library's default two-level model, flagged by
// reconstructed_obs so downstream reports can say so.
struct SystemPreset {
  std::string name;
  std::vector<ChannelParams> channels;
  bool reconstructed_obs = true;
};

// Default two-level observation model: level 1 leans poor, level 2 leans good.
std::vector<double> default_obs_given_poor();
std::vector<double> default_obs_given_good();

// "system-1" .. "system-4": seven channels each. Systems 2 and 4 are systems
// 1 and 3 with the transition rows swapped (positively correlated variants).
const std::vector<SystemPreset>& builtin_systems();

// Lookup by name; empty if unknown.
std::optional<SystemPreset> find_system(std::string_view name);

}  // namespace awi
