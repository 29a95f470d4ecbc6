#include "awi/presets.hpp"

#include <array>

namespace awi {

std::vector<double> default_obs_given_poor() { return {0.9, 0.1}; }
std::vector<double> default_obs_given_good() { return {0.1, 0.9}; }

namespace {

constexpr std::array<double, 7> kThroughput = {0.4998, 0.6668, 1.0000, 0.6296,
                                               0.5830, 0.8334, 0.6668};
constexpr std::array<double, 7> kSys1P11 = {0.6, 0.4, 0.2, 0.2, 0.4, 0.1, 0.3};
constexpr std::array<double, 7> kSys1P01 = {0.8, 0.6, 0.4, 0.9, 0.8, 0.6, 0.7};
constexpr std::array<double, 7> kSys3P11 = {0.1, 0.4, 0.3, 0.5, 0.1, 0.3, 0.5};
constexpr std::array<double, 7> kSys3P01 = {0.3, 0.6, 0.4, 0.7, 0.2, 0.6, 0.8};

SystemPreset make_system(std::string name, const std::array<double, 7>& p11,
                         const std::array<double, 7>& p01) {
  SystemPreset s;
  s.name = std::move(name);
  s.reconstructed_obs = true;
  for (std::size_t j = 0; j < kThroughput.size(); ++j) {
    s.channels.emplace_back(p01[j], p11[j], default_obs_given_poor(),
                            default_obs_given_good(), kThroughput[j]);
  }
  return s;
}

std::vector<SystemPreset> make_all() {
  std::vector<SystemPreset> all;
  all.push_back(make_system("system-1", kSys1P11, kSys1P01));
  all.push_back(make_system("system-2", kSys1P01, kSys1P11));
  all.push_back(make_system("system-3", kSys3P11, kSys3P01));
  all.push_back(make_system("system-4", kSys3P01, kSys3P11));
  return all;
}

}  // namespace

const std::vector<SystemPreset>& builtin_systems() {
  static const std::vector<SystemPreset> all = make_all();
  return all;
}

std::optional<SystemPreset> find_system(std::string_view name) {
  for (const SystemPreset& s : builtin_systems()) {
    if (s.name == name) return s;
  }
  return std::nullopt;
}

}  // namespace awi
