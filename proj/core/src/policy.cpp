#include "awi/policy.hpp"

#include <algorithm>
#include <numeric>

#include "awi/index.hpp"

namespace awi {

PolicySpec PolicySpec::myopic() { return {PolicyKind::kMyopic, 0, TieBreak::kLowestIndex}; }

PolicySpec PolicySpec::awi(int iterations) {
  return {PolicyKind::kAwi, iterations, TieBreak::kLowestIndex};
}

PolicySpec PolicySpec::random() { return {PolicyKind::kRandom, 0, TieBreak::kLowestIndex}; }

void PolicySpec::validate() const {
  if (kind == PolicyKind::kAwi &&
      (awi_iterations < 0 || awi_iterations > kMaxIterationDepth)) {
    throw ValidationError("awi iteration depth must lie in 0.." +
                          std::to_string(kMaxIterationDepth));
  }
}

std::string PolicySpec::name() const {
  switch (kind) {
    case PolicyKind::kMyopic:
      return "myopic";
    case PolicyKind::kAwi:
      return "awi:" + std::to_string(awi_iterations);
    case PolicyKind::kRandom:
      return "random";
  }
  return "unknown";
}

double myopic_index(const ChannelParams& ch, Belief w) {
  return ch.throughput() * w.value();
}

std::vector<int> select(const PolicySpec& spec,
                        std::span<const ChannelParams> channels,
                        std::span<const Belief> beliefs, int num_active,
                        double beta, Rng& rng) {
  spec.validate();
  const int n = static_cast<int>(channels.size());
  if (beliefs.size() != channels.size()) {
    throw ValidationError("beliefs and channels must have matching size");
  }
  if (num_active < 1 || num_active >= n) {
    throw ValidationError("num_active must satisfy 1 <= M < N");
  }

  std::vector<double> score(static_cast<std::size_t>(n));
  switch (spec.kind) {
    case PolicyKind::kMyopic:
      for (int j = 0; j < n; ++j) {
        score[static_cast<std::size_t>(j)] =
            myopic_index(channels[static_cast<std::size_t>(j)],
                         beliefs[static_cast<std::size_t>(j)]);
      }
      break;
    case PolicyKind::kAwi:
      for (int j = 0; j < n; ++j) {
        score[static_cast<std::size_t>(j)] =
            approx_whittle(channels[static_cast<std::size_t>(j)], beta,
                           beliefs[static_cast<std::size_t>(j)],
                           spec.awi_iterations)
                .value;
      }
      break;
    case PolicyKind::kRandom:
      // Draw for every channel regardless of beliefs: fixed stream usage.
      for (int j = 0; j < n; ++j) {
        score[static_cast<std::size_t>(j)] = rng.uniform();
      }
      break;
  }

  std::vector<double> tie_key(static_cast<std::size_t>(n), 0.0);
  if (spec.tie_break == TieBreak::kRandom) {
    for (int j = 0; j < n; ++j) tie_key[static_cast<std::size_t>(j)] = rng.uniform();
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const double sa = score[static_cast<std::size_t>(a)];
    const double sb = score[static_cast<std::size_t>(b)];
    if (sa != sb) return sa > sb;
    const double ta = tie_key[static_cast<std::size_t>(a)];
    const double tb = tie_key[static_cast<std::size_t>(b)];
    if (ta != tb) return ta < tb;
    return a < b;
  });
  order.resize(static_cast<std::size_t>(num_active));
  std::sort(order.begin(), order.end());
  for (int& id : order) ++id;  // expose 1-based channel ids
  return order;
}

std::vector<Belief> update_beliefs(std::span<const ChannelParams> channels,
                                   std::span<const Belief> beliefs,
                                   const std::vector<int>& active,
                                   const std::map<int, int>& observations) {
  if (beliefs.size() != channels.size()) {
    throw ValidationError("beliefs and channels must have matching size");
  }
  if (observations.size() != active.size()) {
    throw ValidationError("observations must cover exactly the probed channels");
  }
  for (int id : active) {
    if (id < 1 || id > static_cast<int>(channels.size())) {
      throw ValidationError("active channel id out of range");
    }
    if (!observations.contains(id)) {
      throw ValidationError("missing observation for probed channel " +
                            std::to_string(id));
    }
  }
  std::vector<Belief> out;
  out.reserve(beliefs.size());
  for (int j = 0; j < static_cast<int>(channels.size()); ++j) {
    const auto it = observations.find(j + 1);
    if (it != observations.end()) {
      out.push_back(active_update(channels[static_cast<std::size_t>(j)],
                                  beliefs[static_cast<std::size_t>(j)],
                                  it->second));
    } else {
      out.push_back(passive_update(channels[static_cast<std::size_t>(j)],
                                   beliefs[static_cast<std::size_t>(j)]));
    }
  }
  return out;
}

}  // namespace awi
