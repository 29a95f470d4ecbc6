#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "awi/belief.hpp"
#include "awi/rng.hpp"

namespace awi {

enum class PolicyKind {
  kMyopic,  // rank by immediate expected throughput B * w
  kAwi,     // rank by the approximated Whittle index
  kRandom,  // uniform random ranking; the control baseline
};

enum class TieBreak {
  kLowestIndex,  // deterministic: smaller channel id wins
  kRandom,       // uniform among tied channels, fed by the policy stream
};

struct PolicySpec {
  PolicyKind kind = PolicyKind::kMyopic;
  int awi_iterations = 0;  // value-expansion depth, only read for kAwi
  TieBreak tie_break = TieBreak::kLowestIndex;

  static PolicySpec myopic();
  static PolicySpec awi(int iterations);
  static PolicySpec random();

  void validate() const;
  // Stable label used in CSV output: "myopic", "awi:N", "random".
  std::string name() const;
};

// Immediate expected throughput of probing now.
double myopic_index(const ChannelParams& ch, Belief w);

// Pick num_active channels by ranking the per-channel index values.
// Returns 1-based channel ids sorted ascending (channel numbering matches
// the CLI and CQI levels). Consumes a number of rng draws that depends only
// on (spec, N), never on the belief values, so paired-seed runs stay aligned.
std::vector<int> select(const PolicySpec& spec,
                        std::span<const ChannelParams> channels,
                        std::span<const Belief> beliefs, int num_active,
                        double beta, Rng& rng);

// Advance all beliefs one slot: Bayes + transition push for probed channels
// (keyed by their CQI outcome), plain transition push for idle ones.
// `active` holds 1-based channel ids; `observations` must have exactly the
// probed channels as keys.
std::vector<Belief> update_beliefs(std::span<const ChannelParams> channels,
                                   std::span<const Belief> beliefs,
                                   const std::vector<int>& active,
                                   const std::map<int, int>& observations);

}  // namespace awi
