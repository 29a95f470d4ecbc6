#pragma once

#include <cstdint>
#include <random>

namespace awi {

// Deterministic uniform generator. Wraps std::mt19937_64 but owns the
// bits-to-double conversion, so streams are reproducible across standard
// library implementations (std::uniform_real_distribution is not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::uint64_t bits() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

namespace detail {
// splitmix64 finalizer; decorrelates structured seed material.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}
}  // namespace detail

// Substream tags for the common-random-numbers layout: every run derives one
// stream per concern, so trajectories pair across policies by construction.
inline constexpr std::uint64_t kStateStream = 1;   // initial states + transitions
inline constexpr std::uint64_t kObsStream = 2;     // CQI draws
inline constexpr std::uint64_t kPolicyStream = 3;  // policy-internal randomness

// Stream seed depends only on (master_seed, run_id, tag) -- never on the
// policy, thread count, or scheduling order.
inline std::uint64_t derive_stream_seed(std::uint64_t master_seed,
                                        std::uint64_t run_id,
                                        std::uint64_t tag) {
  std::uint64_t z = detail::mix64(master_seed);
  z = detail::mix64(z ^ detail::mix64(run_id + 0x51ed270b0a1full));
  z = detail::mix64(z ^ detail::mix64(tag + 0xabcd9576e1c3ull));
  return z;
}

}  // namespace awi
