#pragma once

#include <cstdint>

namespace lomean {

/// splitmix64 step; used both as a small PRNG and to derive independent
/// sub-seeds (seed, index) -> seed without shared state.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL * (index + 1));
  splitmix64(s);
  return splitmix64(s);
}

/// Small deterministic PRNG (xoshiro-free: iterated splitmix64). Identical
/// streams on every platform, which keeps seeded reports byte-identical.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {
    // warm up so nearby seeds decorrelate
    splitmix64(state_);
    splitmix64(state_);
  }

  std::uint64_t next_u64() { return splitmix64(state_); }

  /// uniform in [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// log-uniform in [lo, hi], lo > 0
  double log_uniform(double lo, double hi);

  /// standard normal via Box-Muller (one value per call; no cached state)
  double normal();

  int uniform_int(int lo, int hi);  // inclusive bounds

 private:
  std::uint64_t state_;
};

}  // namespace lomean
