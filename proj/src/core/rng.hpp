#pragma once

#include <cstdint>
#include <vector>

namespace secrecy {

// SplitMix64 step; also used as the mixing function for keyed hashing.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Minimal deterministic generator; identical output on every platform for a
// given seed, unlike the std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {
    // decorrelate trivially related seeds
    for (int i = 0; i < 2; ++i) (void)splitmix64(state_);
  }

  std::uint64_t next_u64() { return splitmix64(state_); }

  // uniform in [0, 1)
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform integer in [0, n)
  std::uint64_t next_below(std::uint64_t n) {
    // rejection-free modulo is fine at desk scale; bias < 2^-53 for n << 2^64
    return next_u64() % n;
  }

  // index sampled from a probability vector (entries >= 0, sum ~ 1)
  std::size_t next_index(const std::vector<double>& probs) {
    double u = next_unit();
    double acc = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
      acc += probs[i];
      if (u < acc) return i;
    }
    return probs.size() - 1;
  }

 private:
  std::uint64_t state_;
};

// Stable derived seed for (seed, stream, index) tuples, e.g. per-trial or
// per-restart generators that may run concurrently.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  std::uint64_t s = seed;
  (void)splitmix64(s);
  s ^= 0xA0761D6478BD642FULL * (stream + 1);
  (void)splitmix64(s);
  s ^= 0xE7037ED1A0B428DBULL * (index + 1);
  (void)splitmix64(s);
  return s;
}

}  // namespace secrecy
