#pragma once

#include <cstdint>
#include <random>

namespace qcross {

// splitmix64 step, used for seed derivation.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d4a2ca495fc6f5ULL;
  return z ^ (z >> 31);
}

// mt19937_64 wrapper with hand-rolled draws so streams are identical across
// platforms (std::uniform_int_distribution is implementation-defined).
class rng {
public:
  explicit rng(std::uint64_t seed) : engine_(mix_seed(seed)), seed_(seed) {}

  std::uint64_t raw() { return engine_(); }

  // Uniform in [0, bound) by rejection sampling; bound >= 1.
  std::uint64_t bounded(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  bool coin() { return (engine_() >> 63) != 0; }

  // Independent child stream i, derived from this stream's seed.
  rng child(std::uint64_t i) const {
    std::uint64_t s = seed_ ^ (0xa0761d6478bd642fULL * (i + 1));
    std::uint64_t a = splitmix64(s);
    std::uint64_t b = splitmix64(s);
    return rng(a ^ (b << 1));
  }

  std::uint64_t seed() const { return seed_; }

private:
  static std::uint64_t mix_seed(std::uint64_t seed) {
    std::uint64_t s = seed;
    return splitmix64(s);
  }

  std::mt19937_64 engine_;
  std::uint64_t seed_;
};

}  // namespace qcross
