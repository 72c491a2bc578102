#pragma once

#include <cmath>
#include <cstdint>

// Reproducible RNG family used throughout: xoshiro256++ engines whose state is
// derived from a 64-bit user seed via splitmix64. Per-replica streams are keyed
// by (seed, experiment key, replica index), so results are independent of how
// replicas are scheduled across threads.

namespace divboot {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Xoshiro256 {
 public:
  explicit Xoshiro256(std::uint64_t seed) { reseed(seed); }

  void reseed(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64(sm);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t state_[4];
};

// Stream keyed by (seed, a, b); collision-resistant enough for disjoint
// experiment keys and replica indices.
inline Xoshiro256 derive_stream(std::uint64_t seed, std::uint64_t a,
                                std::uint64_t b) {
  std::uint64_t sm = seed;
  std::uint64_t h = splitmix64(sm);
  sm = h ^ (a * 0x9e3779b97f4a7c15ULL + 0x243f6a8885a308d3ULL);
  h = splitmix64(sm);
  sm = h ^ (b * 0xd1b54a32d192ed03ULL + 0x452821e638d01377ULL);
  return Xoshiro256(splitmix64(sm));
}

inline double sample_exponential(Xoshiro256& rng) {
  return -std::log1p(-rng.uniform());
}

// Box-Muller; two uniforms per variate, no cached state.
inline double sample_standard_normal(Xoshiro256& rng) {
  double u1;
  do {
    u1 = rng.uniform();
  } while (u1 <= 0.0);
  const double u2 = rng.uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
}

// Knuth multiplication method; exact for the moderate means used here.
inline long long sample_poisson(Xoshiro256& rng, double mean) {
  const double limit = std::exp(-mean);
  long long k = 0;
  double p = 1.0;
  do {
    ++k;
    p *= rng.uniform();
  } while (p > limit);
  return k - 1;
}

// Marsaglia-Tsang, with the U^(1/shape) boost for shape < 1.
inline double sample_gamma(Xoshiro256& rng, double shape, double scale) {
  if (shape < 1.0) {
    double u;
    do {
      u = rng.uniform();
    } while (u <= 0.0);
    return sample_gamma(rng, shape + 1.0, scale) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = sample_standard_normal(rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform();
    if (u < 1.0 - 0.0331 * (x * x) * (x * x)) return d * v * scale;
    if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
      return d * v * scale;
  }
}

}  // namespace divboot
