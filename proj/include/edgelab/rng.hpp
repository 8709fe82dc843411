#pragma once

// Splittable counter-style 64-bit generator (SplitMix64 core).
//
// Stream derivation rule, fixed for the whole project and recorded in run
// manifests as generator id "splitmix64/streams-v1":
//   child_seed(seed, k) = mix64(seed ^ mix64(k + GOLDEN))
// where mix64 is the SplitMix64 finalizer and GOLDEN = 0x9E3779B97F4A7C15.
// Replica/chunk k of a run with master seed s always uses
// Rng(derive_stream(s, k)), independent of worker count and platform.

#include <cstdint>
#include <cmath>

namespace edgelab {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

inline constexpr std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t stream) {
  return mix64(seed ^ mix64(stream + kGolden));
}

inline const char* generator_id() { return "splitmix64/streams-v1"; }

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += kGolden;
    return mix64(state_);
  }

  // uniform in [0,1), 53 random bits
  double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

  bool next_bernoulli(double p) { return next_double() < p; }

  // uniform in {0,...,n-1}; unbiased via rejection on the top range
  std::uint64_t next_below(std::uint64_t n) {
    if (n <= 1) return 0;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % n;
  }

  // standard normal, Box-Muller (cosine branch; one normal per two uniforms)
  double next_normal() {
    double u1 = next_double();
    double u2 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

  Rng split(std::uint64_t stream) const { return Rng(derive_stream(state_, stream)); }

 private:
  std::uint64_t state_;
};

}  // namespace edgelab
