#pragma once

#include <cstdint>

namespace topoaug {

// Deterministic splittable generator (SplitMix64 core). Every consumer of
// randomness takes one of these explicitly; there is no ambient RNG state,
// so a run is reproducible from its seed alone. std::shuffle and the
// std::*_distribution adaptors are implementation-defined, so the few
// transforms we need (uniform, normal, bounded ints) are spelled out here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n). Modulo bias is negligible for n << 2^64 and
  // irrelevant to the determinism contract.
  std::uint64_t bounded(std::uint64_t n) { return n == 0 ? 0 : next_u64() % n; }

  // Standard normal via Box-Muller; second value cached.
  double normal();

  // Independent child stream, a pure function of (seed, stream); the parent
  // draw position is untouched.
  Rng split(std::uint64_t stream) const {
    Rng child(mix(seed_ ^ 0x6a09e667f3bcc909ULL, stream));
    return child;
  }

 private:
  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t state_;
  bool has_cached_normal_ = false;
  double cached_normal_ = 0.0;
};

}  // namespace topoaug
