#pragma once

#include <cmath>
#include <cstdint>

namespace wpaxos {

// Deterministic PRNG with hand-rolled samplers. All randomness in the
// simulator flows through this type so that a run is a pure function of
// its seed: no std::*_distribution (implementation-defined sequences)
// and no platform-dependent entropy.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {
    // splitmix64 warm-up so that small/sequential seeds diverge.
    next_u64();
    next_u64();
  }

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n).
  uint64_t below(uint64_t n) { return n == 0 ? 0 : next_u64() % n; }

  // Uniform double in [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Exponential with the given mean (inverse CDF).
  double exponential(double mean) {
    double u = uniform01();
    return -mean * std::log1p(-u);
  }

  // Box-Muller; draws two uniforms per call, second branch discarded to
  // keep the sampler stateless.
  double normal(double mu, double sigma) {
    double u1 = uniform01();
    double u2 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    return mu + sigma * r * std::cos(2.0 * M_PI * u2);
  }

  bool chance(double p) { return p > 0.0 && uniform01() < p; }

  // Derive an independent stream (e.g. per-node RNGs from the run seed).
  static uint64_t derive(uint64_t seed, uint64_t stream) {
    Rng r(seed ^ (0x5851f42d4c957f2dULL * (stream + 1)));
    return r.next_u64();
  }

 private:
  uint64_t state_;
};

}  // namespace wpaxos
