#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "wpaxos/command.hpp"
#include "wpaxos/rng.hpp"
#include "wpaxos/types.hpp"

namespace wpaxos {

// Workload model: every zone draws objects from a truncated normal over
// a shared pool of K objects. Zone means can be placed explicitly or
// solved from a target pairwise locality; under a shifting schedule the
// means drift at shift_rate objects per second (mod K).

inline double normal_cdf(double x) { return 0.5 * (1.0 + std::erf(x / std::sqrt(2.0))); }

// Inverse CDF by bisection; plenty for solving mean spacings.
inline double normal_cdf_inv(double p) {
  if (p <= 0.0 || p >= 1.0) throw std::invalid_argument("normal_cdf_inv domain");
  double lo = -10.0, hi = 10.0;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    (normal_cdf(mid) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// Locality between two equal-sigma normals: L = Phi_A(x) - Phi_B(x) at
// the midpoint crossing x = (mu_A + mu_B) / 2. Zero for congruent
// distributions, approaching one as the overlap vanishes.
inline double locality(double mu_a, double mu_b, double sigma) {
  if (sigma <= 0.0) throw std::invalid_argument("sigma must be positive");
  if (mu_a == mu_b) return 0.0;
  double lo = std::min(mu_a, mu_b), hi = std::max(mu_a, mu_b);
  double x = 0.5 * (lo + hi);
  return normal_cdf((x - lo) / sigma) - normal_cdf((x - hi) / sigma);
}

// Mean spacing that yields a given adjacent-pair locality:
// L = 2*Phi(d / 2 sigma) - 1  =>  d = 2 sigma Phi^-1((L+1)/2).
inline double mean_spacing_for_locality(double target, double sigma) {
  if (target <= 0.0 || target >= 1.0)
    throw std::invalid_argument("target locality must be in (0,1)");
  return 2.0 * sigma * normal_cdf_inv((target + 1.0) / 2.0);
}

struct WorkloadSpec {
  uint32_t objects = 1000;  // K
  std::vector<double> zone_means;
  double sigma = 50.0;
  bool uniform = false;  // ignore the normals, draw uniformly from the pool

  bool open_loop = true;
  double rate_per_zone = 100.0;  // requests/sec per zone (open loop)
  int clients_per_zone = 1;      // closed loop
  double write_ratio = 1.0;
  double shift_rate = 0.0;  // objects/sec drift of every zone mean

  double txn_ratio = 0.0;  // fraction of requests issued as transactions
  int txn_span = 2;        // objects per transaction
  int per_object_cap = 0;  // if > 0, resample once an object saw this many requests

  double mean_at(int zone, uint64_t time_us) const {
    double mu = zone_means[static_cast<size_t>(zone - 1)];
    if (shift_rate != 0.0) {
      mu += shift_rate * (static_cast<double>(time_us) / 1e6);
      mu = std::fmod(mu, static_cast<double>(objects));
      if (mu < 0) mu += static_cast<double>(objects);
    }
    return mu;
  }

  void validate(int zones) const {
    if (objects < 1) throw std::invalid_argument("workload: K must be >= 1");
    if (!uniform) {
      if (sigma <= 0.0) throw std::invalid_argument("workload: sigma must be > 0");
      if (static_cast<int>(zone_means.size()) != zones)
        throw std::invalid_argument("workload: need one mean per zone");
    }
    if (open_loop && rate_per_zone <= 0.0)
      throw std::invalid_argument("workload: rate must be > 0");
    if (!open_loop && clients_per_zone < 1)
      throw std::invalid_argument("workload: clients_per_zone must be >= 1");
    if (write_ratio < 0.0 || write_ratio > 1.0)
      throw std::invalid_argument("workload: write_ratio in [0,1]");
    if (txn_ratio < 0.0 || txn_ratio > 1.0)
      throw std::invalid_argument("workload: txn_ratio in [0,1]");
    if (txn_ratio > 0.0 && (txn_span < 2 || static_cast<uint32_t>(txn_span) > objects))
      throw std::invalid_argument("workload: txn_span out of range");
  }
};

// Equally spaced means centered in the pool, spaced for the target
// adjacent-pair locality.
inline std::vector<double> make_zone_means(uint32_t objects, int zones, double sigma,
                                           double target_locality) {
  double d = zones > 1 ? mean_spacing_for_locality(target_locality, sigma) : 0.0;
  double span = d * (zones - 1);
  double start = (static_cast<double>(objects) - span) / 2.0;
  std::vector<double> mus;
  for (int z = 0; z < zones; ++z) mus.push_back(start + d * z);
  return mus;
}

inline ObjectId sample_object(const WorkloadSpec& spec, int zone, uint64_t time_us, Rng& rng) {
  if (spec.uniform) return static_cast<ObjectId>(rng.below(spec.objects));
  double draw = rng.normal(spec.mean_at(zone, time_us), spec.sigma);
  long long rounded = std::llround(draw);
  if (rounded < 0) rounded = 0;
  if (rounded >= static_cast<long long>(spec.objects))
    rounded = static_cast<long long>(spec.objects) - 1;
  return static_cast<ObjectId>(rounded);
}

// Full pairwise locality matrix at t=0 (upper-triangular mirrored).
inline std::vector<std::vector<double>> locality_matrix(const WorkloadSpec& spec, int zones) {
  std::vector<std::vector<double>> m(static_cast<size_t>(zones),
                                     std::vector<double>(static_cast<size_t>(zones), 0.0));
  for (int a = 0; a < zones; ++a)
    for (int b = 0; b < zones; ++b)
      if (a != b)
        m[static_cast<size_t>(a)][static_cast<size_t>(b)] =
            locality(spec.zone_means[static_cast<size_t>(a)],
                     spec.zone_means[static_cast<size_t>(b)], spec.sigma);
  return m;
}

inline double min_adjacent_locality(const WorkloadSpec& spec, int zones) {
  double min = 1.0;
  for (int z = 0; z + 1 < zones; ++z)
    min = std::min(min, locality(spec.zone_means[static_cast<size_t>(z)],
                                 spec.zone_means[static_cast<size_t>(z + 1)], spec.sigma));
  return zones > 1 ? min : 0.0;
}

}  // namespace wpaxos
