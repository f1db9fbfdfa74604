#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "wpaxos/rng.hpp"
#include "wpaxos/types.hpp"

namespace wpaxos {

// One-way inter-zone latencies in integer microseconds. The matrix is
// symmetric with intra_zone_us on the diagonal; each delivery is scaled
// by (1 + U[0, jitter]).
struct LatencyModel {
  std::vector<std::vector<uint64_t>> base_us;  // [zone-1][zone-1]
  uint64_t intra_zone_us = 500;
  double jitter = 0.1;

  int zones() const { return static_cast<int>(base_us.size()); }

  uint64_t one_way(int zone_a, int zone_b) const {
    return base_us[static_cast<size_t>(zone_a - 1)][static_cast<size_t>(zone_b - 1)];
  }

  uint64_t max_one_way() const {
    uint64_t m = 0;
    for (const auto& row : base_us)
      for (uint64_t v : row) m = std::max(m, v);
    return m;
  }

  void validate() const {
    int z = zones();
    if (z == 0) throw std::invalid_argument("latency matrix is empty");
    for (int a = 0; a < z; ++a) {
      if (static_cast<int>(base_us[static_cast<size_t>(a)].size()) != z)
        throw std::invalid_argument("latency matrix is not square");
      if (base_us[static_cast<size_t>(a)][static_cast<size_t>(a)] != intra_zone_us)
        throw std::invalid_argument("latency matrix diagonal must equal intra_zone_us");
      for (int b = 0; b < z; ++b)
        if (base_us[static_cast<size_t>(a)][static_cast<size_t>(b)] !=
            base_us[static_cast<size_t>(b)][static_cast<size_t>(a)])
          throw std::invalid_argument("latency matrix must be symmetric");
    }
  }
};

inline uint64_t deliver_latency(const LatencyModel& model, NodeId from, NodeId to, Rng& rng) {
  if (from == to) return 0;
  uint64_t base =
      from.zone == to.zone ? model.intra_zone_us : model.one_way(from.zone, to.zone);
  double scaled = static_cast<double>(base) * (1.0 + rng.uniform(0.0, model.jitter));
  return static_cast<uint64_t>(scaled);
}

// Five-zone preset loosely shaped after public inter-region ping data
// (VA, CA, OR, JP, EU). These are model inputs, not measurements of any
// particular deployment.
inline LatencyModel aws_5region_model(double jitter = 0.1) {
  LatencyModel m;
  m.intra_zone_us = 500;
  m.jitter = jitter;
  m.base_us = {
      {500, 30000, 35000, 80000, 40000},
      {30000, 500, 10000, 55000, 70000},
      {35000, 10000, 500, 50000, 65000},
      {80000, 55000, 50000, 500, 110000},
      {40000, 70000, 65000, 110000, 500},
  };
  return m;
}

// Line topology for arbitrary zone counts: 20ms + 15ms per hop, one way.
inline LatencyModel synthetic_model(int zones, double jitter = 0.1) {
  LatencyModel m;
  m.intra_zone_us = 500;
  m.jitter = jitter;
  m.base_us.assign(static_cast<size_t>(zones), std::vector<uint64_t>(static_cast<size_t>(zones)));
  for (int a = 0; a < zones; ++a)
    for (int b = 0; b < zones; ++b)
      m.base_us[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          a == b ? m.intra_zone_us : 20000 + 15000 * static_cast<uint64_t>(std::abs(a - b));
  return m;
}

inline LatencyModel latency_preset(const std::string& name, int zones, double jitter) {
  if (name == "aws-5region") {
    if (zones > 5) throw std::invalid_argument("aws-5region preset supports at most 5 zones");
    LatencyModel full = aws_5region_model(jitter);
    LatencyModel m;
    m.intra_zone_us = full.intra_zone_us;
    m.jitter = jitter;
    for (int a = 0; a < zones; ++a) {
      std::vector<uint64_t> row;
      for (int b = 0; b < zones; ++b)
        row.push_back(full.base_us[static_cast<size_t>(a)][static_cast<size_t>(b)]);
      m.base_us.push_back(std::move(row));
    }
    return m;
  }
  if (name == "synthetic") return synthetic_model(zones, jitter);
  throw std::invalid_argument("unknown latency preset: " + name);
}

// Zones ordered by proximity to `from`, nearest first; `from` itself is
// always first. Ties break on zone number.
inline std::vector<int> zones_by_proximity(const LatencyModel& model, int from, int zone_count) {
  std::vector<int> order;
  for (int z = 1; z <= zone_count; ++z) order.push_back(z);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    uint64_t da = a == from ? 0 : model.one_way(from, a);
    uint64_t db = b == from ? 0 : model.one_way(from, b);
    return da != db ? da < db : a < b;
  });
  return order;
}

// The zone with the smallest summed distance to all others (the default
// MultiPaxos leader placement).
inline int central_zone(const LatencyModel& model, int zone_count) {
  int best = 1;
  uint64_t best_sum = UINT64_MAX;
  for (int z = 1; z <= zone_count; ++z) {
    uint64_t sum = 0;
    for (int other = 1; other <= zone_count; ++other)
      if (other != z) sum += model.one_way(z, other);
    if (sum < best_sum) {
      best_sum = sum;
      best = z;
    }
  }
  return best;
}

}  // namespace wpaxos
