#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "wpaxos/types.hpp"

namespace wpaxos {

// Quorum families.
//
// wpaxos mode: a q1 is any f+1 nodes in each of Z-F distinct zones; a q2
// is any f+1 nodes in each of F+1 distinct zones. Cross-phase
// intersection holds because (Z-F) + (F+1) > Z forces a common zone, and
// (f+1) + (f+1) > 2f+1 forces a common node inside it.
//
// grid mode: a q1 is a complete row (node r of every zone) and a q2 is a
// complete column (every node of one zone); a row and a column always
// meet in exactly one cell.
//
// Satisfaction is superset-based: an acknowledgment set satisfies a phase
// iff it contains some minimal quorum. Acks from nodes outside the config
// are ignored.

struct AckSet {
  std::set<NodeId> members;

  AckSet() = default;
  AckSet(std::initializer_list<NodeId> init) : members(init) {}

  void insert(NodeId n) { members.insert(n); }
  bool contains(NodeId n) const { return members.count(n) > 0; }
  size_t size() const { return members.size(); }
  bool operator<(const AckSet& o) const { return members < o.members; }
  bool operator==(const AckSet& o) const { return members == o.members; }
};

namespace detail {

// Per-zone counts of valid acks.
inline std::map<int, int> zone_counts(const AckSet& acks, const ClusterConfig& cfg) {
  std::map<int, int> counts;
  for (NodeId n : acks.members)
    if (cfg.contains(n)) counts[n.zone]++;
  return counts;
}

inline bool zones_with_majority_at_least(const AckSet& acks, const ClusterConfig& cfg,
                                         int zones_needed) {
  int have = 0;
  for (auto& [zone, count] : zone_counts(acks, cfg))
    if (count >= cfg.f + 1) have++;
  return have >= zones_needed;
}

inline bool has_full_row(const AckSet& acks, const ClusterConfig& cfg) {
  for (int r = 1; r <= cfg.nodes_per_zone; ++r) {
    bool full = true;
    for (int z = 1; z <= cfg.zones && full; ++z)
      full = acks.contains(NodeId{static_cast<uint8_t>(z), static_cast<uint8_t>(r)});
    if (full) return true;
  }
  return false;
}

inline bool has_full_column(const AckSet& acks, const ClusterConfig& cfg) {
  for (int z = 1; z <= cfg.zones; ++z) {
    bool full = true;
    for (int r = 1; r <= cfg.nodes_per_zone && full; ++r)
      full = acks.contains(NodeId{static_cast<uint8_t>(z), static_cast<uint8_t>(r)});
    if (full) return true;
  }
  return false;
}

}  // namespace detail

inline bool is_q1_satisfied(const AckSet& acks, const ClusterConfig& cfg) {
  if (cfg.mode == QuorumMode::grid) return detail::has_full_row(acks, cfg);
  return detail::zones_with_majority_at_least(acks, cfg, cfg.zones - cfg.zone_failures);
}

inline bool is_q2_satisfied(const AckSet& acks, const ClusterConfig& cfg) {
  if (cfg.mode == QuorumMode::grid) return detail::has_full_column(acks, cfg);
  return detail::zones_with_majority_at_least(acks, cfg, cfg.zone_failures + 1);
}

inline bool is_quorum_satisfied(const AckSet& acks, const ClusterConfig& cfg, int phase) {
  return phase == 1 ? is_q1_satisfied(acks, cfg) : is_q2_satisfied(acks, cfg);
}

// Enumeration is test/CLI machinery; it is exponential in Z and N, hence
// the size guard.
inline void check_enumeration_guard(const ClusterConfig& cfg) {
  if (cfg.zones > 5 || cfg.nodes_per_zone > 3)
    throw std::invalid_argument("quorum enumeration limited to Z <= 5, N <= 3");
}

namespace detail {

inline std::vector<std::vector<NodeId>> majority_subsets(const ClusterConfig& cfg, int zone) {
  // All (f+1)-subsets of one zone, in lexicographic order.
  std::vector<std::vector<NodeId>> out;
  int n = cfg.nodes_per_zone, k = cfg.f + 1;
  std::vector<int> idx(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
  while (true) {
    std::vector<NodeId> subset;
    for (int i : idx)
      subset.push_back(NodeId{static_cast<uint8_t>(zone), static_cast<uint8_t>(i + 1)});
    out.push_back(std::move(subset));
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<size_t>(pos)];
    for (int i = pos + 1; i < k; ++i)
      idx[static_cast<size_t>(i)] = idx[static_cast<size_t>(i - 1)] + 1;
  }
  return out;
}

inline void zone_combinations(int zones, int pick, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == pick) {
      out.push_back(cur);
      return;
    }
    for (int z = start; z <= zones; ++z) {
      cur.push_back(z);
      rec(z + 1);
      cur.pop_back();
    }
  };
  rec(1);
}

}  // namespace detail

// All minimal quorums of the requested phase.
inline std::vector<AckSet> enumerate_quorums(const ClusterConfig& cfg, int phase) {
  if (auto err = validate_config_error(cfg)) throw std::invalid_argument(*err);
  check_enumeration_guard(cfg);

  std::vector<AckSet> out;
  if (cfg.mode == QuorumMode::grid) {
    if (phase == 1) {
      for (int r = 1; r <= cfg.nodes_per_zone; ++r) {
        AckSet row;
        for (int z = 1; z <= cfg.zones; ++z)
          row.insert(NodeId{static_cast<uint8_t>(z), static_cast<uint8_t>(r)});
        out.push_back(std::move(row));
      }
    } else {
      for (int z = 1; z <= cfg.zones; ++z) {
        AckSet col;
        for (NodeId n : cfg.zone_nodes(z)) col.insert(n);
        out.push_back(std::move(col));
      }
    }
    return out;
  }

  int zones_needed = phase == 1 ? cfg.zones - cfg.zone_failures : cfg.zone_failures + 1;
  std::vector<std::vector<int>> zone_sets;
  detail::zone_combinations(cfg.zones, zones_needed, zone_sets);
  for (const auto& zones : zone_sets) {
    std::vector<AckSet> partials{AckSet{}};
    for (int z : zones) {
      std::vector<AckSet> next;
      for (const auto& partial : partials)
        for (const auto& subset : detail::majority_subsets(cfg, z)) {
          AckSet grown = partial;
          for (NodeId n : subset) grown.insert(n);
          next.push_back(std::move(grown));
        }
      partials = std::move(next);
    }
    for (auto& q : partials) out.push_back(std::move(q));
  }
  return out;
}

// Every (q1, q2) pair must share a node; this is the safety precondition
// for the whole protocol.
inline bool check_intersection(const ClusterConfig& cfg) {
  auto q1s = enumerate_quorums(cfg, 1);
  auto q2s = enumerate_quorums(cfg, 2);
  for (const auto& q1 : q1s)
    for (const auto& q2 : q2s) {
      bool meet = false;
      for (NodeId n : q1.members)
        if (q2.contains(n)) {
          meet = true;
          break;
        }
      if (!meet) return false;
    }
  return true;
}

inline int q1_size(const ClusterConfig& cfg) {
  if (cfg.mode == QuorumMode::grid) return cfg.zones;
  return (cfg.f + 1) * (cfg.zones - cfg.zone_failures);
}

inline int q2_size(const ClusterConfig& cfg) {
  if (cfg.mode == QuorumMode::grid) return cfg.nodes_per_zone;
  return (cfg.f + 1) * (cfg.zone_failures + 1);
}

}  // namespace wpaxos
