#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wpaxos {

// Nodes are addressed as (zone, index), both 1-based. Zones are the unit
// of availability isolation; the node order (zone first, then index) is
// also the ballot tie-break order.
struct NodeId {
  uint8_t zone = 0;
  uint8_t index = 0;

  auto operator<=>(const NodeId&) const = default;
};

inline std::string to_string(NodeId n) {
  return "n" + std::to_string(n.zone) + "." + std::to_string(n.index);
}

using ObjectId = uint32_t;

// Per-object leadership epoch. Lexicographic order: counter first, then
// the leader id. (counter == 0) means no leader has ever been elected;
// the leader field then just names the node that initialized the state.
struct Ballot {
  uint32_t counter = 0;
  NodeId leader;

  auto operator<=>(const Ballot&) const = default;
};

inline std::string to_string(const Ballot& b) {
  return "<" + std::to_string(b.counter) + "," + to_string(b.leader) + ">";
}

inline NodeId leader_of(const Ballot& b) { return b.leader; }

inline Ballot ballot_next(const Ballot& current, NodeId self) {
  if (current.counter == UINT32_MAX) throw std::overflow_error("ballot counter overflow");
  return Ballot{current.counter + 1, self};
}

enum class QuorumMode : uint8_t { wpaxos, grid };

// Cluster shape: Z zones of N = 2f+1 nodes, tolerating f node crashes per
// zone and F whole-zone failures. In grid mode the quorums are literal
// grid rows/columns and f/F do not apply.
struct ClusterConfig {
  int zones = 0;           // Z
  int nodes_per_zone = 0;  // N
  int f = 0;
  int zone_failures = 0;   // F
  QuorumMode mode = QuorumMode::wpaxos;

  bool operator==(const ClusterConfig&) const = default;

  int node_count() const { return zones * nodes_per_zone; }

  bool contains(NodeId n) const {
    return n.zone >= 1 && n.zone <= zones && n.index >= 1 && n.index <= nodes_per_zone;
  }

  // Dense 0-based ordinal, usable as an array index.
  int ordinal(NodeId n) const { return (n.zone - 1) * nodes_per_zone + (n.index - 1); }

  std::vector<NodeId> all_nodes() const {
    std::vector<NodeId> out;
    out.reserve(static_cast<size_t>(node_count()));
    for (int z = 1; z <= zones; ++z)
      for (int i = 1; i <= nodes_per_zone; ++i)
        out.push_back(NodeId{static_cast<uint8_t>(z), static_cast<uint8_t>(i)});
    return out;
  }

  std::vector<NodeId> zone_nodes(int zone) const {
    std::vector<NodeId> out;
    for (int i = 1; i <= nodes_per_zone; ++i)
      out.push_back(NodeId{static_cast<uint8_t>(zone), static_cast<uint8_t>(i)});
    return out;
  }
};

// Empty result means the config is valid.
inline std::optional<std::string> validate_config_error(const ClusterConfig& cfg) {
  if (cfg.zones < 1) return "Z must be >= 1";
  if (cfg.nodes_per_zone < 1) return "N must be >= 1";
  if (cfg.mode == QuorumMode::grid) {
    if (cfg.zone_failures != 0) return "grid mode does not take an F parameter";
    return std::nullopt;
  }
  if (cfg.nodes_per_zone != 2 * cfg.f + 1)
    return "N must equal 2f+1 (got N=" + std::to_string(cfg.nodes_per_zone) +
           ", f=" + std::to_string(cfg.f) + ")";
  if (cfg.zone_failures < 0) return "F must be >= 0";
  if (cfg.zone_failures >= cfg.zones)
    return "F must be < Z (got F=" + std::to_string(cfg.zone_failures) +
           ", Z=" + std::to_string(cfg.zones) + ")";
  return std::nullopt;
}

inline bool config_valid(const ClusterConfig& cfg) { return !validate_config_error(cfg); }

// The config a node is currently operating under. epoch counts executed
// config-log entries; while joint_next is set every quorum decision must
// hold under both the old and the new shape.
struct ActiveConfig {
  uint32_t epoch = 0;
  ClusterConfig cfg;
  std::optional<ClusterConfig> joint_next;

  bool operator==(const ActiveConfig&) const = default;
};

}  // namespace wpaxos

template <>
struct std::hash<wpaxos::NodeId> {
  size_t operator()(wpaxos::NodeId n) const noexcept {
    return std::hash<uint16_t>()(static_cast<uint16_t>(n.zone) << 8 | n.index);
  }
};
