#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "wpaxos/command.hpp"
#include "wpaxos/types.hpp"

namespace wpaxos {

// Protocol messages. 1a/1b/2a/2b/3 follow the five-phase shape; the
// negative replies (Nack1b/Nack2b) carry the rejector's higher ballot so
// the sender's ballot cache stays current. Forward and Hint are the
// adaptive-policy plumbing: request forwarding to the believed leader and
// the majority-zone handover nudge.

struct M1a {
  NodeId n;
  ObjectId o = 0;
  Ballot b;
};

// One log entry reported back during phase-1. The new leader adopts
// committed entries as-is and re-proposes the highest-ballot uncommitted
// value per slot under its own ballot.
struct RecoveryEntry {
  uint64_t slot = 0;
  Ballot ballot;
  Command cmd;
  std::vector<Placement> placements;
  bool committed = false;
};

struct M1b {
  NodeId n;
  ObjectId o = 0;
  Ballot b;
  uint64_t top_slot = 0;
  std::vector<RecoveryEntry> recovery;
};

struct Nack1b {
  NodeId n;
  ObjectId o = 0;
  Ballot b;  // the higher ballot the rejector knows
};

// Single-object accepts use (o, b, slot, cmd); a txn accept additionally
// lists every leg in placements (each with its own per-object ballot) and
// is acknowledged or rejected as a unit. (o, slot) double as the anchor
// key the 2b acks refer to.
struct M2a {
  NodeId n;
  ObjectId o = 0;
  Ballot b;
  uint64_t slot = 0;
  Command cmd;
  std::vector<Placement> placements;
};

struct M2b {
  NodeId n;
  ObjectId o = 0;
  Ballot b;
  uint64_t slot = 0;
};

struct Nack2b {
  NodeId n;
  ObjectId o = 0;
  Ballot b;  // the higher ballot the rejector knows
  uint64_t slot = 0;
};

struct M3 {
  NodeId n;
  ObjectId o = 0;
  Ballot b;
  uint64_t slot = 0;
  Command cmd;
  std::vector<Placement> placements;
};

struct Forward {
  Command cmd;
  uint8_t hops = 0;
};

struct Hint {
  ObjectId o = 0;
};

using Payload = std::variant<M1a, M1b, Nack1b, M2a, M2b, Nack2b, M3, Forward, Hint>;

// Wire envelope. Every message is stamped with the sender's active
// config so laggards fast-forward on first contact after a
// reconfiguration.
struct Message {
  NodeId from;
  ActiveConfig config;
  Payload payload;
};

inline const char* payload_name(const Payload& p) {
  switch (p.index()) {
    case 0: return "1a";
    case 1: return "1b";
    case 2: return "nack1b";
    case 3: return "2a";
    case 4: return "2b";
    case 5: return "nack2b";
    case 6: return "3";
    case 7: return "forward";
    case 8: return "hint";
  }
  return "?";
}

}  // namespace wpaxos
