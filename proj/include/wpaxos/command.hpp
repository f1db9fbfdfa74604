#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "wpaxos/types.hpp"

namespace wpaxos {

enum class CommandKind : uint8_t { get, put, txn };

using Bytes = std::vector<uint8_t>;

// A client command. Single-object commands carry exactly one object; txn
// commands carry a strictly increasing object list (the ordered-stealing
// lock order). id 0 is reserved for recovery no-ops.
struct Command {
  uint64_t id = 0;
  CommandKind kind = CommandKind::put;
  std::vector<ObjectId> objects;
  std::vector<Bytes> payloads;  // parallel to objects; empty payload on a txn leg = read
  uint8_t origin_zone = 0;
  uint32_t client = 0;
  uint8_t attempt = 0;  // client resubmission counter

  bool is_noop() const { return id == 0; }

  static Command noop(ObjectId o) {
    Command c;
    c.id = 0;
    c.kind = CommandKind::put;
    c.objects = {o};
    c.payloads = {{}};
    return c;
  }

  bool well_formed() const {
    if (objects.empty() || objects.size() != payloads.size()) return false;
    if (kind != CommandKind::txn) return objects.size() == 1;
    for (size_t i = 1; i < objects.size(); ++i)
      if (objects[i] <= objects[i - 1]) return false;
    return true;
  }

  bool operator==(const Command&) const = default;
};

// (object, slot) pair plus the ballot the slot was proposed under; a txn
// carries one placement per object it touches.
struct Placement {
  ObjectId object = 0;
  uint64_t slot = 0;
  Ballot ballot;

  bool operator==(const Placement&) const = default;
};

// One slot of an object log. Once committed, (ballot, cmd) are frozen;
// executed implies committed.
struct LogEntry {
  Ballot ballot;
  Command cmd;
  std::vector<Placement> placements;  // txn entries only: all legs of the txn
  bool committed = false;
  bool executed = false;
};

// Everything a node tracks per object. Slots are 1-based; top_slot is the
// highest slot this node knows to be in use ("slots[o]" in the protocol),
// exec_watermark the highest slot S such that all slots <= S are executed.
struct ObjectState {
  Ballot ballot;
  uint64_t top_slot = 0;
  bool owned = false;
  std::map<uint64_t, LogEntry> log;
  uint64_t exec_watermark = 0;
};

}  // namespace wpaxos
