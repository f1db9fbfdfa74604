#pragma once

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wpaxos/command.hpp"
#include "wpaxos/wire.hpp"

namespace wpaxos {

// What a run records. `checker` adds per-node commit/execute records so
// the offline checkers can prove cross-node agreement; `debug` adds every
// message delivery and drop. Benchmark runs keep leader-side records only
// to stay lean.
enum class TraceDetail : uint8_t { benchmark, checker, debug };

enum class TraceKind : uint8_t {
  submit = 1,       // client command handed to a node
  reply = 2,        // client observed a reply (or gave up)
  commit = 3,       // node marked (object, slot) committed
  execute = 4,      // node applied (object, slot) to its state machine
  steal = 5,        // node acquired object leadership (q1 satisfied)
  ownership_lost = 6,
  p1a = 7,          // phase-1 attempt issued
  nack = 8,         // negative reply sent (status: 1 or 2 for the phase)
  fault = 9,
  config_change = 10,
  hint = 11,        // handover hint sent (peer = target node)
  requeue = 12,     // proposal rejected, command back to queue
  deliver = 13,
  drop = 14,
};

// Reply status values.
enum : uint8_t {
  kReplyOk = 0,
  kReplyUnknownObject = 1,
  kReplyTxnAborted = 2,
  kReplyGaveUp = 3,
};

// Reply flag bits.
enum : uint8_t {
  kFlagForwarded = 1,
  kFlagStoleFirst = 2,
  kFlagLocalCommit = 4,
};

struct TraceRecord {
  TraceKind kind = TraceKind::submit;
  uint64_t time = 0;
  NodeId node;   // acting node (sender for deliver/drop)
  NodeId peer;   // hint target / deliver destination
  ObjectId object = 0;
  uint64_t slot = 0;
  Ballot ballot;
  uint64_t cmd_id = 0;
  uint32_t client = 0;
  uint8_t zone = 0;    // client zone on submit/reply
  uint8_t status = 0;  // reply status, nack phase, fault kind
  uint8_t flags = 0;
  uint8_t attempt = 0;
  uint32_t epoch = 0;
  Command cmd;                 // submit only
  std::vector<Bytes> results;  // reply only: read results per object
  ClusterConfig config;        // config_change only
};

inline void encode(wire::Writer& w, const TraceRecord& r) {
  w.u8(static_cast<uint8_t>(r.kind));
  w.u64(r.time);
  wire::put(w, r.node);
  wire::put(w, r.peer);
  w.u32(r.object);
  w.u64(r.slot);
  wire::put(w, r.ballot);
  w.u64(r.cmd_id);
  w.u32(r.client);
  w.u8(r.zone);
  w.u8(r.status);
  w.u8(r.flags);
  w.u8(r.attempt);
  w.u32(r.epoch);
  switch (r.kind) {
    case TraceKind::submit:
      wire::put(w, r.cmd);
      break;
    case TraceKind::reply:
      w.u16(static_cast<uint16_t>(r.results.size()));
      for (const auto& b : r.results) w.bytes(b);
      break;
    case TraceKind::config_change:
      wire::put(w, r.config);
      break;
    default:
      break;
  }
}

inline TraceRecord decode_record(wire::Reader& rd) {
  TraceRecord r;
  r.kind = static_cast<TraceKind>(rd.u8());
  r.time = rd.u64();
  r.node = wire::get_node(rd);
  r.peer = wire::get_node(rd);
  r.object = rd.u32();
  r.slot = rd.u64();
  r.ballot = wire::get_ballot(rd);
  r.cmd_id = rd.u64();
  r.client = rd.u32();
  r.zone = rd.u8();
  r.status = rd.u8();
  r.flags = rd.u8();
  r.attempt = rd.u8();
  r.epoch = rd.u32();
  switch (r.kind) {
    case TraceKind::submit:
      r.cmd = wire::get_command(rd);
      break;
    case TraceKind::reply: {
      uint16_t n = rd.u16();
      for (uint16_t i = 0; i < n; ++i) r.results.push_back(rd.bytes());
      break;
    }
    case TraceKind::config_change:
      r.config = wire::get_cluster(rd);
      break;
    default:
      break;
  }
  return r;
}

struct Trace {
  std::string name;
  uint64_t seed = 0;
  TraceDetail detail = TraceDetail::benchmark;
  std::vector<TraceRecord> records;
};

inline constexpr uint32_t kTraceMagic = 0x57505854;  // "WPXT"
inline constexpr uint16_t kTraceVersion = 1;

inline std::vector<uint8_t> serialize_trace(const Trace& t) {
  wire::Writer w;
  w.u32(kTraceMagic);
  w.u16(kTraceVersion);
  w.u64(t.seed);
  w.u8(static_cast<uint8_t>(t.detail));
  w.str(t.name);
  for (const auto& r : t.records) {
    wire::Writer body;
    encode(body, r);
    w.u32(static_cast<uint32_t>(body.data().size()));
    const auto& b = body.data();
    for (uint8_t byte : b) w.u8(byte);
  }
  return w.take();
}

inline Trace deserialize_trace(const std::vector<uint8_t>& bytes) {
  wire::Reader rd(bytes);
  Trace t;
  if (rd.u32() != kTraceMagic) throw std::runtime_error("not a trace file");
  if (rd.u16() != kTraceVersion) throw std::runtime_error("unsupported trace version");
  t.seed = rd.u64();
  t.detail = static_cast<TraceDetail>(rd.u8());
  t.name = rd.str();
  while (!rd.done()) {
    uint32_t len = rd.u32();
    if (len > rd.remaining()) throw std::runtime_error("truncated trace record");
    // Decode in place; the record decoder consumes exactly the body.
    wire::Reader body(bytes.data() + (bytes.size() - rd.remaining()), len);
    t.records.push_back(decode_record(body));
    for (uint32_t i = 0; i < len; ++i) rd.u8();
  }
  return t;
}

inline void write_trace_file(const std::string& path, const Trace& t) {
  auto bytes = serialize_trace(t);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

inline Trace read_trace_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  return deserialize_trace(bytes);
}

}  // namespace wpaxos
