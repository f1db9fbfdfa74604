#pragma once

#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>
#include <vector>

#include "wpaxos/command.hpp"
#include "wpaxos/message.hpp"
#include "wpaxos/types.hpp"

namespace wpaxos::wire {

// Canonical little-endian encoding. Field order is fixed by the encode
// functions below; unions are integer-tagged. Traces produced from the
// same (config, seed) must be byte-identical, so nothing
// platform-dependent (no floats, no pointer-order iteration) is written.

class Writer {
 public:
  void u8(uint8_t v) { buf_.push_back(v); }
  void u16(uint16_t v) {
    for (int i = 0; i < 2; ++i) buf_.push_back(static_cast<uint8_t>(v >> (8 * i)));
  }
  void u32(uint32_t v) {
    for (int i = 0; i < 4; ++i) buf_.push_back(static_cast<uint8_t>(v >> (8 * i)));
  }
  void u64(uint64_t v) {
    for (int i = 0; i < 8; ++i) buf_.push_back(static_cast<uint8_t>(v >> (8 * i)));
  }
  void bytes(const Bytes& b) {
    u32(static_cast<uint32_t>(b.size()));
    buf_.insert(buf_.end(), b.begin(), b.end());
  }
  void str(const std::string& s) {
    u16(static_cast<uint16_t>(s.size()));
    buf_.insert(buf_.end(), s.begin(), s.end());
  }

  const std::vector<uint8_t>& data() const { return buf_; }
  std::vector<uint8_t> take() { return std::move(buf_); }

 private:
  std::vector<uint8_t> buf_;
};

class Reader {
 public:
  Reader(const uint8_t* data, size_t size) : data_(data), size_(size) {}
  explicit Reader(const std::vector<uint8_t>& v) : Reader(v.data(), v.size()) {}

  uint8_t u8() { return take(1)[0]; }
  uint16_t u16() { return static_cast<uint16_t>(gather(2)); }
  uint32_t u32() { return static_cast<uint32_t>(gather(4)); }
  uint64_t u64() { return gather(8); }
  Bytes bytes() {
    uint32_t n = u32();
    const uint8_t* p = take(n);
    return Bytes(p, p + n);
  }
  std::string str() {
    uint16_t n = u16();
    const uint8_t* p = take(n);
    return std::string(p, p + n);
  }
  bool done() const { return pos_ == size_; }
  size_t remaining() const { return size_ - pos_; }

 private:
  const uint8_t* take(size_t n) {
    if (pos_ + n > size_) throw std::runtime_error("wire: truncated record");
    const uint8_t* p = data_ + pos_;
    pos_ += n;
    return p;
  }
  uint64_t gather(size_t n) {
    const uint8_t* p = take(n);
    uint64_t v = 0;
    for (size_t i = 0; i < n; ++i) v |= static_cast<uint64_t>(p[i]) << (8 * i);
    return v;
  }
  const uint8_t* data_;
  size_t size_;
  size_t pos_ = 0;
};

inline void put(Writer& w, NodeId n) {
  w.u8(n.zone);
  w.u8(n.index);
}
inline NodeId get_node(Reader& r) {
  NodeId n;
  n.zone = r.u8();
  n.index = r.u8();
  return n;
}

inline void put(Writer& w, const Ballot& b) {
  w.u32(b.counter);
  put(w, b.leader);
}
inline Ballot get_ballot(Reader& r) {
  Ballot b;
  b.counter = r.u32();
  b.leader = get_node(r);
  return b;
}

inline void put(Writer& w, const Command& c) {
  w.u64(c.id);
  w.u8(static_cast<uint8_t>(c.kind));
  w.u8(c.origin_zone);
  w.u32(c.client);
  w.u8(c.attempt);
  w.u16(static_cast<uint16_t>(c.objects.size()));
  for (size_t i = 0; i < c.objects.size(); ++i) {
    w.u32(c.objects[i]);
    w.bytes(c.payloads[i]);
  }
}
inline Command get_command(Reader& r) {
  Command c;
  c.id = r.u64();
  c.kind = static_cast<CommandKind>(r.u8());
  c.origin_zone = r.u8();
  c.client = r.u32();
  c.attempt = r.u8();
  uint16_t n = r.u16();
  for (uint16_t i = 0; i < n; ++i) {
    c.objects.push_back(r.u32());
    c.payloads.push_back(r.bytes());
  }
  return c;
}

inline void put(Writer& w, const Placement& p) {
  w.u32(p.object);
  w.u64(p.slot);
  put(w, p.ballot);
}
inline Placement get_placement(Reader& r) {
  Placement p;
  p.object = r.u32();
  p.slot = r.u64();
  p.ballot = get_ballot(r);
  return p;
}

inline void put(Writer& w, const std::vector<Placement>& ps) {
  w.u16(static_cast<uint16_t>(ps.size()));
  for (const auto& p : ps) put(w, p);
}
inline std::vector<Placement> get_placements(Reader& r) {
  std::vector<Placement> ps(r.u16());
  for (auto& p : ps) p = get_placement(r);
  return ps;
}

inline void put(Writer& w, const ClusterConfig& c) {
  w.u8(static_cast<uint8_t>(c.zones));
  w.u8(static_cast<uint8_t>(c.nodes_per_zone));
  w.u8(static_cast<uint8_t>(c.f));
  w.u8(static_cast<uint8_t>(c.zone_failures));
  w.u8(static_cast<uint8_t>(c.mode));
}
inline ClusterConfig get_cluster(Reader& r) {
  ClusterConfig c;
  c.zones = r.u8();
  c.nodes_per_zone = r.u8();
  c.f = r.u8();
  c.zone_failures = r.u8();
  c.mode = static_cast<QuorumMode>(r.u8());
  return c;
}

inline void put(Writer& w, const ActiveConfig& a) {
  w.u32(a.epoch);
  put(w, a.cfg);
  w.u8(a.joint_next ? 1 : 0);
  if (a.joint_next) put(w, *a.joint_next);
}
inline ActiveConfig get_active(Reader& r) {
  ActiveConfig a;
  a.epoch = r.u32();
  a.cfg = get_cluster(r);
  if (r.u8()) a.joint_next = get_cluster(r);
  return a;
}

inline void put(Writer& w, const RecoveryEntry& e) {
  w.u64(e.slot);
  put(w, e.ballot);
  put(w, e.cmd);
  put(w, e.placements);
  w.u8(e.committed ? 1 : 0);
}
inline RecoveryEntry get_recovery(Reader& r) {
  RecoveryEntry e;
  e.slot = r.u64();
  e.ballot = get_ballot(r);
  e.cmd = get_command(r);
  e.placements = get_placements(r);
  e.committed = r.u8() != 0;
  return e;
}

inline void put(Writer& w, const Message& m) {
  put(w, m.from);
  put(w, m.config);
  w.u8(static_cast<uint8_t>(m.payload.index()));
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, M1a>) {
          put(w, p.n);
          w.u32(p.o);
          put(w, p.b);
        } else if constexpr (std::is_same_v<T, M1b>) {
          put(w, p.n);
          w.u32(p.o);
          put(w, p.b);
          w.u64(p.top_slot);
          w.u16(static_cast<uint16_t>(p.recovery.size()));
          for (const auto& e : p.recovery) put(w, e);
        } else if constexpr (std::is_same_v<T, Nack1b>) {
          put(w, p.n);
          w.u32(p.o);
          put(w, p.b);
        } else if constexpr (std::is_same_v<T, M2a>) {
          put(w, p.n);
          w.u32(p.o);
          put(w, p.b);
          w.u64(p.slot);
          put(w, p.cmd);
          put(w, p.placements);
        } else if constexpr (std::is_same_v<T, M2b>) {
          put(w, p.n);
          w.u32(p.o);
          put(w, p.b);
          w.u64(p.slot);
        } else if constexpr (std::is_same_v<T, Nack2b>) {
          put(w, p.n);
          w.u32(p.o);
          put(w, p.b);
          w.u64(p.slot);
        } else if constexpr (std::is_same_v<T, M3>) {
          put(w, p.n);
          w.u32(p.o);
          put(w, p.b);
          w.u64(p.slot);
          put(w, p.cmd);
          put(w, p.placements);
        } else if constexpr (std::is_same_v<T, Forward>) {
          put(w, p.cmd);
          w.u8(p.hops);
        } else if constexpr (std::is_same_v<T, Hint>) {
          w.u32(p.o);
        }
      },
      m.payload);
}

inline Message get_message(Reader& r) {
  Message m;
  m.from = get_node(r);
  m.config = get_active(r);
  uint8_t tag = r.u8();
  switch (tag) {
    case 0: {
      M1a p;
      p.n = get_node(r);
      p.o = r.u32();
      p.b = get_ballot(r);
      m.payload = p;
      break;
    }
    case 1: {
      M1b p;
      p.n = get_node(r);
      p.o = r.u32();
      p.b = get_ballot(r);
      p.top_slot = r.u64();
      p.recovery.resize(r.u16());
      for (auto& e : p.recovery) e = get_recovery(r);
      m.payload = p;
      break;
    }
    case 2: {
      Nack1b p;
      p.n = get_node(r);
      p.o = r.u32();
      p.b = get_ballot(r);
      m.payload = p;
      break;
    }
    case 3: {
      M2a p;
      p.n = get_node(r);
      p.o = r.u32();
      p.b = get_ballot(r);
      p.slot = r.u64();
      p.cmd = get_command(r);
      p.placements = get_placements(r);
      m.payload = p;
      break;
    }
    case 4: {
      M2b p;
      p.n = get_node(r);
      p.o = r.u32();
      p.b = get_ballot(r);
      p.slot = r.u64();
      m.payload = p;
      break;
    }
    case 5: {
      Nack2b p;
      p.n = get_node(r);
      p.o = r.u32();
      p.b = get_ballot(r);
      p.slot = r.u64();
      m.payload = p;
      break;
    }
    case 6: {
      M3 p;
      p.n = get_node(r);
      p.o = r.u32();
      p.b = get_ballot(r);
      p.slot = r.u64();
      p.cmd = get_command(r);
      p.placements = get_placements(r);
      m.payload = p;
      break;
    }
    case 7: {
      Forward p;
      p.cmd = get_command(r);
      p.hops = r.u8();
      m.payload = p;
      break;
    }
    case 8: {
      Hint p;
      p.o = r.u32();
      m.payload = p;
      break;
    }
    default:
      throw std::runtime_error("wire: bad message tag");
  }
  return m;
}

}  // namespace wpaxos::wire
