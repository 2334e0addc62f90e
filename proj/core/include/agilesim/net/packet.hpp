#pragma once

#include <cstdint>

#include "agilesim/net/time.hpp"

namespace agilesim::net {

enum class PacketKind : std::uint8_t { Data, Ack };

/// On-wire unit, passed by value through the event queue. For Data, seq is
/// the segment number; for Ack it is the receiver's cumulative next-expected
/// segment.
struct Packet {
  std::int32_t flow = 0;
  PacketKind kind = PacketKind::Data;
  bool retransmit = false;
  std::int64_t seq = 0;
  std::int32_t size_bytes = 0;
  SimTime sent_at = 0;  // first transmission time of this copy
};

}  // namespace agilesim::net
