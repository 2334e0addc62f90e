#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "agilesim/net/packet.hpp"
#include "agilesim/net/time.hpp"

namespace agilesim::net {

enum class EventKind : std::uint8_t {
  FlowStart,
  FlowStop,
  PacketArrival,
  TransmitComplete,
  RtoExpiry,
};

/// Where a PacketArrival lands / which transmitter a TransmitComplete ends.
enum class Place : std::uint8_t {
  None,
  SenderAccess,        // TransmitComplete: sender finished serializing
  BottleneckIngress,   // PacketArrival: data reached the bottleneck queue
  Bottleneck,          // TransmitComplete: bottleneck finished serializing
  Receiver,            // PacketArrival: data reached the receiver
  ReverseBottleneck,   // PacketArrival: ACK reached the reverse bottleneck
  Sender,              // PacketArrival: ACK reached the sender
};

struct Event {
  SimTime at = 0;
  std::uint64_t order = 0;  // insertion sequence; breaks equal-time ties
  EventKind kind = EventKind::PacketArrival;
  Place place = Place::None;
  std::int32_t flow = -1;
  Packet pkt{};
};

/// Min-heap on (time, insertion order): deterministic processing order for
/// any simultaneous events. The backing vector stays inspectable so
/// end-of-run audits can count packets still in flight.
class EventQueue {
 public:
  void push(Event ev) {
    ev.order = next_order_++;
    heap_.push_back(ev);
    std::push_heap(heap_.begin(), heap_.end(), after_);
  }

  Event pop() {
    std::pop_heap(heap_.begin(), heap_.end(), after_);
    Event ev = heap_.back();
    heap_.pop_back();
    return ev;
  }

  const Event& top() const { return heap_.front(); }
  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }
  const std::vector<Event>& pending() const { return heap_; }

 private:
  struct After {
    bool operator()(const Event& a, const Event& b) const {
      if (a.at != b.at) return a.at > b.at;
      return a.order > b.order;
    }
  };

  After after_{};
  std::vector<Event> heap_;
  std::uint64_t next_order_ = 0;
};

}  // namespace agilesim::net
