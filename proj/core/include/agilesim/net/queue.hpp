#pragma once

#include <deque>

#include "agilesim/net/packet.hpp"

namespace agilesim::net {

/// FIFO with tail drop. Capacity counts waiting packets; the packet in
/// transmission is held by the link, not the queue.
class DropTailQueue {
 public:
  explicit DropTailQueue(int capacity) : capacity_(capacity) {}

  /// Appends if there is room; returns false (tail drop) when full.
  bool try_push(const Packet& p) {
    if (static_cast<int>(q_.size()) >= capacity_) return false;
    q_.push_back(p);
    return true;
  }

  Packet pop() {
    Packet p = q_.front();
    q_.pop_front();
    return p;
  }

  bool empty() const { return q_.empty(); }
  int size() const { return static_cast<int>(q_.size()); }
  int capacity() const { return capacity_; }
  const std::deque<Packet>& contents() const { return q_; }

 private:
  int capacity_;
  std::deque<Packet> q_;
};

}  // namespace agilesim::net
