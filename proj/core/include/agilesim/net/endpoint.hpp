#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>

#include "agilesim/net/time.hpp"

namespace agilesim::net {

/// Retransmission timer, RFC 6298 shape: SRTT/RTTVAR smoothing, 200 ms
/// floor, 60 s ceiling, x2 backoff per expiry. A fresh sample clears the
/// backoff (only unretransmitted segments are sampled).
class RtoEstimator {
 public:
  static constexpr SimTime kMinRto = 200 * kNsPerMs;
  static constexpr SimTime kMaxRto = 60 * kNsPerSec;

  void sample(SimTime rtt) {
    const double r = to_seconds(rtt);
    if (!has_sample_) {
      srtt_ = r;
      rttvar_ = r / 2.0;
      has_sample_ = true;
    } else {
      rttvar_ = 0.75 * rttvar_ + 0.25 * std::abs(srtt_ - r);
      srtt_ = 0.875 * srtt_ + 0.125 * r;
    }
    backoff_ = 1;
  }

  void back_off() { backoff_ = std::min(backoff_ * 2, 1 << 16); }

  SimTime rto() const {
    SimTime base = has_sample_ ? from_seconds(srtt_ + 4.0 * rttvar_)
                               : kNsPerSec;  // 1 s before the first sample
    base = std::clamp(base, kMinRto, kMaxRto);
    const SimTime backed = base * backoff_;
    return backed < kMaxRto ? backed : kMaxRto;
  }

  double srtt_s() const { return srtt_; }
  int backoff() const { return backoff_; }

 private:
  bool has_sample_ = false;
  double srtt_ = 0.0;
  double rttvar_ = 0.0;
  int backoff_ = 1;
};

/// Receive-side reassembly: cumulative next-expected pointer plus an
/// out-of-order set. One cumulative ACK per arriving data packet, no delayed
/// ACKs, unbounded receive window.
class ReceiverEndpoint {
 public:
  /// Registers an arriving segment. first_copy reports whether this payload
  /// had never been seen (goodput accounting). Returns the cumulative ACK.
  std::int64_t on_data(std::int64_t seq, bool& first_copy) {
    first_copy = false;
    if (seq == rcv_next_) {
      first_copy = true;
      ++rcv_next_;
      // Drain any buffered run that is now in order.
      auto it = out_of_order_.begin();
      while (it != out_of_order_.end() && *it == rcv_next_) {
        ++rcv_next_;
        it = out_of_order_.erase(it);
      }
    } else if (seq > rcv_next_) {
      first_copy = out_of_order_.insert(seq).second;
    }
    // seq < rcv_next_: stale duplicate, ACK re-states the cumulative point.
    return rcv_next_;
  }

  std::int64_t rcv_next() const { return rcv_next_; }
  std::size_t buffered() const { return out_of_order_.size(); }

 private:
  std::int64_t rcv_next_ = 0;
  std::set<std::int64_t> out_of_order_;
};

/// Send-side bookkeeping for one bulk (infinite-source) flow. Window checks
/// use pipe(): during fast recovery each duplicate ACK credits one departed
/// segment, which keeps data flowing without inflating the controller's
/// cwnd; outside recovery pipe() is plain in-flight.
struct SenderEndpoint {
  struct SegmentInfo {
    SimTime sent_at = 0;
    bool retransmitted = false;
  };

  bool active = false;
  bool tx_busy = false;
  std::int64_t next_seq = 0;
  std::int64_t highest_cum_ack = 0;
  int dup_acks = 0;
  bool in_recovery = false;
  std::int64_t recovery_point = 0;
  std::deque<SegmentInfo> unacked;  // [highest_cum_ack, next_seq)
  std::deque<std::int64_t> rexmit_queue;

  RtoEstimator rto;
  bool rto_armed = false;
  SimTime rto_deadline = 0;
  bool rto_event_pending = false;

  std::int64_t in_flight() const { return next_seq - highest_cum_ack; }
  std::int64_t pipe() const { return in_flight() - dup_acks; }

  SegmentInfo& segment(std::int64_t seq) {
    return unacked[static_cast<std::size_t>(seq - highest_cum_ack)];
  }
};

}  // namespace agilesim::net
