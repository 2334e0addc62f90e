#pragma once

#include "agilesim/net/packet.hpp"
#include "agilesim/net/rng.hpp"
#include "agilesim/net/time.hpp"

namespace agilesim::net {

struct LinkSpec {
  double bandwidth_bps = 1e9;
  SimTime prop_delay = kNsPerMs;
};

/// Point-to-point serialized link. Transmissions start no earlier than the
/// previous one finished; delivery is start + size*8/bandwidth + prop_delay.
/// send_at() mutates busy time, so each link must be fed in nondecreasing
/// ready-time order (per-flow links see one FIFO stream; the shared reverse
/// bottleneck is fed from arrival events, which the event loop orders).
class Link {
 public:
  explicit Link(LinkSpec spec = {}) : spec_(spec) {}

  SimTime tx_time(std::int32_t bytes) const;

  /// Serializes a packet that is ready at `ready`; returns the arrival time
  /// at the far end.
  SimTime send_at(SimTime ready, std::int32_t bytes) {
    const SimTime start = ready > busy_until_ ? ready : busy_until_;
    busy_until_ = start + tx_time(bytes);
    return busy_until_ + spec_.prop_delay;
  }

  SimTime busy_until() const { return busy_until_; }
  const LinkSpec& spec() const { return spec_; }

 private:
  LinkSpec spec_;
  SimTime busy_until_ = 0;
};

/// Bernoulli corruption lottery: true means the packet is dropped. Applied
/// to data packets on the bottleneck link only; never to ACKs.
bool maybe_corrupt(double per, Rng& rng);

}  // namespace agilesim::net
