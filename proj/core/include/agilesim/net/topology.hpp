#pragma once

#include <vector>

#include "agilesim/net/link.hpp"
#include "agilesim/net/time.hpp"

namespace agilesim::net {

/// Dumbbell parameters. Defaults are the evaluation setup: every link at
/// 1 Gbps, 1 ms node-to-router and 4 ms router-to-router delay, 1000-byte
/// segments with 40-byte headers, drop-tail bottleneck buffer.
struct DumbbellConfig {
  int n_flows = 1;
  int buffer_packets = 500;
  double per = 0.0;  // bottleneck data-packet error rate
  double access_bandwidth_bps = 1e9;
  double bottleneck_bandwidth_bps = 1e9;
  SimTime access_delay = kNsPerMs;
  SimTime bottleneck_delay = 4 * kNsPerMs;
  std::vector<SimTime> access_delays;  // per-flow override (RTT fairness)
  std::int32_t segment_bytes = 1000;   // payload
  std::int32_t header_bytes = 40;
  std::int32_t ack_bytes = 40;
};

struct Topology {
  DumbbellConfig cfg;

  SimTime access_delay_of(int flow) const {
    return cfg.access_delays.empty() ? cfg.access_delay
                                     : cfg.access_delays[static_cast<std::size_t>(flow)];
  }

  /// Two-way propagation: 2 * (access + bottleneck + access).
  SimTime base_rtt(int flow) const {
    return 2 * (2 * access_delay_of(flow) + cfg.bottleneck_delay);
  }

  std::int32_t data_packet_bytes() const {
    return cfg.segment_bytes + cfg.header_bytes;
  }
};

/// Validates and freezes a dumbbell. Throws std::invalid_argument naming the
/// offending parameter.
Topology build_dumbbell(const DumbbellConfig& cfg);

/// n senders/receivers on 1 Gbps / 1 ms access links around a 1 Gbps / 4 ms
/// bottleneck with the given drop-tail buffer and PER; per-flow access
/// delays optional.
Topology build_dumbbell(int n_flows, int buffer_packets, double per,
                        const std::vector<SimTime>& access_delays = {});

}  // namespace agilesim::net
