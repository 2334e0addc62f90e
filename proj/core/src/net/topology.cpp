#include "agilesim/net/topology.hpp"

#include <stdexcept>
#include <string>

namespace agilesim::net {

Topology build_dumbbell(const DumbbellConfig& cfg) {
  if (cfg.n_flows < 1)
    throw std::invalid_argument("n_flows: must be >= 1");
  if (cfg.buffer_packets < 1)
    throw std::invalid_argument("buffer: must be >= 1 packet");
  if (!(cfg.per >= 0.0 && cfg.per <= 1.0))
    throw std::invalid_argument("per: must be within [0,1]");
  if (cfg.access_bandwidth_bps <= 0.0)
    throw std::invalid_argument("bandwidth: must be > 0");
  if (cfg.bottleneck_bandwidth_bps <= 0.0)
    throw std::invalid_argument("bottleneck_bandwidth: must be > 0");
  if (cfg.access_delay < 0 || cfg.bottleneck_delay < 0)
    throw std::invalid_argument("delay: must be >= 0");
  if (cfg.segment_bytes < 1)
    throw std::invalid_argument("segment_bytes: must be >= 1");
  if (!cfg.access_delays.empty() &&
      cfg.access_delays.size() != static_cast<std::size_t>(cfg.n_flows))
    throw std::invalid_argument(
        "access_delays: need one entry per flow, got " +
        std::to_string(cfg.access_delays.size()) + " for " +
        std::to_string(cfg.n_flows) + " flows");
  for (SimTime d : cfg.access_delays)
    if (d < 0) throw std::invalid_argument("access_delays: must be >= 0");
  return Topology{cfg};
}

Topology build_dumbbell(int n_flows, int buffer_packets, double per,
                        const std::vector<SimTime>& access_delays) {
  DumbbellConfig cfg;
  cfg.n_flows = n_flows;
  cfg.buffer_packets = buffer_packets;
  cfg.per = per;
  cfg.access_delays = access_delays;
  return build_dumbbell(cfg);
}

}  // namespace agilesim::net
