#include "agilesim/net/link.hpp"

#include <cmath>

namespace agilesim::net {

SimTime Link::tx_time(std::int32_t bytes) const {
  return static_cast<SimTime>(
      std::llround(static_cast<double>(bytes) * 8.0 * 1e9 / spec_.bandwidth_bps));
}

bool maybe_corrupt(double per, Rng& rng) {
  if (per <= 0.0) return false;
  if (per >= 1.0) return true;
  return rng.unit() < per;
}

}  // namespace agilesim::net
