#pragma once

#include <cmath>
#include <cstdint>

namespace agilesim::net {

/// Simulation clock in integer nanoseconds. Integer time keeps event order
/// exact and runs bit-identical across platforms.
using SimTime = std::int64_t;

inline constexpr SimTime kNsPerSec = 1'000'000'000;
inline constexpr SimTime kNsPerMs = 1'000'000;

inline SimTime from_seconds(double s) {
  return static_cast<SimTime>(std::llround(s * 1e9));
}

inline SimTime from_millis(double ms) {
  return static_cast<SimTime>(std::llround(ms * 1e6));
}

inline double to_seconds(SimTime t) { return static_cast<double>(t) / 1e9; }

}  // namespace agilesim::net
