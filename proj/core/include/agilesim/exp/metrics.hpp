#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "agilesim/net/simulation.hpp"

namespace agilesim::exp {

/// Jain's index: (sum x)^2 / (n * sum x^2). 1 means perfectly equal shares,
/// 1/n means one flow holds everything. Throws std::invalid_argument for an
/// empty, negative or all-zero input.
double jain_fairness(std::span<const double> throughputs);

/// delivered_bytes * 8 / active_time. Throws on non-positive active time.
double average_throughput(double delivered_bytes, double active_time_s);

/// (queue drops + corruption drops) / sent. Throws when nothing was sent.
double loss_ratio(std::int64_t dropped, std::int64_t sent);

struct MetricsReport {
  std::vector<double> per_flow_throughput_bps;
  std::vector<double> per_flow_loss_ratio;
  double aggregate_throughput_bps = 0.0;
  double utilization = 0.0;  // aggregate / bottleneck bandwidth
  double loss_ratio = 0.0;   // all drops / all sends
  /// Fairness over per-flow throughputs; empty when nothing was delivered.
  std::optional<double> jfi;
  net::RunResult run;  // counters and traces behind the numbers
};

}  // namespace agilesim::exp
