#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "agilesim/cca/params.hpp"
#include "agilesim/exp/metrics.hpp"
#include "agilesim/net/simulation.hpp"

namespace agilesim::exp {

enum class ScenarioKind : std::uint8_t {
  SingleFlow,        // one pair, uncongested path
  SequentialMulti,   // staggered establishment and termination
  SynchronousMulti,  // all flows share the full run
  InterFairness,     // one flow per competing algorithm
  RttFairness,       // synchronous flows with distinct access delays
};

std::string_view to_string(ScenarioKind k);
ScenarioKind parse_scenario(std::string_view name);

struct ScenarioSpec {
  ScenarioKind kind = ScenarioKind::SingleFlow;
  int n_flows = 1;
  /// One name applies to every flow; InterFairness lists the competing
  /// algorithms, one flow each.
  std::vector<std::string> cca_per_flow = {"agile-sd"};
  int buffer_packets = 500;
  double per = 0.0;
  double duration_s = 100.0;
  double stagger_s = 0.0;  // SequentialMulti; 0 picks duration / (2n)
  /// RttFairness per-flow node-to-router delays; empty picks 1,2,4,... ms.
  std::vector<double> access_delays_ms;
  double bandwidth_bps = 1e9;  // every link, Table-style
  double warmup_s = 0.0;       // throughput trim; 0 averages the full run
  bool raw_throughput = false;  // count duplicate deliveries, not just goodput
  std::uint64_t seed = 1;
  cca::AgileParams agile{};
  cca::CubicParams cubic{};
};

struct FlowWindow {
  double start_s = 0.0;
  double stop_s = 0.0;
};

/// Per-flow active windows for a scenario. SequentialMulti staggers both
/// ends: flow i runs over [i*s, duration - (n-1-i)*s], a staircase of
/// equal-length windows; every other kind shares [0, duration].
std::vector<FlowWindow> flow_windows(const ScenarioSpec& spec);

/// Effective per-flow controller assignment after scenario rules.
std::vector<std::string> flow_ccas(const ScenarioSpec& spec);

/// Observation hooks threaded through to the simulator.
struct ScenarioHooks {
  net::TraceSink trace;
  bool collect_cwnd_series = false;
  net::SimTime series_interval = net::kNsPerMs;
};

/// Builds the dumbbell, installs controllers, runs the simulator and folds
/// counters into throughput/loss/fairness numbers. Per-flow throughput is
/// normalized by each flow's own scheduled lifetime so staggered flows
/// compare directly.
MetricsReport run_scenario(const ScenarioSpec& spec,
                           const ScenarioHooks& hooks = {});

}  // namespace agilesim::exp
