#include "agilesim/exp/scenario.hpp"

#include <algorithm>
#include <stdexcept>

#include "agilesim/net/topology.hpp"

namespace agilesim::exp {

namespace {

constexpr double kSegmentPayloadBytes = 1000.0;

}  // namespace

std::string_view to_string(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::SingleFlow: return "single";
    case ScenarioKind::SequentialMulti: return "sequential";
    case ScenarioKind::SynchronousMulti: return "synchronous";
    case ScenarioKind::InterFairness: return "inter-fairness";
    case ScenarioKind::RttFairness: return "rtt-fairness";
  }
  return "unknown";
}

ScenarioKind parse_scenario(std::string_view name) {
  if (name == "single") return ScenarioKind::SingleFlow;
  if (name == "sequential") return ScenarioKind::SequentialMulti;
  if (name == "synchronous") return ScenarioKind::SynchronousMulti;
  if (name == "inter-fairness") return ScenarioKind::InterFairness;
  if (name == "rtt-fairness") return ScenarioKind::RttFairness;
  throw std::invalid_argument(
      "scenario: unknown name '" + std::string(name) +
      "' (expected single, sequential, synchronous, inter-fairness or "
      "rtt-fairness)");
}

static int effective_flow_count(const ScenarioSpec& spec) {
  if (spec.kind == ScenarioKind::SingleFlow) {
    if (spec.n_flows != 1)
      throw std::invalid_argument("n_flows: single-flow scenario needs 1 flow");
    return 1;
  }
  if (spec.kind == ScenarioKind::InterFairness)
    return static_cast<int>(spec.cca_per_flow.size());
  return spec.n_flows;
}

std::vector<FlowWindow> flow_windows(const ScenarioSpec& spec) {
  const int n = effective_flow_count(spec);
  if (n < 1) throw std::invalid_argument("n_flows: must be >= 1");
  if (!(spec.duration_s > 0.0))
    throw std::invalid_argument("duration: must be > 0");

  std::vector<FlowWindow> windows(static_cast<std::size_t>(n));
  if (spec.kind == ScenarioKind::SequentialMulti) {
    const double s =
        spec.stagger_s > 0.0 ? spec.stagger_s : spec.duration_s / (2.0 * n);
    if ((n - 1) * s >= spec.duration_s)
      throw std::invalid_argument(
          "stagger: (n_flows - 1) * stagger must stay below the duration");
    for (int i = 0; i < n; ++i) {
      windows[static_cast<std::size_t>(i)] = {
          i * s, spec.duration_s - (n - 1 - i) * s};
    }
  } else {
    for (auto& w : windows) w = {0.0, spec.duration_s};
  }
  return windows;
}

std::vector<std::string> flow_ccas(const ScenarioSpec& spec) {
  const int n = effective_flow_count(spec);
  if (spec.cca_per_flow.empty())
    throw std::invalid_argument("cca: need at least one controller name");
  for (const auto& name : spec.cca_per_flow)
    if (!cca::is_known_controller(name))
      throw std::invalid_argument("cca: unknown controller '" + name + "'");

  if (spec.kind == ScenarioKind::InterFairness) {
    if (spec.cca_per_flow.size() < 2)
      throw std::invalid_argument(
          "cca: inter-fairness needs at least two controller names");
    return spec.cca_per_flow;
  }
  if (spec.cca_per_flow.size() == 1)
    return std::vector<std::string>(static_cast<std::size_t>(n),
                                    spec.cca_per_flow.front());
  if (spec.cca_per_flow.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument(
        "cca: give one controller or one per flow");
  return spec.cca_per_flow;
}

static std::vector<net::SimTime> access_delays(const ScenarioSpec& spec, int n) {
  if (spec.kind != ScenarioKind::RttFairness) {
    if (!spec.access_delays_ms.empty())
      throw std::invalid_argument(
          "access_delays: only the rtt-fairness scenario varies them");
    return {};
  }
  std::vector<net::SimTime> delays;
  if (spec.access_delays_ms.empty()) {
    // 1, 2, 4, ... ms: doubling spreads the RTTs without dwarfing the run.
    double ms = 1.0;
    for (int i = 0; i < n; ++i, ms *= 2.0) delays.push_back(net::from_millis(ms));
  } else {
    if (spec.access_delays_ms.size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("access_delays: need one delay per flow");
    for (double ms : spec.access_delays_ms) delays.push_back(net::from_millis(ms));
  }
  return delays;
}

MetricsReport run_scenario(const ScenarioSpec& spec, const ScenarioHooks& hooks) {
  const auto windows = flow_windows(spec);
  const auto ccas = flow_ccas(spec);
  const int n = static_cast<int>(windows.size());
  if (!(spec.warmup_s >= 0.0 && spec.warmup_s < spec.duration_s))
    throw std::invalid_argument("warmup: must sit inside the run duration");

  net::DumbbellConfig cfg;
  cfg.n_flows = n;
  cfg.buffer_packets = spec.buffer_packets;
  cfg.per = spec.per;
  cfg.access_bandwidth_bps = spec.bandwidth_bps;
  cfg.bottleneck_bandwidth_bps = spec.bandwidth_bps;
  cfg.access_delays = access_delays(spec, n);
  const net::Topology topo = net::build_dumbbell(cfg);

  std::vector<net::FlowSpec> flows(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto& f = flows[static_cast<std::size_t>(i)];
    f.start = net::from_seconds(windows[static_cast<std::size_t>(i)].start_s);
    f.stop = net::from_seconds(windows[static_cast<std::size_t>(i)].stop_s);
    f.cca = ccas[static_cast<std::size_t>(i)];
    f.agile = spec.agile;
    f.cubic = spec.cubic;
  }

  net::RunOptions opt;
  opt.seed = spec.seed;
  opt.duration = net::from_seconds(spec.duration_s);
  opt.warmup = net::from_seconds(spec.warmup_s);
  opt.trace = hooks.trace;
  opt.collect_cwnd_series = hooks.collect_cwnd_series;
  opt.series_interval = hooks.series_interval;

  net::Simulation sim(topo, flows, opt);
  MetricsReport report;
  report.run = sim.run();

  std::int64_t sent = 0;
  std::int64_t dropped = 0;
  double aggregate_bytes = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto& c = report.run.flows[static_cast<std::size_t>(i)];
    const auto& w = windows[static_cast<std::size_t>(i)];
    const double active_s =
        (w.stop_s - w.start_s) - std::max(0.0, spec.warmup_s - w.start_s);
    const std::int64_t segments = spec.raw_throughput
                                      ? c.data_delivered_measured
                                      : c.goodput_segments_measured;
    const double bytes = static_cast<double>(segments) * kSegmentPayloadBytes;
    report.per_flow_throughput_bps.push_back(
        average_throughput(bytes, active_s));
    report.per_flow_loss_ratio.push_back(
        c.data_sent > 0
            ? loss_ratio(c.dropped_queue + c.dropped_per, c.data_sent)
            : 0.0);
    aggregate_bytes += bytes;
    sent += c.data_sent;
    dropped += c.dropped_queue + c.dropped_per;
  }
  report.aggregate_throughput_bps =
      average_throughput(aggregate_bytes, spec.duration_s - spec.warmup_s);
  report.utilization = report.aggregate_throughput_bps / spec.bandwidth_bps;
  report.loss_ratio = sent > 0 ? loss_ratio(dropped, sent) : 0.0;
  if (aggregate_bytes > 0.0)
    report.jfi = jain_fairness(report.per_flow_throughput_bps);
  return report;
}

}  // namespace agilesim::exp
