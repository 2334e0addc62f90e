#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "agilesim/net/endpoint.hpp"
#include "agilesim/net/event.hpp"
#include "agilesim/net/link.hpp"
#include "agilesim/net/queue.hpp"
#include "agilesim/net/simulation.hpp"
#include "agilesim/net/topology.hpp"

using namespace agilesim;
using namespace agilesim::net;

namespace {

std::vector<FlowSpec> bulk_flows(int n, SimTime stop, const char* cca = "newreno") {
  std::vector<FlowSpec> flows(static_cast<std::size_t>(n));
  for (auto& f : flows) {
    f.start = 0;
    f.stop = stop;
    f.cca = cca;
  }
  return flows;
}

void check_conservation(const RunResult& res) {
  for (const auto& c : res.flows) {
    CHECK(c.data_sent == c.data_delivered + c.dropped_queue + c.dropped_per +
                             c.in_flight_at_end);
  }
}

}  // namespace

TEST_CASE("build_dumbbell: validation and derived base RTT") {
  CHECK_THROWS_AS(build_dumbbell(0, 500, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(build_dumbbell(1, 0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(build_dumbbell(1, 5, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(build_dumbbell(2, 5, 0.0, {kNsPerMs}), std::invalid_argument);

  // Fig-5 style single pair, uncongested.
  Topology single = build_dumbbell(1, 500, 0.0, {kNsPerMs});
  CHECK(single.cfg.n_flows == 1);
  CHECK(single.base_rtt(0) == 12 * kNsPerMs);  // 2 * (1 + 4 + 1) ms
  CHECK(single.data_packet_bytes() == 1040);

  // Congested five-pair variant.
  Topology multi = build_dumbbell(5, 5, 1e-4);
  CHECK(multi.cfg.buffer_packets == 5);
  CHECK(multi.base_rtt(4) == 12 * kNsPerMs);

  Topology rtt = build_dumbbell(
      2, 100, 0.0, {kNsPerMs, 8 * kNsPerMs});
  CHECK(rtt.base_rtt(0) == 12 * kNsPerMs);
  CHECK(rtt.base_rtt(1) == (2 * (8 + 4 + 8)) * kNsPerMs);
}

TEST_CASE("maybe_corrupt: degenerate rates and seeded binomial count") {
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) CHECK_FALSE(maybe_corrupt(0.0, rng));
  for (int i = 0; i < 1000; ++i) CHECK(maybe_corrupt(1.0, rng));

  // 1e6 packets at per = 1e-4: mean 100, sigma ~10. The default seed must
  // land within +-3 sigma.
  Rng seeded(1);
  int drops = 0;
  for (int i = 0; i < 1'000'000; ++i)
    if (maybe_corrupt(1e-4, seeded)) ++drops;
  CHECK(drops >= 70);
  CHECK(drops <= 130);
}

TEST_CASE("drop-tail queue: tail drop and FIFO across flows") {
  DropTailQueue q(5);
  Packet p;
  for (int i = 0; i < 4; ++i) {
    p.flow = i % 2;
    p.seq = i;
    CHECK(q.try_push(p));
  }
  p.seq = 4;
  CHECK(q.try_push(p));  // fills to capacity
  p.seq = 99;
  CHECK_FALSE(q.try_push(p));  // full -> dropped, never reordered
  CHECK(q.size() == 5);

  std::int64_t expected = 0;
  while (!q.empty()) CHECK(q.pop().seq == expected++);
}

TEST_CASE("event queue: time order with insertion-order ties") {
  EventQueue q;
  Event e;
  e.at = 50;
  e.flow = 0;
  q.push(e);
  e.at = 10;
  e.flow = 1;
  q.push(e);
  e.at = 10;
  e.flow = 2;
  q.push(e);
  e.at = 10;
  e.flow = 3;
  q.push(e);
  CHECK(q.pop().flow == 1);
  CHECK(q.pop().flow == 2);
  CHECK(q.pop().flow == 3);
  CHECK(q.pop().flow == 0);
  CHECK(q.empty());
}

TEST_CASE("rto estimator: floor, smoothing, exponential backoff") {
  RtoEstimator rto;
  CHECK(rto.rto() == kNsPerSec);  // pre-sample default

  rto.sample(12 * kNsPerMs);
  // srtt + 4*rttvar = 12 + 24 = 36 ms, clamped up to the 200 ms floor.
  CHECK(rto.rto() == RtoEstimator::kMinRto);

  rto.back_off();
  CHECK(rto.rto() == 2 * RtoEstimator::kMinRto);  // 0.2 s -> 0.4 s
  rto.back_off();
  CHECK(rto.rto() == 4 * RtoEstimator::kMinRto);
  rto.sample(12 * kNsPerMs);  // fresh sample clears the backoff
  CHECK(rto.rto() == RtoEstimator::kMinRto);

  for (int i = 0; i < 40; ++i) rto.back_off();
  CHECK(rto.rto() == RtoEstimator::kMaxRto);
}

TEST_CASE("receiver endpoint: cumulative ACKs and out-of-order reassembly") {
  ReceiverEndpoint r;
  bool first = false;
  CHECK(r.on_data(0, first) == 1);
  CHECK(first);
  // Hole at 1: later segments buffer, ACK restates 1.
  CHECK(r.on_data(2, first) == 1);
  CHECK(first);
  CHECK(r.on_data(3, first) == 1);
  CHECK(r.buffered() == 2);
  // Duplicate of a buffered segment is not a first copy.
  CHECK(r.on_data(2, first) == 1);
  CHECK_FALSE(first);
  // Filling the hole drains the run.
  CHECK(r.on_data(1, first) == 4);
  CHECK(first);
  CHECK(r.buffered() == 0);
  // Stale duplicate below the cumulative point.
  CHECK(r.on_data(0, first) == 4);
  CHECK_FALSE(first);
}

TEST_CASE("single flow, equal rates: full pipe, no drops, 12 ms floor") {
  DumbbellConfig cfg;
  cfg.n_flows = 1;
  cfg.buffer_packets = 500;
  cfg.access_bandwidth_bps = 100e6;  // scaled rates, Table-1 delays
  cfg.bottleneck_bandwidth_bps = 100e6;

  RunOptions opt;
  opt.duration = 3 * kNsPerSec;
  opt.seed = 7;
  Simulation sim(build_dumbbell(cfg), bulk_flows(1, opt.duration, "agile-sd"), opt);
  const RunResult res = sim.run();
  const auto& c = res.flows.at(0);

  CHECK(c.dropped_queue == 0);
  CHECK(c.dropped_per == 0);
  CHECK(c.retransmits == 0);
  check_conservation(res);

  // Payload ceiling is 1000/1040 of the link rate.
  const double goodput_bps =
      static_cast<double>(c.goodput_segments) * 1000.0 * 8.0 /
      to_seconds(opt.duration);
  CHECK(goodput_bps / 100e6 > 0.85);
  CHECK(goodput_bps / 100e6 < 1000.0 / 1040.0 + 1e-9);

  // Propagation floor: 2*(1+4+1) ms plus serialization.
  CHECK(c.min_rtt >= 12 * kNsPerMs);
  CHECK(c.min_rtt < 13 * kNsPerMs);
}

TEST_CASE("identical config and seed reproduce identical runs") {
  DumbbellConfig cfg;
  cfg.n_flows = 3;
  cfg.buffer_packets = 10;
  cfg.per = 1e-5;
  cfg.access_bandwidth_bps = 100e6;
  cfg.bottleneck_bandwidth_bps = 100e6;

  RunOptions opt;
  opt.duration = 2 * kNsPerSec;
  opt.seed = 42;

  std::vector<std::vector<TraceRecord>> traces(2);
  std::vector<RunResult> results;
  for (int round = 0; round < 2; ++round) {
    RunOptions o = opt;
    auto& sink = traces[static_cast<std::size_t>(round)];
    o.trace = [&sink](const TraceRecord& r) { sink.push_back(r); };
    Simulation sim(build_dumbbell(cfg), bulk_flows(3, o.duration, "agile-sd"), o);
    results.push_back(sim.run());
  }

  REQUIRE(traces[0].size() == traces[1].size());
  for (std::size_t i = 0; i < traces[0].size(); ++i) {
    CHECK(traces[0][i].at == traces[1][i].at);
    CHECK(traces[0][i].flow == traces[1][i].flow);
    CHECK(traces[0][i].kind == traces[1][i].kind);
    CHECK(traces[0][i].cwnd == traces[1][i].cwnd);
  }
  for (int f = 0; f < 3; ++f) {
    const auto& a = results[0].flows.at(static_cast<std::size_t>(f));
    const auto& b = results[1].flows.at(static_cast<std::size_t>(f));
    CHECK(a.data_sent == b.data_sent);
    CHECK(a.goodput_segments == b.goodput_segments);
    CHECK(a.dropped_queue == b.dropped_queue);
    CHECK(a.dropped_per == b.dropped_per);
    CHECK(a.final_cwnd == b.final_cwnd);
  }
}

TEST_CASE("congested bottleneck: drops, recovery, conservation, capacity") {
  DumbbellConfig cfg;
  cfg.n_flows = 3;
  cfg.buffer_packets = 10;
  cfg.per = 1e-5;
  cfg.access_bandwidth_bps = 100e6;
  cfg.bottleneck_bandwidth_bps = 100e6;

  RunOptions opt;
  opt.duration = 4 * kNsPerSec;
  opt.seed = 3;
  Simulation sim(build_dumbbell(cfg), bulk_flows(3, opt.duration, "agile-sd"), opt);
  const RunResult res = sim.run();

  check_conservation(res);
  std::int64_t queue_drops = 0;
  std::int64_t goodput = 0;
  for (const auto& c : res.flows) {
    queue_drops += c.dropped_queue;
    goodput += c.goodput_segments;
    CHECK(c.loss_episodes >= 1);
    CHECK(c.retransmits >= c.loss_episodes);
  }
  CHECK(queue_drops > 0);
  const double aggregate_bps =
      static_cast<double>(goodput) * 1000.0 * 8.0 / to_seconds(opt.duration);
  CHECK(aggregate_bps <= 100e6);
}

TEST_CASE("newreno sawtooth against the classical AIMD oracle") {
  // Narrow bottleneck so the buffer, not the access link, caps the window:
  // peak cwnd ~ BDP + buffer, valley ~ peak / 2 after each tail drop.
  DumbbellConfig cfg;
  cfg.n_flows = 1;
  cfg.buffer_packets = 25;
  cfg.access_bandwidth_bps = 100e6;
  cfg.bottleneck_bandwidth_bps = 10e6;

  RunOptions opt;
  opt.duration = 60 * kNsPerSec;
  opt.seed = 5;
  opt.collect_cwnd_series = true;
  opt.series_interval = 0;  // every controller event
  Simulation sim(build_dumbbell(cfg), bulk_flows(1, opt.duration), opt);
  const RunResult res = sim.run();
  const auto& c = res.flows.at(0);
  const auto& series = res.cwnd_series.at(0);

  REQUIRE(c.loss_episodes >= 3);
  check_conservation(res);

  // Oracle bounds. BDP = 10 Mbps * 12 ms at 1040 B/packet ~ 14.4 packets.
  const double bdp = 10e6 * 0.012 / (1040.0 * 8.0);
  const double peak_bound = bdp + cfg.buffer_packets;

  // Steady-state peaks/valleys: local extrema after the first loss.
  std::vector<double> peaks, valleys;
  bool climbing = true;
  double extreme = 0.0;
  bool past_first_loss = false;
  for (std::size_t i = 1; i < series.size(); ++i) {
    const double prev = series[i - 1].cwnd;
    const double cur = series[i].cwnd;
    if (climbing && cur < prev) {
      if (past_first_loss) peaks.push_back(prev);
      past_first_loss = true;
      climbing = false;
      extreme = cur;
    } else if (!climbing && cur > prev) {
      if (past_first_loss) valleys.push_back(prev);
      climbing = true;
      extreme = cur;
    }
    (void)extreme;
  }
  REQUIRE(peaks.size() >= 3);
  REQUIRE(valleys.size() >= 3);

  for (std::size_t i = 1; i < peaks.size(); ++i) {  // skip slow-start overshoot
    CHECK(peaks[i] > bdp);
    CHECK(peaks[i] < peak_bound * 1.35);
  }
  for (std::size_t i = 1; i < std::min(peaks.size(), valleys.size()); ++i) {
    const double ratio = valleys[i] / peaks[i];
    CHECK(ratio > 0.40);
    CHECK(ratio < 0.62);
  }

  // The pipe stays near full: goodput within 25% of the bottleneck payload rate.
  const double goodput_bps = static_cast<double>(c.goodput_segments) * 8000.0 /
                             to_seconds(opt.duration);
  CHECK(goodput_bps > 0.75 * 10e6);
}

TEST_CASE("per = 1 kills every data packet; timeouts back off") {
  DumbbellConfig cfg;
  cfg.n_flows = 1;
  cfg.buffer_packets = 50;
  cfg.per = 1.0;
  cfg.access_bandwidth_bps = 100e6;
  cfg.bottleneck_bandwidth_bps = 100e6;

  RunOptions opt;
  opt.duration = 30 * kNsPerSec;
  opt.seed = 9;
  std::vector<SimTime> timeout_at;
  opt.trace = [&timeout_at](const TraceRecord& r) {
    if (r.kind == TraceRecord::Kind::Timeout) timeout_at.push_back(r.at);
  };
  Simulation sim(build_dumbbell(cfg), bulk_flows(1, opt.duration, "agile-sd"), opt);
  const RunResult res = sim.run();
  const auto& c = res.flows.at(0);

  CHECK(c.data_delivered == 0);
  CHECK(c.dropped_per > 0);
  CHECK(c.timeouts >= 3);
  check_conservation(res);

  // Successive expiries, unseeded by samples, double: 1s, 2s, 4s, ...
  REQUIRE(timeout_at.size() >= 3);
  const double g1 = to_seconds(timeout_at[1] - timeout_at[0]);
  const double g2 = to_seconds(timeout_at[2] - timeout_at[1]);
  CHECK(g2 / g1 == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("per-flow deliveries respect bottleneck serialization spacing") {
  DumbbellConfig cfg;
  cfg.n_flows = 2;
  cfg.buffer_packets = 20;
  cfg.access_bandwidth_bps = 100e6;
  cfg.bottleneck_bandwidth_bps = 10e6;

  RunOptions opt;
  opt.duration = 3 * kNsPerSec;
  opt.seed = 11;
  std::map<int, std::vector<SimTime>> deliveries;
  opt.trace = [&deliveries](const TraceRecord& r) {
    if (r.kind == TraceRecord::Kind::Deliver) deliveries[r.flow].push_back(r.at);
  };
  Simulation sim(build_dumbbell(cfg), bulk_flows(2, opt.duration), opt);
  sim.run();

  const SimTime min_spacing = Link(LinkSpec{10e6, 0}).tx_time(1040);
  for (const auto& [flow, times] : deliveries) {
    REQUIRE(times.size() > 10);
    for (std::size_t i = 1; i < times.size(); ++i)
      CHECK(times[i] - times[i - 1] >= min_spacing);
  }
}

TEST_CASE("empty schedule sends nothing and ends early") {
  DumbbellConfig cfg;
  cfg.n_flows = 1;
  RunOptions opt;
  opt.duration = kNsPerSec;
  Simulation sim(build_dumbbell(cfg), {}, opt);
  const RunResult res = sim.run();
  CHECK(res.flows.empty());
  CHECK(res.ended_early);
}

TEST_CASE("queue length never exceeds capacity in traces") {
  DumbbellConfig cfg;
  cfg.n_flows = 4;
  cfg.buffer_packets = 7;
  cfg.access_bandwidth_bps = 100e6;
  cfg.bottleneck_bandwidth_bps = 50e6;

  RunOptions opt;
  opt.duration = 2 * kNsPerSec;
  opt.seed = 13;
  int max_qlen = 0;
  opt.trace = [&max_qlen](const TraceRecord& r) {
    max_qlen = std::max(max_qlen, r.queue_len);
  };
  Simulation sim(build_dumbbell(cfg), bulk_flows(4, opt.duration, "cubic"), opt);
  const RunResult res = sim.run();
  check_conservation(res);
  CHECK(max_qlen <= 7);
  std::int64_t drops = 0;
  for (const auto& c : res.flows) drops += c.dropped_queue;
  CHECK(drops > 0);
}
