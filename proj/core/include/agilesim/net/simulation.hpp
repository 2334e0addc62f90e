#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "agilesim/cca/controller.hpp"
#include "agilesim/net/endpoint.hpp"
#include "agilesim/net/event.hpp"
#include "agilesim/net/link.hpp"
#include "agilesim/net/queue.hpp"
#include "agilesim/net/rng.hpp"
#include "agilesim/net/topology.hpp"

namespace agilesim::net {

/// One bulk-transfer flow: active window plus the controller driving it.
struct FlowSpec {
  SimTime start = 0;
  SimTime stop = 0;
  std::string cca = "agile-sd";
  cca::AgileParams agile{};
  cca::CubicParams cubic{};
};

struct FlowCounters {
  std::int64_t data_sent = 0;       // transmissions started, incl. retransmits
  std::int64_t data_delivered = 0;  // receiver arrivals, incl. duplicates
  std::int64_t data_delivered_measured = 0;  // after the warm-up trim
  std::int64_t dropped_queue = 0;
  std::int64_t dropped_per = 0;
  std::int64_t in_flight_at_end = 0;  // audited from pending events + queue
  std::int64_t goodput_segments = 0;  // first-copy deliveries
  std::int64_t goodput_segments_measured = 0;  // after the warm-up trim
  std::int64_t retransmits = 0;
  std::int64_t timeouts = 0;
  std::int64_t loss_episodes = 0;  // triple-dup detections
  SimTime min_rtt = std::numeric_limits<SimTime>::max();
  double final_cwnd = 0.0;
};

struct TraceRecord {
  enum class Kind : std::uint8_t {
    Start,
    Stop,
    Ack,
    FastRetransmit,
    Timeout,
    QueueDrop,
    PerDrop,
    Deliver,
  };

  SimTime at = 0;
  std::int32_t flow = -1;
  Kind kind = Kind::Ack;
  double cwnd = 0.0;
  double ssthresh = 0.0;
  double lambda = 1.0;
  cca::Phase phase = cca::Phase::SlowStart;
  int queue_len = 0;  // bottleneck occupancy when the record was cut
};

std::string_view to_string(TraceRecord::Kind k);

using TraceSink = std::function<void(const TraceRecord&)>;

struct RunOptions {
  std::uint64_t seed = 1;
  SimTime duration = 100 * kNsPerSec;
  SimTime warmup = 0;  // metrics trim; 0 averages the full run
  TraceSink trace;     // optional; called for every traceable event
  bool collect_cwnd_series = false;
  SimTime series_interval = kNsPerMs;  // min sample spacing (0 = every event)
};

struct CwndSample {
  SimTime at = 0;
  double cwnd = 0.0;
};

struct RunResult {
  std::vector<FlowCounters> flows;
  std::vector<std::vector<CwndSample>> cwnd_series;  // per flow, if collected
  bool ended_early = false;  // event queue drained before the duration
  SimTime end_time = 0;
};

/// Deterministic single-threaded event loop over one dumbbell. Independent
/// instances share nothing and may run on separate threads.
class Simulation {
 public:
  Simulation(Topology topology, std::vector<FlowSpec> flows, RunOptions opt);

  RunResult run();

 private:
  struct Flow {
    std::int32_t id = 0;
    FlowSpec spec;
    std::unique_ptr<cca::CongestionController> controller;
    SenderEndpoint sender;
    ReceiverEndpoint receiver;
    Link snd_access;      // sender -> bottleneck router
    Link rcv_access;      // far router -> receiver
    Link rcv_access_rev;  // receiver -> far router
    Link snd_access_rev;  // bottleneck router -> sender
    SimTime last_series_sample = std::numeric_limits<SimTime>::min();
  };

  void handle(const Event& ev);
  void on_flow_start(Flow& f, SimTime now);
  void on_flow_stop(Flow& f, SimTime now);
  void try_send(Flow& f, SimTime now);
  void on_sender_tx_complete(Flow& f, const Packet& pkt, SimTime now);
  void on_bottleneck_ingress(const Packet& pkt, SimTime now);
  void on_bottleneck_tx_complete(const Packet& pkt, SimTime now);
  void on_receiver_arrival(Flow& f, const Packet& pkt, SimTime now);
  void on_reverse_bottleneck(const Packet& ack, SimTime now);
  void on_sender_ack(Flow& f, const Packet& ack, SimTime now);
  void on_rto_expiry(Flow& f, SimTime now);

  void queue_retransmit(Flow& f, std::int64_t seq);
  void arm_rto(Flow& f, SimTime now);
  void controller_event(Flow& f, cca::ControllerEvent::Kind kind,
                        int acked_segments, SimTime now,
                        TraceRecord::Kind trace_kind);
  void trace(Flow& f, SimTime now, TraceRecord::Kind kind);
  void audit_in_flight();

  Flow& flow(std::int32_t id) { return flows_[static_cast<std::size_t>(id)]; }

  Topology topo_;
  RunOptions opt_;
  Rng rng_;
  EventQueue events_;
  Link bottleneck_;      // forward, paired with the drop-tail queue
  Link bottleneck_rev_;  // ACK path, serialized but unbuffered
  DropTailQueue queue_;
  bool bottleneck_busy_ = false;
  std::vector<Flow> flows_;
  std::vector<FlowCounters> counters_;
  std::vector<std::vector<CwndSample>> series_;
};

}  // namespace agilesim::net
