#include "agilesim/net/simulation.hpp"

#include <algorithm>
#include <stdexcept>

namespace agilesim::net {

std::string_view to_string(TraceRecord::Kind k) {
  switch (k) {
    case TraceRecord::Kind::Start: return "start";
    case TraceRecord::Kind::Stop: return "stop";
    case TraceRecord::Kind::Ack: return "ack";
    case TraceRecord::Kind::FastRetransmit: return "fast_retransmit";
    case TraceRecord::Kind::Timeout: return "timeout";
    case TraceRecord::Kind::QueueDrop: return "queue_drop";
    case TraceRecord::Kind::PerDrop: return "per_drop";
    case TraceRecord::Kind::Deliver: return "deliver";
  }
  return "unknown";
}

Simulation::Simulation(Topology topology, std::vector<FlowSpec> flows,
                       RunOptions opt)
    : topo_(topology),
      opt_(std::move(opt)),
      rng_(opt_.seed),
      bottleneck_(LinkSpec{topo_.cfg.bottleneck_bandwidth_bps,
                           topo_.cfg.bottleneck_delay}),
      bottleneck_rev_(LinkSpec{topo_.cfg.bottleneck_bandwidth_bps,
                               topo_.cfg.bottleneck_delay}),
      queue_(topo_.cfg.buffer_packets) {
  if (flows.size() > static_cast<std::size_t>(topo_.cfg.n_flows))
    throw std::invalid_argument(
        "flows: schedule has more flows than sender/receiver pairs");
  flows_.reserve(flows.size());
  std::int32_t id = 0;
  for (auto& spec : flows) {
    if (spec.stop < spec.start || spec.start < 0)
      throw std::invalid_argument("flows: need 0 <= start <= stop");
    Flow f;
    f.id = id;
    f.spec = spec;
    f.controller = cca::make_controller(spec.cca, spec.agile, spec.cubic);
    const LinkSpec access{topo_.cfg.access_bandwidth_bps,
                          topo_.access_delay_of(id)};
    f.snd_access = Link(access);
    f.rcv_access = Link(access);
    f.rcv_access_rev = Link(access);
    f.snd_access_rev = Link(access);
    flows_.push_back(std::move(f));
    ++id;
  }
  counters_.resize(flows_.size());
  series_.resize(flows_.size());
}

RunResult Simulation::run() {
  for (const Flow& f : flows_) {
    events_.push({.at = f.spec.start, .kind = EventKind::FlowStart, .flow = f.id});
    events_.push({.at = f.spec.stop, .kind = EventKind::FlowStop, .flow = f.id});
  }
  SimTime last = 0;
  while (!events_.empty() && events_.top().at <= opt_.duration) {
    const Event ev = events_.pop();
    last = ev.at;
    handle(ev);
  }

  RunResult res;
  res.ended_early = events_.empty();
  res.end_time = res.ended_early ? last : opt_.duration;
  audit_in_flight();
  for (const Flow& f : flows_)
    counters_[static_cast<std::size_t>(f.id)].final_cwnd = f.controller->cwnd();
  res.flows = counters_;
  res.cwnd_series = std::move(series_);
  return res;
}

void Simulation::handle(const Event& ev) {
  Flow* f = ev.flow >= 0 ? &flow(ev.flow) : nullptr;
  switch (ev.kind) {
    case EventKind::FlowStart:
      on_flow_start(*f, ev.at);
      break;
    case EventKind::FlowStop:
      on_flow_stop(*f, ev.at);
      break;
    case EventKind::RtoExpiry:
      on_rto_expiry(*f, ev.at);
      break;
    case EventKind::TransmitComplete:
      if (ev.place == Place::SenderAccess)
        on_sender_tx_complete(*f, ev.pkt, ev.at);
      else
        on_bottleneck_tx_complete(ev.pkt, ev.at);
      break;
    case EventKind::PacketArrival:
      switch (ev.place) {
        case Place::BottleneckIngress:
          on_bottleneck_ingress(ev.pkt, ev.at);
          break;
        case Place::Receiver:
          on_receiver_arrival(*f, ev.pkt, ev.at);
          break;
        case Place::ReverseBottleneck:
          on_reverse_bottleneck(ev.pkt, ev.at);
          break;
        case Place::Sender:
          on_sender_ack(*f, ev.pkt, ev.at);
          break;
        default:
          throw std::logic_error("arrival with no place");
      }
      break;
  }
}

void Simulation::on_flow_start(Flow& f, SimTime now) {
  f.sender.active = true;
  trace(f, now, TraceRecord::Kind::Start);
  try_send(f, now);
}

void Simulation::on_flow_stop(Flow& f, SimTime now) {
  f.sender.active = false;
  f.sender.rto_armed = false;
  trace(f, now, TraceRecord::Kind::Stop);
}

void Simulation::try_send(Flow& f, SimTime now) {
  auto& s = f.sender;
  if (!s.active || s.tx_busy) return;

  // Holes already covered by a later cumulative ACK need no retransmit.
  while (!s.rexmit_queue.empty() && s.rexmit_queue.front() < s.highest_cum_ack)
    s.rexmit_queue.pop_front();

  Packet pkt;
  pkt.flow = f.id;
  pkt.kind = PacketKind::Data;
  pkt.size_bytes = topo_.data_packet_bytes();
  pkt.sent_at = now;
  if (!s.rexmit_queue.empty()) {
    pkt.seq = s.rexmit_queue.front();
    pkt.retransmit = true;
    s.rexmit_queue.pop_front();
    s.segment(pkt.seq).retransmitted = true;
    ++counters_[static_cast<std::size_t>(f.id)].retransmits;
  } else if (s.pipe() < static_cast<std::int64_t>(f.controller->cwnd())) {
    pkt.seq = s.next_seq++;
    s.unacked.push_back({now, false});
  } else {
    return;
  }

  ++counters_[static_cast<std::size_t>(f.id)].data_sent;
  s.tx_busy = true;
  const SimTime done = now + f.snd_access.tx_time(pkt.size_bytes);
  events_.push({.at = done,
                .kind = EventKind::TransmitComplete,
                .place = Place::SenderAccess,
                .flow = f.id,
                .pkt = pkt});
  if (!s.rto_armed) arm_rto(f, now);
}

void Simulation::on_sender_tx_complete(Flow& f, const Packet& pkt, SimTime now) {
  f.sender.tx_busy = false;
  events_.push({.at = now + f.snd_access.spec().prop_delay,
                .kind = EventKind::PacketArrival,
                .place = Place::BottleneckIngress,
                .flow = f.id,
                .pkt = pkt});
  try_send(f, now);
}

void Simulation::on_bottleneck_ingress(const Packet& pkt, SimTime now) {
  if (!bottleneck_busy_) {
    bottleneck_busy_ = true;
    events_.push({.at = now + bottleneck_.tx_time(pkt.size_bytes),
                  .kind = EventKind::TransmitComplete,
                  .place = Place::Bottleneck,
                  .flow = pkt.flow,
                  .pkt = pkt});
  } else if (!queue_.try_push(pkt)) {
    ++counters_[static_cast<std::size_t>(pkt.flow)].dropped_queue;
    trace(flow(pkt.flow), now, TraceRecord::Kind::QueueDrop);
  }
}

void Simulation::on_bottleneck_tx_complete(const Packet& pkt, SimTime now) {
  if (!queue_.empty()) {
    const Packet next = queue_.pop();
    events_.push({.at = now + bottleneck_.tx_time(next.size_bytes),
                  .kind = EventKind::TransmitComplete,
                  .place = Place::Bottleneck,
                  .flow = next.flow,
                  .pkt = next});
  } else {
    bottleneck_busy_ = false;
  }

  Flow& f = flow(pkt.flow);
  if (maybe_corrupt(topo_.cfg.per, rng_)) {
    ++counters_[static_cast<std::size_t>(pkt.flow)].dropped_per;
    trace(f, now, TraceRecord::Kind::PerDrop);
    return;
  }
  // Store-and-forward at the far router, then the receiver's access link.
  const SimTime at_router = now + topo_.cfg.bottleneck_delay;
  const SimTime at_receiver = f.rcv_access.send_at(at_router, pkt.size_bytes);
  events_.push({.at = at_receiver,
                .kind = EventKind::PacketArrival,
                .place = Place::Receiver,
                .flow = pkt.flow,
                .pkt = pkt});
}

void Simulation::on_receiver_arrival(Flow& f, const Packet& pkt, SimTime now) {
  auto& c = counters_[static_cast<std::size_t>(f.id)];
  ++c.data_delivered;
  if (now >= opt_.warmup) ++c.data_delivered_measured;
  bool first_copy = false;
  const std::int64_t cum = f.receiver.on_data(pkt.seq, first_copy);
  if (first_copy) {
    ++c.goodput_segments;
    if (now >= opt_.warmup) ++c.goodput_segments_measured;
  }
  if (opt_.trace) trace(f, now, TraceRecord::Kind::Deliver);

  Packet ack;
  ack.flow = f.id;
  ack.kind = PacketKind::Ack;
  ack.seq = cum;
  ack.size_bytes = topo_.cfg.ack_bytes;
  ack.sent_at = now;
  const SimTime at_router = f.rcv_access_rev.send_at(now, ack.size_bytes);
  events_.push({.at = at_router,
                .kind = EventKind::PacketArrival,
                .place = Place::ReverseBottleneck,
                .flow = f.id,
                .pkt = ack});
}

void Simulation::on_reverse_bottleneck(const Packet& ack, SimTime now) {
  Flow& f = flow(ack.flow);
  const SimTime at_near_router = bottleneck_rev_.send_at(now, ack.size_bytes);
  const SimTime at_sender =
      f.snd_access_rev.send_at(at_near_router, ack.size_bytes);
  events_.push({.at = at_sender,
                .kind = EventKind::PacketArrival,
                .place = Place::Sender,
                .flow = ack.flow,
                .pkt = ack});
}

void Simulation::on_sender_ack(Flow& f, const Packet& ack, SimTime now) {
  auto& s = f.sender;
  if (!s.active) return;
  const std::int64_t cum = ack.seq;
  if (cum > s.next_seq)
    throw std::logic_error("protocol error: cumulative ACK beyond next_seq");

  if (cum > s.highest_cum_ack) {
    const std::int64_t acked = cum - s.highest_cum_ack;
    const auto& newest = s.segment(cum - 1);
    if (!newest.retransmitted) {
      const SimTime rtt = now - newest.sent_at;
      s.rto.sample(rtt);
      auto& c = counters_[static_cast<std::size_t>(f.id)];
      c.min_rtt = std::min(c.min_rtt, rtt);
    }
    s.unacked.erase(s.unacked.begin(), s.unacked.begin() + acked);
    s.highest_cum_ack = cum;
    s.dup_acks = 0;

    if (s.in_recovery && cum < s.recovery_point) {
      // Partial ACK: the next hole starts here; retransmit it and stay in
      // recovery without touching the controller.
      queue_retransmit(f, cum);
    } else {
      if (s.in_recovery) s.in_recovery = false;
      controller_event(f, cca::ControllerEvent::Kind::AckReceived,
                       static_cast<int>(acked), now, TraceRecord::Kind::Ack);
    }
    if (s.next_seq > s.highest_cum_ack)
      arm_rto(f, now);  // restart while data is outstanding
    else
      s.rto_armed = false;
    try_send(f, now);
  } else if (s.next_seq > s.highest_cum_ack) {
    ++s.dup_acks;
    if (s.dup_acks == 3 && !s.in_recovery) {
      s.in_recovery = true;
      s.recovery_point = s.next_seq;
      ++counters_[static_cast<std::size_t>(f.id)].loss_episodes;
      queue_retransmit(f, s.highest_cum_ack);
      controller_event(f, cca::ControllerEvent::Kind::TripleDupAck, 0, now,
                       TraceRecord::Kind::FastRetransmit);
    }
    // Later duplicates only widen the pipe credit.
    try_send(f, now);
  }
}

void Simulation::on_rto_expiry(Flow& f, SimTime now) {
  auto& s = f.sender;
  s.rto_event_pending = false;
  if (!s.active || !s.rto_armed) return;
  if (s.rto_deadline > now) {
    // Restarted since this event was scheduled; re-check at the new deadline.
    events_.push({.at = s.rto_deadline, .kind = EventKind::RtoExpiry, .flow = f.id});
    s.rto_event_pending = true;
    return;
  }

  ++counters_[static_cast<std::size_t>(f.id)].timeouts;
  s.rto.back_off();
  s.dup_acks = 0;
  s.in_recovery = false;
  s.rexmit_queue.clear();
  queue_retransmit(f, s.highest_cum_ack);
  controller_event(f, cca::ControllerEvent::Kind::Timeout, 0, now,
                   TraceRecord::Kind::Timeout);
  s.rto_armed = false;
  arm_rto(f, now);
  try_send(f, now);
}

void Simulation::queue_retransmit(Flow& f, std::int64_t seq) {
  auto& q = f.sender.rexmit_queue;
  if (std::find(q.begin(), q.end(), seq) == q.end()) q.push_back(seq);
}

void Simulation::arm_rto(Flow& f, SimTime now) {
  auto& s = f.sender;
  s.rto_deadline = now + s.rto.rto();
  s.rto_armed = true;
  if (!s.rto_event_pending) {
    events_.push(
        {.at = s.rto_deadline, .kind = EventKind::RtoExpiry, .flow = f.id});
    s.rto_event_pending = true;
  }
}

void Simulation::controller_event(Flow& f, cca::ControllerEvent::Kind kind,
                                  int acked_segments, SimTime now,
                                  TraceRecord::Kind trace_kind) {
  const cca::ControllerEvent ev{kind, acked_segments, to_seconds(now)};
  f.controller->apply(ev);
  trace(f, now, trace_kind);
}

void Simulation::trace(Flow& f, SimTime now, TraceRecord::Kind kind) {
  if (opt_.trace) {
    TraceRecord r;
    r.at = now;
    r.flow = f.id;
    r.kind = kind;
    r.cwnd = f.controller->cwnd();
    r.ssthresh = f.controller->ssthresh();
    r.lambda = f.controller->last_lambda();
    r.phase = f.controller->phase();
    r.queue_len = queue_.size();
    opt_.trace(r);
  }
  if (opt_.collect_cwnd_series && kind != TraceRecord::Kind::Deliver) {
    const bool at_edge = kind != TraceRecord::Kind::Ack;
    if (at_edge || now - f.last_series_sample >= opt_.series_interval) {
      series_[static_cast<std::size_t>(f.id)].push_back(
          {now, f.controller->cwnd()});
      f.last_series_sample = now;
    }
  }
}

void Simulation::audit_in_flight() {
  // Independent end-of-run census: data packets still inside links or the
  // buffer are exactly the ones held by pending events plus queue contents.
  for (const Event& ev : events_.pending()) {
    const bool data_in_transit =
        ev.kind == EventKind::TransmitComplete ||
        (ev.kind == EventKind::PacketArrival &&
         (ev.place == Place::BottleneckIngress || ev.place == Place::Receiver));
    if (data_in_transit)
      ++counters_[static_cast<std::size_t>(ev.pkt.flow)].in_flight_at_end;
  }
  for (const Packet& p : queue_.contents())
    ++counters_[static_cast<std::size_t>(p.flow)].in_flight_at_end;
}

}  // namespace agilesim::net
