#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "agilesim/cca/params.hpp"

namespace agilesim::cca {

enum class Phase : std::uint8_t { SlowStart, CongestionAvoidance, FastRecovery };

std::string_view to_string(Phase p);

/// Controller-visible event. The transport layer forwards one AckReceived per
/// cumulative ACK that advances the window (ACKs inside fast recovery are
/// swallowed except the one that ends it), one TripleDupAck per loss episode,
/// and Timeout on RTO expiry.
struct ControllerEvent {
  enum class Kind : std::uint8_t { AckReceived, TripleDupAck, Timeout };
  Kind kind = Kind::AckReceived;
  int acked_segments = 1;
  double now_s = 0.0;  // simulation time in seconds
};

/// Contract shared by all congestion controllers. Pure state machines: the
/// same event sequence always reproduces the same trajectory, so instances
/// are single-flow and need no synchronization.
class CongestionController {
 public:
  virtual ~CongestionController() = default;

  virtual void on_ack(const ControllerEvent& ev) = 0;
  virtual void on_triple_dup_ack(const ControllerEvent& ev) = 0;
  virtual void on_timeout(const ControllerEvent& ev) = 0;

  void apply(const ControllerEvent& ev) {
    switch (ev.kind) {
      case ControllerEvent::Kind::AckReceived: on_ack(ev); break;
      case ControllerEvent::Kind::TripleDupAck: on_triple_dup_ack(ev); break;
      case ControllerEvent::Kind::Timeout: on_timeout(ev); break;
    }
  }

  double cwnd() const { return cwnd_; }
  double ssthresh() const { return ssthresh_; }
  Phase phase() const { return phase_; }

  /// Agility factor used by the most recent congestion-avoidance increment;
  /// 1 for controllers without one. Trace-hook plumbing.
  virtual double last_lambda() const { return 1.0; }

  virtual std::string_view name() const = 0;

 protected:
  CongestionController(double initial_cwnd, double initial_ssthresh)
      : cwnd_(initial_cwnd), ssthresh_(initial_ssthresh) {}

  double cwnd_;
  double ssthresh_;
  Phase phase_ = Phase::SlowStart;
};

/// Effectively-unbounded initial ssthresh: slow start runs until first loss.
inline constexpr double kInitialSsthresh = 1e12;

/// Factory keyed by the CLI names: "agile-sd", "newreno", "cubic".
/// Throws std::invalid_argument for unknown names.
std::unique_ptr<CongestionController> make_controller(std::string_view name,
                                                      const AgileParams& agile,
                                                      const CubicParams& cubic);

bool is_known_controller(std::string_view name);

}  // namespace agilesim::cca
