#pragma once

#include "agilesim/cca/agility.hpp"
#include "agilesim/cca/controller.hpp"
#include "agilesim/cca/params.hpp"

namespace agilesim::cca {

/// Loss-based controller for high-speed short-distance paths. Slow start is
/// standard (+1 segment per ACK). In congestion avoidance each ACK adds
/// lambda/cwnd, where the agility factor lambda starts at lambda_max right
/// after a loss and decays toward 1 as cwnd reapproaches the window at which
/// the loss was recorded, giving a convex climb that flattens into the
/// standard linear increase near the previous loss point.
///
/// On a triple-dup-ACK loss the window shrinks to beta1*cwnd (slow start) or
/// beta2*cwnd (congestion avoidance), ssthresh is set to the reduced cwnd - 1
/// to keep the flow out of slow start, and the loss/degraded window pair that
/// drives the agility factor is re-anchored. Timeout resets cwnd to the
/// initial value.
class AgileSd final : public CongestionController {
 public:
  explicit AgileSd(const AgileParams& params)
      : CongestionController(params.initial_cwnd, kInitialSsthresh),
        params_(params) {}

  void on_ack(const ControllerEvent& ev) override;
  void on_triple_dup_ack(const ControllerEvent& ev) override;
  void on_timeout(const ControllerEvent& ev) override;

  double last_lambda() const override { return last_lambda_; }
  std::string_view name() const override { return "agile-sd"; }

  const AgileParams& params() const { return params_; }
  bool loss_seen() const { return loss_seen_; }
  double cwnd_loss() const { return cwnd_loss_; }
  double cwnd_degraded() const { return cwnd_degraded_; }

 private:
  AgileParams params_;
  bool loss_seen_ = false;
  double cwnd_loss_ = 0.0;      // cwnd recorded at the last loss
  double cwnd_degraded_ = 0.0;  // cwnd immediately after the last reduction
  double last_lambda_ = 1.0;
};

}  // namespace agilesim::cca
