#include "agilesim/cca/agile_sd.hpp"

#include <algorithm>

namespace agilesim::cca {

void AgileSd::on_ack(const ControllerEvent&) {
  if (phase_ == Phase::FastRecovery) {
    // The new ACK covering the loss ends recovery; growth resumes with the
    // next ACK.
    phase_ = Phase::CongestionAvoidance;
    return;
  }
  if (phase_ == Phase::SlowStart) {
    cwnd_ += 1.0;
    if (cwnd_ >= ssthresh_) phase_ = Phase::CongestionAvoidance;
    return;
  }
  // Congestion avoidance. Before the first loss both gaps default to 1,
  // so the factor starts at lambda_max.
  double gc = 1.0;
  double gt = 1.0;
  if (loss_seen_) {
    gc = gap_current(cwnd_loss_, cwnd_);
    gt = gap_total(cwnd_loss_, cwnd_degraded_);
  }
  const double lambda = agility_factor(params_, gc, gt);
  last_lambda_ = lambda;
  cwnd_ += lambda / cwnd_;
}

void AgileSd::on_triple_dup_ack(const ControllerEvent&) {
  if (phase_ == Phase::FastRecovery) return;  // one reduction per episode
  cwnd_loss_ = cwnd_;
  const double beta =
      (phase_ == Phase::SlowStart) ? params_.beta1 : params_.beta2;
  cwnd_ = std::max(cwnd_ * beta, params_.initial_cwnd);
  ssthresh_ = cwnd_ - 1.0;  // keeps the flow out of slow start after the cut
  cwnd_degraded_ = cwnd_;
  loss_seen_ = true;
  phase_ = Phase::FastRecovery;
}

void AgileSd::on_timeout(const ControllerEvent&) {
  ssthresh_ = std::max(cwnd_ / 2.0, 2.0);
  cwnd_ = params_.initial_cwnd;
  // Slow start unless the halved ssthresh already sits at/below the restart
  // window.
  phase_ = (cwnd_ < ssthresh_) ? Phase::SlowStart : Phase::CongestionAvoidance;
}

}  // namespace agilesim::cca
