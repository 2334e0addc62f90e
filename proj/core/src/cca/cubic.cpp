#include "agilesim/cca/cubic.hpp"

#include <algorithm>
#include <cmath>

namespace agilesim::cca {

double cubic_k(double w_max, const CubicParams& params) {
  return std::cbrt(w_max * params.beta / params.c);
}

double cubic_target(double t_since_loss_s, double w_max, double k,
                    const CubicParams& params) {
  const double d = t_since_loss_s - k;
  return params.c * d * d * d + w_max;
}

void Cubic::begin_epoch(double now_s, double w_max) {
  epoch_started_ = true;
  epoch_start_s_ = now_s;
  w_max_ = w_max;
  k_ = cubic_k(w_max_, params_);
  w_est_ = cwnd_;
}

void Cubic::on_ack(const ControllerEvent& ev) {
  if (phase_ == Phase::FastRecovery) {
    phase_ = Phase::CongestionAvoidance;
    return;
  }
  if (phase_ == Phase::SlowStart) {
    cwnd_ += 1.0;
    if (cwnd_ >= ssthresh_) phase_ = Phase::CongestionAvoidance;
    return;
  }
  if (!epoch_started_) {
    // Congestion avoidance entered without a loss on record (initial climb
    // past ssthresh or post-timeout): grow convex from the current window.
    begin_epoch(ev.now_s, cwnd_);
    k_ = 0.0;
  }
  const double t = ev.now_s - epoch_start_s_;
  const double target = cubic_target(t, w_max_, k_, params_);
  if (target > cwnd_) cwnd_ += (target - cwnd_) / cwnd_;
  // Shadow AIMD flow with the equivalent-rate gain 3*beta/(2-beta) per RTT;
  // it floors cwnd so cubic never trails standard TCP.
  const double friendly_gain = 3.0 * params_.beta / (2.0 - params_.beta);
  w_est_ += friendly_gain / cwnd_;
  if (cwnd_ < w_est_) cwnd_ = w_est_;
}

void Cubic::on_triple_dup_ack(const ControllerEvent& ev) {
  if (phase_ == Phase::FastRecovery) return;
  w_max_ = cwnd_;
  cwnd_ = std::max(cwnd_ * (1.0 - params_.beta), 2.0);
  ssthresh_ = cwnd_;
  begin_epoch(ev.now_s, w_max_);
  phase_ = Phase::FastRecovery;
}

void Cubic::on_timeout(const ControllerEvent&) {
  ssthresh_ = std::max(cwnd_ / 2.0, 2.0);
  cwnd_ = params_.initial_cwnd;
  epoch_started_ = false;  // re-anchored when congestion avoidance resumes
  phase_ = (cwnd_ < ssthresh_) ? Phase::SlowStart : Phase::CongestionAvoidance;
}

}  // namespace agilesim::cca
