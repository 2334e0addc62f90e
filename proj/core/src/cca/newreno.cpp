#include "agilesim/cca/newreno.hpp"

#include <algorithm>

namespace agilesim::cca {

void NewReno::on_ack(const ControllerEvent&) {
  if (phase_ == Phase::FastRecovery) {
    phase_ = Phase::CongestionAvoidance;
    return;
  }
  if (phase_ == Phase::SlowStart) {
    cwnd_ += 1.0;
    if (cwnd_ >= ssthresh_) phase_ = Phase::CongestionAvoidance;
    return;
  }
  cwnd_ += 1.0 / cwnd_;
}

void NewReno::on_triple_dup_ack(const ControllerEvent&) {
  if (phase_ == Phase::FastRecovery) return;
  cwnd_ = std::max(cwnd_ * 0.5, 2.0);
  ssthresh_ = cwnd_;
  phase_ = Phase::FastRecovery;
}

void NewReno::on_timeout(const ControllerEvent&) {
  ssthresh_ = std::max(cwnd_ / 2.0, 2.0);
  cwnd_ = initial_cwnd_;
  phase_ = (cwnd_ < ssthresh_) ? Phase::SlowStart : Phase::CongestionAvoidance;
}

}  // namespace agilesim::cca
