#pragma once

#include "agilesim/cca/controller.hpp"
#include "agilesim/cca/params.hpp"

namespace agilesim::cca {

/// Time from a loss until the cubic curve returns to w_max.
double cubic_k(double w_max, const CubicParams& params);

/// Target window t seconds after the last loss: c*(t - k)^3 + w_max.
double cubic_target(double t_since_loss_s, double w_max, double k,
                    const CubicParams& params);

/// Cubic congestion avoidance: the window follows a cubic curve of elapsed
/// time since the last loss, concave up to the previous maximum w_max and
/// convex beyond it. A shadow AIMD window (per-RTT gain 3*beta/(2-beta),
/// integrated per ACK) provides the floor so cubic never grows slower than
/// the equivalent standard TCP flow.
class Cubic final : public CongestionController {
 public:
  explicit Cubic(const CubicParams& params = {})
      : CongestionController(params.initial_cwnd, kInitialSsthresh),
        params_(params) {}

  void on_ack(const ControllerEvent& ev) override;
  void on_triple_dup_ack(const ControllerEvent& ev) override;
  void on_timeout(const ControllerEvent& ev) override;

  std::string_view name() const override { return "cubic"; }

  const CubicParams& params() const { return params_; }
  double w_max() const { return w_max_; }
  double k() const { return k_; }

 private:
  void begin_epoch(double now_s, double w_max);

  CubicParams params_;
  bool epoch_started_ = false;
  double epoch_start_s_ = 0.0;  // time of the last loss (or CA entry)
  double w_max_ = 0.0;
  double k_ = 0.0;
  double w_est_ = 0.0;  // shadow AIMD window, the friendliness floor
};

}  // namespace agilesim::cca
