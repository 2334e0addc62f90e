#pragma once

#include "agilesim/cca/controller.hpp"
#include "agilesim/cca/params.hpp"

namespace agilesim::cca {

/// Reference AIMD controller: +1/ACK in slow start, +1/cwnd per ACK in
/// congestion avoidance, halve on triple-dup-ACK, reset to the initial
/// window on timeout.
class NewReno final : public CongestionController {
 public:
  explicit NewReno(double initial_cwnd = 2.0)
      : CongestionController(initial_cwnd, kInitialSsthresh),
        initial_cwnd_(initial_cwnd) {}

  void on_ack(const ControllerEvent& ev) override;
  void on_triple_dup_ack(const ControllerEvent& ev) override;
  void on_timeout(const ControllerEvent& ev) override;

  std::string_view name() const override { return "newreno"; }

 private:
  double initial_cwnd_;
};

}  // namespace agilesim::cca
