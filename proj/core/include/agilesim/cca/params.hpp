#pragma once

#include <stdexcept>
#include <string>

namespace agilesim::cca {

/// Tuning knobs for the Agile-SD controller.
///
/// lambda_min is pinned to 1 so the per-ACK increment never falls below the
/// standard 1/cwnd; lambda_max bounds the speed-up right after a loss.
/// beta1/beta2 are the multiplicative-decrease factors applied on a
/// triple-dup-ACK loss detected in slow start / congestion avoidance.
struct AgileParams {
  double lambda_min = 1.0;
  double lambda_max = 3.0;
  double beta1 = 0.90;
  double beta2 = 0.95;
  double initial_cwnd = 2.0;  // segments

  /// Boundary validation used by config parsing. Throws std::invalid_argument
  /// naming the offending field. Direct aggregate construction is not
  /// validated, so test rigs may use degenerate values (e.g. beta1 == beta2
  /// for the NewReno-matched configuration).
  void validate() const {
    if (lambda_min != 1.0)
      throw std::invalid_argument("lambda_min: must be 1");
    if (lambda_max < 1.0)
      throw std::invalid_argument("lambda_max: must be >= 1");
    if (!(beta1 > 0.0 && beta1 < 1.0))
      throw std::invalid_argument("beta1: must be in (0,1)");
    if (!(beta2 > 0.0 && beta2 < 1.0))
      throw std::invalid_argument("beta2: must be in (0,1)");
    if (!(beta1 < beta2))
      throw std::invalid_argument("beta1: must be < beta2");
    if (initial_cwnd < 1.0)
      throw std::invalid_argument("initial_cwnd: must be >= 1");
  }
};

/// Cubic constants, reference defaults. No fast convergence and no extra
/// friendliness heuristics beyond the AIMD floor.
struct CubicParams {
  double c = 0.4;
  double beta = 0.3;          // cwnd -> cwnd * (1 - beta) on loss
  double initial_cwnd = 2.0;  // segments
};

}  // namespace agilesim::cca
