#include "agilesim/cca/agility.hpp"

#include <algorithm>

namespace agilesim::cca {

double gap_total(double cwnd_loss, double cwnd_degraded) {
  return std::max(cwnd_loss - cwnd_degraded, 1.0);
}

double gap_current(double cwnd_loss, double cwnd) {
  return std::max(cwnd_loss - cwnd, 1.0);
}

double agility_factor(const AgileParams& params, double gap_current,
                      double gap_total) {
  const double lambda =
      std::max(params.lambda_max * gap_current / gap_total, params.lambda_min);
  return std::min(lambda, params.lambda_max);
}

double epoch_time(double rtt_s, std::span<const double> lambdas) {
  double total = 0.0;
  for (double lambda : lambdas) total += rtt_s / lambda;
  return total;
}

}  // namespace agilesim::cca
