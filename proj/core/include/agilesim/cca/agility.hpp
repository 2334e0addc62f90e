#pragma once

#include <span>

#include "agilesim/cca/params.hpp"

namespace agilesim::cca {

/// Window released by the last loss: distance from the recorded loss point
/// down to the post-reduction window, floored at 1 segment.
double gap_total(double cwnd_loss, double cwnd_degraded);

/// Remaining distance from the current window up to the last loss point,
/// floored at 1 segment.
double gap_current(double cwnd_loss, double cwnd);

/// Agility factor: lambda_max scaled by how far the window still is from the
/// last loss point, never below lambda_min. Callers keep gap_current <=
/// gap_total (both measured against the same cwnd_loss); the result is
/// clamped into [lambda_min, lambda_max] regardless.
double agility_factor(const AgileParams& params, double gap_current,
                      double gap_total);

/// Time for one climb from cwnd_degraded back to cwnd_loss when cycle i runs
/// at agility lambdas[i]: sum of rtt / lambda_i. Empty sequence -> 0.
/// With all lambdas at 1 this is the standard one-RTT-per-cycle epoch.
double epoch_time(double rtt_s, std::span<const double> lambdas);

}  // namespace agilesim::cca
