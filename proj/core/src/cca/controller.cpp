#include "agilesim/cca/controller.hpp"

#include <stdexcept>

#include "agilesim/cca/agile_sd.hpp"
#include "agilesim/cca/cubic.hpp"
#include "agilesim/cca/newreno.hpp"

namespace agilesim::cca {

std::string_view to_string(Phase p) {
  switch (p) {
    case Phase::SlowStart: return "slow_start";
    case Phase::CongestionAvoidance: return "congestion_avoidance";
    case Phase::FastRecovery: return "fast_recovery";
  }
  return "unknown";
}

bool is_known_controller(std::string_view name) {
  return name == "agile-sd" || name == "newreno" || name == "cubic";
}

std::unique_ptr<CongestionController> make_controller(
    std::string_view name, const AgileParams& agile, const CubicParams& cubic) {
  if (name == "agile-sd") return std::make_unique<AgileSd>(agile);
  if (name == "newreno") return std::make_unique<NewReno>(agile.initial_cwnd);
  if (name == "cubic") {
    CubicParams p = cubic;
    p.initial_cwnd = agile.initial_cwnd;
    return std::make_unique<Cubic>(p);
  }
  throw std::invalid_argument("cca: unknown controller '" + std::string(name) +
                              "' (expected agile-sd, newreno or cubic)");
}

}  // namespace agilesim::cca
