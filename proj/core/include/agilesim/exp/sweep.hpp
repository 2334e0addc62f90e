#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "agilesim/exp/scenario.hpp"

namespace agilesim::exp {

struct SweepRow {
  std::string cca;
  ScenarioKind scenario = ScenarioKind::SingleFlow;
  int buffer_packets = 0;
  double per = 0.0;
  std::uint64_t seed = 0;
  MetricsReport report;
};

/// Seed for one sweep cell, mixed from the parameter values themselves so
/// reordering or re-slicing the sweep never changes any cell's run.
std::uint64_t derive_run_seed(std::uint64_t master, std::string_view cca,
                              int buffer_packets, double per);

/// Cartesian product cca x buffer x per over the base scenario, one
/// independent run per cell. jobs <= 0 uses the hardware thread count; rows
/// come back in deterministic input order regardless of worker scheduling.
std::vector<SweepRow> sweep(const ScenarioSpec& base,
                            std::span<const int> buffers,
                            std::span<const double> pers,
                            std::span<const std::string> ccas, int jobs = 0);

/// metrics/sweep CSV: header plus one row per flow per run.
void write_metrics_csv(std::ostream& out, std::span<const SweepRow> rows);

}  // namespace agilesim::exp
