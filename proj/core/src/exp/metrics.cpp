#include "agilesim/exp/metrics.hpp"

#include <stdexcept>

namespace agilesim::exp {

double jain_fairness(std::span<const double> throughputs) {
  if (throughputs.empty())
    throw std::invalid_argument("jain_fairness: empty throughput list");
  double sum = 0.0;
  double sum_sq = 0.0;
  for (double x : throughputs) {
    if (x < 0.0)
      throw std::invalid_argument("jain_fairness: negative throughput");
    sum += x;
    sum_sq += x * x;
  }
  if (sum_sq == 0.0)
    throw std::invalid_argument("jain_fairness: all throughputs are zero");
  return sum * sum / (static_cast<double>(throughputs.size()) * sum_sq);
}

double average_throughput(double delivered_bytes, double active_time_s) {
  if (!(active_time_s > 0.0))
    throw std::invalid_argument("average_throughput: active time must be > 0");
  return delivered_bytes * 8.0 / active_time_s;
}

double loss_ratio(std::int64_t dropped, std::int64_t sent) {
  if (sent <= 0) throw std::invalid_argument("loss_ratio: nothing sent");
  if (dropped < 0) throw std::invalid_argument("loss_ratio: negative drops");
  return static_cast<double>(dropped) / static_cast<double>(sent);
}

}  // namespace agilesim::exp
