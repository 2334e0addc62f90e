#include "agilesim/exp/csv.hpp"

#include <charconv>

namespace agilesim::exp {

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace agilesim::exp
