#pragma once

#include <string>

namespace agilesim::exp {

/// Shortest round-trip decimal form via std::to_chars: stable bytes for a
/// given double, so equal runs emit byte-identical files.
std::string format_double(double v);

}  // namespace agilesim::exp
