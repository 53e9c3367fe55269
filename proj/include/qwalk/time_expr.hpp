#pragma once

#include <optional>
#include <string_view>

namespace qwalk {

/// Parses a time such as "pi/2", "3pi/2", "pi/sqrt2", "2pi/Delta", "pi" or a
/// decimal literal. "Delta" resolves against `delta`; without one it is an
/// error. Throws std::invalid_argument on malformed input.
double parse_time(std::string_view text, std::optional<double> delta = std::nullopt);

}  // namespace qwalk
