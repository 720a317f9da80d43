#pragma once

#include <stdexcept>
#include <string>

#include "gg/chart.hpp"

namespace gg {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
  size_t position;
};

/// Parse a coefficient expression: integers, i, full coordinate names,
/// + - * / ^ and parentheses. Angle coordinates are rejected.
Coeff parse_coeff(const std::string& src, const Chart& chart);

}  // namespace gg
