#pragma once

#include <stdexcept>
#include <string>

namespace symk2 {

// Precondition violations and unusable inputs (zero polynomial where a
// nonzero one is required, non-dominant map, reducible curve, ...).
struct value_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Internal consistency failures: a checked postcondition did not hold
// (Bezout count off, genericity retries exhausted, cross-check mismatch).
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

// Syntax errors from the expression parser; `position` is a byte offset
// into the input text.
struct parse_error : std::runtime_error {
  std::size_t position;
  parse_error(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

}  // namespace symk2
