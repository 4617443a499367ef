#pragma once

#include <stdexcept>
#include <string>

namespace shannon {

// A computation was refused because its input exceeds a configured size or
// field limit. Distinct from malformed input so callers can report capability
// limits separately.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (graph6, graph names).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace shannon
