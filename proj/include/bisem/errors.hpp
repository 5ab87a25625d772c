#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bisem {

// Operation tables that are not square, not closed, or otherwise ill-formed.
class malformed_table : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A caller violated an operation's precondition (missing signature symbol,
// a <= b passed to separation, size bounds exceeded, ...).
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Text input that does not follow a documented grammar. Carries the 1-based
// line number when one is meaningful (0 otherwise).
class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A representation or duality check failed on the given input; the message
// carries the witness.
class verification_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bisem
