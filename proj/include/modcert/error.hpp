#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace modcert {

/// Malformed graph or certificate text. `line()` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A caller-supplied value violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An identity that a proven statement guarantees did not hold. Never repaired.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace modcert
