#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace borelgin {

/// Raised by the text front end; carries a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(message + " at line " + std::to_string(line) + ", column " +
                           std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation could not be completed (e.g. retry budget exhausted).
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A checker observed an outcome that a proven statement forbids.
/// Either the input violates a hidden hypothesis or there is a bug.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace borelgin
