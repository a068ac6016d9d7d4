#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fplab {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the mathematical input was violated (zero divisor,
/// mismatched rings, non-homogeneous input where a grading is required...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A computation exceeded its configured budget (S-pairs, exponents, variables).
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A check could not be decided within the configured search bounds.
class Inconclusive : public Error {
 public:
  using Error::Error;
};

/// Syntax error in polynomial text or a session file. `line` is 0 when the
/// input was a single expression.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(format(what, line, column)), message_(what), line_(line), column_(column) {}

  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) return "column " + std::to_string(column) + ": " + what;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }

  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace fplab
