#pragma once

#include <stdexcept>
#include <string>

namespace suprep {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. Carries a 1-based line and column when known.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, int line = 0, int column = 0)
      : Error(format(what, line, column)), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& what, int line, int column) {
    if (line > 0 && column > 0)
      return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
    if (line > 0) return "line " + std::to_string(line) + ": " + what;
    if (column > 0) return "column " + std::to_string(column) + ": " + what;
    return what;
  }
  int line_;
  int column_;
};

/// Coordinate count or arity mismatch.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Structurally valid input that violates a mathematical precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Algebra table fails one or more axioms; the message lists them.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A module computation left the constructed depth range.
class DepthError : public Error {
 public:
  using Error::Error;
};

}  // namespace suprep
