#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace koszul {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands disagree on the number of variables or on matrix shapes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Malformed ideal or bench-row input. Line and column are 1-based.
/// Line 0 means the error has no position in the input, e.g. an unreadable file.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A size cap or attempt cap was exceeded, or a request is infeasible for the input.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on an input outside its domain (e.g. Scarf Betti numbers of a
/// non-generic ideal).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed, e.g. a differential that does not square to zero.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace koszul
