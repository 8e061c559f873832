#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rectdist {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mixed-sign infinite sum, e.g. (+inf) + (-inf).
class UndefinedArithmetic : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A rectangle with some lower endpoint not strictly below its upper endpoint,
/// or with an endpoint on the wrong side of infinity.
class InvalidRectangle : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// A matching that reuses a left or right index.
class InvalidMatching : public Error {
 public:
  using Error::Error;
};

/// Input exceeds the size guard of an exhaustive procedure.
class TooLarge : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(format(line, column, message)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(std::size_t line, std::size_t column, const std::string& message) {
    if (line == 0) return "parse error: " + message;
    return "parse error at line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
           message;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace rectdist
