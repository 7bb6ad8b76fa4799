#pragma once

#include <stdexcept>
#include <string>

namespace degloci {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different polynomial rings.
class RingMismatch : public Error {
 public:
  using Error::Error;
};

/// A computation exceeded a configured resource bound (e.g. the degree guard).
/// Never a wrong answer: the operation is abandoned.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A mathematical hypothesis required by a construction is not satisfied
/// (for instance f is not in m·E^v when homogenizing the lifted map).
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. Carries a 1-based line/column when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line = 0, int column = 0)
      : Error(line > 0 ? std::to_string(line) + ":" + std::to_string(column) + ": " + msg : msg),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace degloci
