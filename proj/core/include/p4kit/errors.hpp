#pragma once

#include <stdexcept>
#include <string>

namespace p4kit {

// Base of every error raised by the library. Callers that only care about
// "something went wrong" catch this; the CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller violated a documented precondition (bad argument, bad flag value).
class UsageError : public Error {
 public:
  using Error::Error;
};

// Inhomogeneous sum, or an entry whose degree does not match its twists.
class DegreeError : public UsageError {
 public:
  using UsageError::UsageError;
};

// Twist lists or matrix sizes do not fit together.
class ShapeError : public UsageError {
 public:
  using UsageError::UsageError;
};

// A scheme had the wrong dimension for the requested invariant.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A random "general" choice turned out special; callers reseed.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

// A construction stage produced an object violating its defining property.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public UsageError {
 public:
  ParseError(const std::string& what, int line, int column)
      : UsageError(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace p4kit
