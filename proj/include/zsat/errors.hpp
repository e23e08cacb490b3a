#pragma once

#include <stdexcept>
#include <string>

namespace zsat {

/// Base class of all errors raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid input or API misuse (bad clause, mismatched stores, bad argument).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// DIMACS parsing failure; carries the 1-based input line number.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, long line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

  long line() const { return line_; }

 private:
  long line_;
};

/// A counter left the 64-bit unsigned range. Never silently wraps.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A node or time budget ran out before a verdict was reached.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace zsat
