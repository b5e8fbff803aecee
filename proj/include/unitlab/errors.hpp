#pragma once

#include <stdexcept>
#include <string>

namespace unitlab {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// An operation whose theory requires an odd prime was invoked with p = 2.
struct PrimeTwoError : Error {
  explicit PrimeTwoError(const std::string& msg) : Error(msg) {}
};

// A construction would exceed the configured group-order cap.
struct CapExceededError : Error {
  CapExceededError(long long requested, int cap)
      : Error("group order " + std::to_string(requested) + " exceeds cap " + std::to_string(cap)),
        requested(requested),
        cap(cap) {}
  long long requested;
  int cap;
};

// A stated precondition of an operation does not hold for the given input.
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

// Syntax or arity error in the group-construction DSL; positions are 1-based.
struct ParseError : Error {
  ParseError(const std::string& msg, int line, int column)
      : Error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line(line),
        column(column) {}
  int line;
  int column;
};

}  // namespace unitlab
