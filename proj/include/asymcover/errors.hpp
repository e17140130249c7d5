#pragma once

#include <stdexcept>
#include <string>

namespace asymcover {

// Bad argument: out-of-range dimension, coordinate, radius or method input.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is valid in principle but above a memory or enumeration cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A solver ran out of its node or time budget before proving optimality.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inconsistent data, e.g. lower > upper in a bounds grid.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace asymcover
