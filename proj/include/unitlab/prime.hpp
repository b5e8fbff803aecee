#pragma once

#include <string>

#include "unitlab/errors.hpp"

namespace unitlab {

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// The characteristic of the coefficient field. Primality is verified at
// construction; 2 is admitted only so that negative-control groups can exist,
// and every operation that needs p > 2 must call require_odd().
class Prime {
 public:
  explicit Prime(int value) : value_(value) {
    if (!is_prime(value)) throw PreconditionError(std::to_string(value) + " is not prime");
  }

  int value() const { return value_; }
  bool odd() const { return value_ != 2; }

  void require_odd(const std::string& context) const {
    if (value_ == 2) throw PrimeTwoError(context + " requires p > 2");
  }

  friend bool operator==(Prime a, Prime b) { return a.value_ == b.value_; }
  friend bool operator!=(Prime a, Prime b) { return a.value_ != b.value_; }

 private:
  int value_;
};

}  // namespace unitlab
