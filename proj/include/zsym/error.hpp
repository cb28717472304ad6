#pragma once

#include <stdexcept>
#include <string>

namespace zsym {

// Base of every error thrown by the library. Callers that only care about
// "numerical evaluation failed" can catch this one.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Evaluation at a pole (Γ at a nonpositive integer, ζ at 1).
class PoleError : public Error {
 public:
  using Error::Error;
};

// Argument outside the region where an operation is defined or claimed.
class DomainError : public Error {
 public:
  using Error::Error;
};

// NaN or infinity passed where a finite value is required.
class NonfiniteError : public Error {
 public:
  using Error::Error;
};

// Iterative scheme hit its iteration cap.
class NonconvergenceError : public Error {
 public:
  using Error::Error;
};

// Requested accuracy cannot be met with the given configuration.
class AccuracyError : public Error {
 public:
  using Error::Error;
};

// Exact integer arithmetic left the 128-bit range.
class OverflowError : public Error {
 public:
  OverflowError(std::string const& what, long long index)
      : Error(what), index_(index) {}
  long long index() const { return index_; }

 private:
  long long index_;
};

// Bisection bracket whose endpoint signs do not straddle zero.
class BracketError : public Error {
 public:
  using Error::Error;
};

}  // namespace zsym
