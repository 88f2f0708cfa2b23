#pragma once

#include <stdexcept>
#include <string>

namespace knotkit {

// Base of every error raised by the library. The CLI maps the subclasses
// onto its exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (polynomials, presentations, fronts, PD codes).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed input that violates a documented precondition or invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An enumeration or recursion would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Exact integer arithmetic left the range of the coefficient type.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace knotkit
