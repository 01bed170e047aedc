#pragma once

#include <stdexcept>
#include <string>

namespace jfunc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad selector string, dimension mismatch, negative
/// coefficient where a positive-cone element is required, method/type mismatch.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Division by zero, expansion of a function with a pole at q = 0, etc.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A proved identity failed to hold. Never expected; indicates either a bug
/// or a counterexample to a theorem.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

/// (q)_alpha^2 * J_alpha has a nonzero remainder.
class NotPolynomial : public TheoremViolation {
 public:
  using TheoremViolation::TheoremViolation;
};

/// (q)_alpha^2 * J_alpha is a polynomial over Q but not over Z.
class NonIntegerCoefficient : public TheoremViolation {
 public:
  using TheoremViolation::TheoremViolation;
};

/// Degree or coefficient budget exceeded.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Structural failure of an internal invariant that is not a published
/// theorem (vanishing Toda coefficient, negative monopole charge).
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace jfunc
