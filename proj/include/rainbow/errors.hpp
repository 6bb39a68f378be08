#pragma once

#include <stdexcept>
#include <string>

namespace rainbow {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input: out-of-range parameters, malformed blocks, invalid orders.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Numerical failure: non-convergence, degeneracy, inconsistency.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Fermi level cannot be resolved (ε_{L+1} - ε_L at or below tolerance).
class DegeneracyError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// A computed quantity violates a hard physical bound (e.g. ν outside [0,1]).
class ConsistencyError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class RankDeficiencyError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class PoleError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Raised when exp(-h d) or exp(h x) would leave double range.
class UnderflowGuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace rainbow
