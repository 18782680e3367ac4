#pragma once

#include <stdexcept>
#include <string>

namespace spectra {

/// Argument outside the mathematical domain of an operation (r <= 0, n <= l, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Invalid solver or grid configuration (too few points, missing r_max, ...).
class ConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested potential has no ground state (even-order truncation).
class UnboundedPotentialError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Bisection did not shrink its bracket; usually means NaN in the operator.
class IterationLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shooting bracket does not isolate the requested eigenvalue.
class BracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Linear solve stayed singular after all re-shift attempts.
class SingularSolveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spectra
