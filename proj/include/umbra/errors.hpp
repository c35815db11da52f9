#pragma once

#include <stdexcept>
#include <string>

namespace umbra {

// Base for everything thrown by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation request lands on a pole of a gamma factor, a zero divisor in an
// exact product, or a forbidden parameter point.
struct PoleError : Error {
  using Error::Error;
};

// Input outside the operation's domain (bad spacing, |argument| out of range,
// unsupported parameter combination).
struct DomainError : Error {
  using Error::Error;
};

// A power with non-integer exponent was requested for a base on the branch
// cut of the principal logarithm.
struct BranchCutError : Error {
  using Error::Error;
};

// A series or iteration failed to meet its tolerance within the term cap, or
// was classified divergent at the evaluation point.
struct ConvergenceError : Error {
  using Error::Error;
};

// Parameter combination hits a logarithmic/degenerate case of a connection
// formula (e.g. integer alpha-beta in the asymptotic Gauss branch).
struct DegenerateParameterError : Error {
  using Error::Error;
};

// Exact arithmetic requested where only floating point is possible.
struct ModeError : Error {
  using Error::Error;
};

// Adaptive quadrature exhausted its subdivision/evaluation budget. Carries
// the best estimate so far.
struct QuadratureBudgetError : Error {
  QuadratureBudgetError(const std::string& what, double estimate_, double err_)
      : Error(what), estimate(estimate_), err(err_) {}
  double estimate;
  double err;
};

// Grid has too few samples for the requested difference order.
struct InsufficientSamplesError : Error {
  using Error::Error;
};

}  // namespace umbra
