#pragma once

#include <complex>
#include <functional>

#include "umbra/errors.hpp"

namespace umbra {

// Resource limits for adaptive integration.  `abs_tol`/`rel_tol` stop the
// refinement once the summed error estimate drops below
// max(abs_tol, rel_tol * |integral|); `max_intervals` caps the number of
// adaptive subdivisions and `max_windows` the number of geometric windows
// used for semi-infinite ranges.
struct QuadratureBudget {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_intervals = 20000;
  int max_windows = 200;
};

// Adaptive Gauss-Kronrod (G7, K15) integration of a complex-valued function
// over the finite interval [lo, hi].  Throws QuadratureBudgetError when the
// interval cap is reached before the tolerance is met.
std::complex<double> integrate_finite(const std::function<std::complex<double>(double)>& f,
                                      double lo, double hi,
                                      const QuadratureBudget& budget = {});

double integrate_finite_real(const std::function<double(double)>& f,
                             double lo, double hi,
                             const QuadratureBudget& budget = {});

// Integration over [lo, +inf): geometric windows of doubling width starting
// at `first_window`, each integrated adaptively; stops when two consecutive
// windows contribute less than the tolerance.
std::complex<double> integrate_semi_infinite(const std::function<std::complex<double>(double)>& f,
                                             double lo, double first_window,
                                             const QuadratureBudget& budget = {});

double integrate_semi_infinite_real(const std::function<double(double)>& f,
                                    double lo, double first_window,
                                    const QuadratureBudget& budget = {});

}  // namespace umbra
