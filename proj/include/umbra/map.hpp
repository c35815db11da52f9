#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "umbra/core.hpp"
#include "umbra/hyper.hpp"
#include "umbra/quadrature.hpp"

namespace umbra {

// Formal power series sum_n c_n t^n given through its coefficient generator.
// radius_hint, when known, is the largest spacing magnitude for which the
// off-lattice image converges (the radius of sum_n c_n n! u^n in u); spacings
// at or beyond it are rejected before any terms are summed.
struct UmbralSeries {
  std::function<Numeric(long)> coeff;
  std::optional<double> radius_hint;
};

// Continuum object x^gamma e^{lambda x} pFq(num; den; c x^k) described by its
// data: `hyper` carries the parameter lists and the coefficient c in its
// argument slot, k is the power of x inside the series argument, and (x, a)
// fix the evaluation point and lattice spacing of the discrete image.
struct LemmaInput {
  Numeric gamma_exp = Numeric(0);
  Numeric lambda_exp = Numeric(0);
  long k = 1;
  HyperSpec hyper;
  Numeric a;
  Numeric x;
};

// Discrete image of the input under t^n -> [t]^n applied through the Taylor
// series:
//   p+kFq(num..., (j + gamma - x/a)/k, j = 0..k-1; den...;
//         c (-a k / (1 + a lambda))^k)
// carrying a power prefactor a^gamma Gamma(x/a+1)/Gamma(x/a-gamma+1) when
// gamma != 0 and an exponential prefactor (1 + a lambda)^{x/a - gamma} when
// lambda != 0; the scalar prefactor of the input is preserved. Exact inputs
// produce exact parameters and argument.
// Errors: PoleError when 1 + a lambda = 0; DomainError for k < 1 or an input
// spec already carrying power/exponential prefactors.
HyperSpec umbral_hyper_map(const LemmaInput& in);

// sum_n c_n [x]^n. When x/a is a nonnegative integer the sum terminates at
// n = x/a + 1 terms and is exact for exact inputs. Off the lattice the sum is
// floating point with tail monitoring: it stops once three consecutive terms
// fall below tol * scale and raises ConvergenceError on sustained term growth
// or when the term cap (1e5) is hit first.
Numeric umbral_series_transform(const UmbralSeries& s, const Numeric& x,
                                const Numeric& a, double tol = 1e-14);

// Frequency-side description of a signal: a smooth density fhat(w), possibly
// empty, plus discrete lines mass * delta(w - w0).
struct Spectrum {
  std::function<Complex(double)> density;
  std::vector<std::pair<double, Complex>> atoms;  // (w0, mass)
};

// (1/2pi) int dw fhat(w) (1 + i w a)^{x/a}, atoms contributing
// mass/(2pi) (1 + i w0 a)^{x/a} analytically. Requires a > 0.
Complex fourier_umbral_transform(const Spectrum& fhat, double x, double a,
                                 const QuadratureBudget& budget = {});

// Image of the unit delta spike: sin((pi/2)(1 + x/a)) / (pi (a + x)), the
// lattice sampling kernel, with the removable value 1/(2a) at x = -a.
double sampling_function(double x, double a);

// The same image computed by quadrature over the compactified phase arc,
// (1/(2 pi a)) int_{-pi/2}^{pi/2} e^{i (1 + x/a) theta} dtheta; kept as an
// independent route for cross-checking the closed form.
double fourier_delta_image(double x, double a,
                           const QuadratureBudget& budget = {});

// Image of 1/(1 - t): e^{1/a} a^{t/a} Gamma(t/a + 1, 1/a). Requires a > 0
// and t/a > -1.
double rational_geom_transform(double t, double a);

}  // namespace umbra
