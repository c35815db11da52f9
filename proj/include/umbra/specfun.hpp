#pragma once

#include <cmath>

#include "umbra/numeric.hpp"

namespace umbra {

// True when v is an exact nonpositive integer in double representation
// (lattice ratios land exactly on integers, so == is the right test).
inline bool is_nonpos_int(double v) {
  return v <= 0.0 && v == std::nearbyint(v);
}
inline bool is_int(double v) { return v == std::nearbyint(v); }

// Principal-branch log Gamma(z); Lanczos sum, reflection for Re z < 1/2.
Complex log_gamma(Complex z);

// Real-axis log |Gamma(x)| together with the sign of Gamma(x). Returns
// {log|Gamma|, sign}; poles raise.
struct SignedLog {
  double log_abs;
  int sign;
};
// sin(pi x) with argument reduction so sign and magnitude stay accurate for
// large |x| and near-integer x.
double sin_pi(double x);

SignedLog lgamma_signed(double x);

// 1/Gamma(x): entire, exact zero at nonpositive integers.
double rgamma(double x);

// Gamma(x) on the real axis (signed); poles raise.
double gamma_real(double x);

// Upper incomplete gamma Gamma(s,x) = int_x^inf t^{s-1} e^{-t} dt, s > 0,
// x >= 0. Continued fraction for x > s+1, series complement otherwise.
double incomplete_gamma_upper(double s, double x);

// Lerch Phi(z, 1-j, 0) = sum_{k>=0} z^k k^{j-1}, j >= 1, as the closed
// rational form (Eulerian polynomial over (1-z)^j); exact for exact z.
Numeric lerch_nonpos(const Numeric& z, unsigned j);

// Continuum Airy Ai via its two-part hypergeometric expansion about 0.
double airy_ai_ref(double x);

}  // namespace umbra
