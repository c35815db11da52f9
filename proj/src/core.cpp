#include "umbra/core.hpp"

#include <cmath>
#include <string>

#include "umbra/specfun.hpp"

namespace umbra {

Numeric falling_factorial(const Numeric& t, const Numeric& a, unsigned n) {
  Numeric prod(1);
  Numeric factor = t;
  for (unsigned k = 0; k < n; ++k) {
    prod *= factor;
    factor -= a;
  }
  return prod;
}

Numeric rising_factorial_inverse(const Numeric& t, const Numeric& a,
                                 unsigned n) {
  if (n == 0) return Numeric(1);
  Numeric prod(1);
  Numeric factor = t;
  for (unsigned j = 1; j <= n; ++j) {
    factor += a;
    if (factor.is_zero())
      throw PoleError("rising factorial inverse: zero factor at j = " +
                      std::to_string(j));
    prod *= factor;
  }
  return Numeric(1) / prod;
}

double umbral_power_gamma(double x, double a, double gamma_exp) {
  if (a == 0) throw DomainError("lattice spacing must be nonzero");
  double u = x / a;
  double num_arg = u + 1.0;
  double den_arg = u - gamma_exp + 1.0;

  double power;  // a^gamma
  if (is_int(gamma_exp)) {
    power = std::pow(a, gamma_exp);
  } else if (a > 0) {
    power = std::pow(a, gamma_exp);
  } else {
    throw BranchCutError("negative spacing with non-integer power exponent");
  }

  bool num_pole = is_nonpos_int(num_arg);
  bool den_pole = is_nonpos_int(den_arg);
  if (num_pole && den_pole) {
    // gamma_exp is an integer here; the pole ratio is finite:
    // Gamma(u+1)/Gamma(u-g+1) -> (-1)^g Gamma(g-u)/Gamma(-u).
    double lg = lgamma_signed(gamma_exp - u).log_abs - lgamma_signed(-u).log_abs;
    double sign = (static_cast<long long>(gamma_exp) % 2 == 0) ? 1.0 : -1.0;
    return power * sign * std::exp(lg);
  }
  if (den_pole) return 0.0;
  if (num_pole)
    throw PoleError("umbral power: gamma pole at x/a + 1 = " +
                    std::to_string(num_arg));

  SignedLog n = lgamma_signed(num_arg);
  SignedLog d = lgamma_signed(den_arg);
  return power * n.sign * d.sign * std::exp(n.log_abs - d.log_abs);
}

namespace detail {

RatComplex ratc_pow(RatComplex base, long n) {
  if (n < 0) {
    Rational norm = base.re * base.re + base.im * base.im;
    if (sgn(norm) == 0) throw PoleError("inverting exact complex zero");
    base = {Rational(base.re / norm), Rational(-base.im / norm)};
    n = -n;
  }
  RatComplex acc{Rational(1), Rational(0)};
  while (n > 0) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

// Integer power of a complex double by squaring: keeps Gaussian-integer
// cases like (1+i)^4 = -4 exact.
Complex cplx_pow_int(Complex base, long n) {
  if (n < 0) {
    base = Complex(1, 0) / base;
    n = -n;
  }
  Complex acc(1, 0);
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

}  // namespace detail

namespace {

// Exact integer t/a if representable, else nullopt-like flag via bool.
bool exact_ratio_integer(const Numeric& t, const Numeric& a, long* out) {
  if (!t.is_exact() || !a.is_exact()) return false;
  Numeric r = t / a;
  if (!r.is_exact_integer()) return false;
  *out = r.as_long();
  return true;
}

}  // namespace

Numeric umbral_exp(const Numeric& lambda, const Numeric& t, const Numeric& a) {
  if (a.is_zero()) throw DomainError("lattice spacing must be nonzero");

  long n = 0;
  bool lattice_int = exact_ratio_integer(t, a, &n);

  if (lambda.is_complex()) {
    Complex base = Complex(1, 0) + lambda.cplx() * a.cplx();
    if (lattice_int) return Numeric(detail::cplx_pow_int(base, n));
    double ratio = (t / a).dbl();
    if (is_int(ratio))
      return Numeric(detail::cplx_pow_int(base, static_cast<long>(ratio)));
    if (base == Complex(0, 0))
      throw BranchCutError("umbral exponential: zero base, non-integer t/a");
    return Numeric(std::pow(base, Complex(ratio, 0)));
  }

  if (lattice_int && lambda.is_exact()) {
    Numeric base = Numeric(1) + lambda * a;
    if (base.is_zero()) {
      if (n > 0) return Numeric(0);
      if (n == 0) return Numeric(1);
      throw PoleError("umbral exponential: zero base, negative t/a");
    }
    return base.pow_int(n);
  }

  double base = 1.0 + lambda.dbl() * a.dbl();
  double ratio = (t / a).dbl();
  if (base > 0) return Numeric(std::pow(base, ratio));
  if (is_int(ratio)) {
    if (base == 0)
      return ratio > 0 ? Numeric(0.0)
                       : (ratio == 0 ? Numeric(1.0)
                                     : throw PoleError(
                                           "umbral exponential: zero base, "
                                           "negative t/a"));
    return Numeric(detail::cplx_pow_int(Complex(base, 0),
                                        static_cast<long>(ratio))
                       .real());
  }
  throw BranchCutError(
      "umbral exponential: base 1+lambda*a on the principal branch cut for "
      "non-integer t/a");
}

std::pair<Numeric, Numeric> umbral_trig(const Numeric& t, const Numeric& a) {
  if (a.is_complex() || t.is_complex())
    throw DomainError("umbral trig expects real t, a");
  long n = 0;
  if (exact_ratio_integer(t, a, &n)) {
    detail::RatComplex z =
        detail::ratc_pow({Rational(1), a.rat()}, n);  // (1+ia)^n
    return {Numeric(z.im), Numeric(z.re)};
  }
  double ad = a.dbl(), td = t.dbl();
  double ratio = td / ad;
  double mag = std::pow(1.0 + ad * ad, 0.5 * ratio);
  double phase = ratio * std::atan(ad);
  return {Numeric(mag * std::sin(phase)), Numeric(mag * std::cos(phase))};
}

Numeric numeric_pow(const Numeric& base, const Numeric& exponent) {
  if (base == Numeric(1)) return Numeric(1);
  bool int_exp = false;
  long k = 0;
  if (exponent.is_exact() && exponent.is_exact_integer()) {
    int_exp = true;
    k = exponent.as_long();
  } else if (exponent.is_double() && is_int(exponent.dbl())) {
    int_exp = true;
    k = static_cast<long>(std::llround(exponent.dbl()));
  }
  if (int_exp) {
    if (base.is_zero()) {
      if (k > 0) return Numeric(0);
      if (k == 0) return Numeric(1);
      throw PoleError("zero base raised to a negative power");
    }
    if (base.is_exact()) return base.pow_int(k);
    if (base.is_complex()) return Numeric(detail::cplx_pow_int(base.cplx(), k));
    return Numeric(std::pow(base.dbl(), static_cast<double>(k)));
  }
  if (base.is_complex() || exponent.is_complex())
    return Numeric(std::pow(base.cplx(), exponent.cplx()));
  const double b = base.dbl();
  const double e = exponent.dbl();
  if (b > 0.0) return Numeric(std::pow(b, e));
  if (b == 0.0) {
    if (e > 0.0) return Numeric(0.0);
    throw PoleError("zero base raised to a negative power");
  }
  return Numeric(std::pow(Complex(b, 0.0), Complex(e, 0.0)));
}

GridFunction forward_difference(const GridFunction& F, unsigned order) {
  if (order == 0) return F;
  if (F.size() < order + 1)
    throw InsufficientSamplesError(
        "forward difference of order " + std::to_string(order) + " needs " +
        std::to_string(order + 1) + " samples, have " +
        std::to_string(F.size()));
  std::vector<Numeric> cur = F.samples();
  const Numeric& a = F.lattice().spacing;
  for (unsigned pass = 0; pass < order; ++pass) {
    std::vector<Numeric> next(cur.size() - 1);
    for (std::size_t j = 0; j + 1 < cur.size(); ++j)
      next[j] = (cur[j + 1] - cur[j]) / a;
    cur = std::move(next);
  }
  return GridFunction(F.lattice(), F.origin(), std::move(cur));
}

}  // namespace umbra
