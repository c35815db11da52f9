#include "umbra/map.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "umbra/specfun.hpp"

namespace umbra {

namespace {
constexpr double kPi = std::numbers::pi;
}

HyperSpec umbral_hyper_map(const LemmaInput& in) {
  if (in.k < 1) throw DomainError("argument power k must be at least 1");
  if (in.hyper.prefactor_power() || in.hyper.prefactor_exponential())
    throw DomainError(
        "input series must be bare: gamma and lambda belong in LemmaInput");
  const Numeric one_plus = Numeric(1) + in.a * in.lambda_exp;
  if (one_plus.is_zero())
    throw PoleError("discrete image undefined where 1 + a*lambda vanishes");

  const Numeric ratio = in.x / in.a;
  const Numeric kk(in.k);
  std::vector<Numeric> num = in.hyper.numerator_params();
  for (long j = 0; j < in.k; ++j)
    num.push_back((Numeric(j) + in.gamma_exp - ratio) / kk);

  const Numeric base = -(in.a * kk) / one_plus;
  Numeric arg = in.hyper.argument() * base.pow_int(in.k);

  HyperSpec out(std::move(num), in.hyper.denominator_params(), std::move(arg));
  out.with_scalar(in.hyper.prefactor_scalar());
  if (!in.gamma_exp.is_zero())
    out.with_power_prefactor({in.x, in.a, in.gamma_exp});
  if (!in.lambda_exp.is_zero())
    out.with_exp_prefactor({one_plus, ratio - in.gamma_exp});
  return out;
}

Numeric umbral_series_transform(const UmbralSeries& s, const Numeric& x,
                                const Numeric& a, double tol) {
  if (!s.coeff) throw DomainError("series has no coefficient generator");
  if (a.is_complex() || a.is_zero())
    throw DomainError("spacing must be a nonzero real");
  if (x.is_complex()) throw DomainError("evaluation point must be real");

  // Lattice points terminate the sum: [x]^{N+1} carries the factor x - N a.
  const Numeric ratio = x / a;
  long lattice_n = -1;
  if (ratio.is_exact_integer()) {
    if (long v = ratio.as_long(); v >= 0) lattice_n = v;
  } else if (!ratio.is_exact()) {
    double v = ratio.dbl();
    if (v >= 0 && v == std::nearbyint(v) && v < 1e9)
      lattice_n = static_cast<long>(v);
  }
  if (lattice_n >= 0) {
    Numeric sum(0), poly(1);
    for (long n = 0; n <= lattice_n; ++n) {
      sum += s.coeff(n) * poly;
      poly *= x - Numeric(n) * a;
    }
    return sum;
  }

  if (s.radius_hint && std::abs(a.dbl()) >= *s.radius_hint)
    throw ConvergenceError(
        "off-lattice image diverges: spacing at or beyond the series' radius");

  const double xd = x.dbl();
  const double ad = a.dbl();
  const long cap = 100000;
  Complex sum(0, 0);
  double poly = 1.0;
  double scale = 1.0;
  double prev = 0.0;
  int quiet = 0, growing = 0;
  for (long n = 0; n < cap; ++n) {
    const Complex term = s.coeff(n).cplx() * poly;
    const double at = std::abs(term);
    if (!std::isfinite(at))
      throw ConvergenceError("off-lattice image diverges: term overflow");
    sum += term;
    scale = std::max(scale, std::abs(sum));
    if (at <= tol * scale) {
      if (++quiet >= 3 && n >= 4)
        return sum.imag() == 0.0 ? Numeric(sum.real()) : Numeric(sum);
    } else {
      quiet = 0;
    }
    if (n > 0 && at > prev && at > 10.0 * scale) {
      if (++growing >= 24) {
        char msg[128];
        std::snprintf(msg, sizeof msg,
                      "off-lattice image diverges: terms still growing at "
                      "n = %ld",
                      n);
        throw ConvergenceError(msg);
      }
    } else {
      growing = 0;
    }
    prev = at;
    poly *= xd - static_cast<double>(n) * ad;
  }
  throw ConvergenceError("umbral series did not settle within 100000 terms");
}

Complex fourier_umbral_transform(const Spectrum& fhat, double x, double a,
                                 const QuadratureBudget& budget) {
  if (!(a > 0)) throw DomainError("spacing must be positive");
  const double e = x / a;
  auto kernel = [a, e](double w) { return std::pow(Complex(1.0, w * a), e); };

  Complex total(0, 0);
  for (const auto& [w0, mass] : fhat.atoms)
    total += mass * kernel(w0) / (2.0 * kPi);
  if (fhat.density) {
    auto right = [&](double w) { return fhat.density(w) * kernel(w); };
    auto left = [&](double w) { return fhat.density(-w) * kernel(-w); };
    total += (integrate_semi_infinite(right, 0.0, 1.0, budget) +
              integrate_semi_infinite(left, 0.0, 1.0, budget)) /
             (2.0 * kPi);
  }
  return total;
}

double sampling_function(double x, double a) {
  if (a == 0.0) throw DomainError("spacing must be nonzero");
  // sin((pi/2)(1 + x/a)) / (pi (a + x)) = sin(pi h) / (2 pi a h) with
  // h = (1 + x/a)/2; sin_pi keeps the zeros at odd lattice points exact.
  const double h = 0.5 * (1.0 + x / a);
  if (std::abs(h) < 1e-9) {
    const double y = kPi * h;
    return (1.0 - y * y / 6.0) / (2.0 * a);
  }
  return sin_pi(h) / (2.0 * kPi * a * h);
}

double fourier_delta_image(double x, double a, const QuadratureBudget& budget) {
  if (a == 0.0) throw DomainError("spacing must be nonzero");
  const double e = 1.0 + x / a;
  auto f = [e](double th) {
    return Complex(std::cos(e * th), std::sin(e * th));
  };
  const Complex arc = integrate_finite(f, -kPi / 2.0, kPi / 2.0, budget);
  return arc.real() / (2.0 * kPi * a);
}

double rational_geom_transform(double t, double a) {
  if (!(a > 0)) throw DomainError("spacing must be positive");
  const double s = t / a + 1.0;
  if (!(s > 0))
    throw DomainError("image of the geometric sum requires t/a > -1");
  return std::exp(1.0 / a) * std::pow(a, t / a) *
         incomplete_gamma_upper(s, 1.0 / a);
}

}  // namespace umbra
