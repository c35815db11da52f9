#include "umbra/solutions.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "umbra/hyper.hpp"
#include "umbra/map.hpp"
#include "umbra/specfun.hpp"

namespace umbra {

namespace {

constexpr double kPi = std::numbers::pi;
// Ai(0) and -Ai'(0): 3^{-2/3}/Gamma(2/3) and 3^{-1/3}/Gamma(1/3).
constexpr double kAiZero = 0.35502805388781723926;
constexpr double kAiSlopeZero = 0.25881940379280679841;

double sign_of(double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); }

bool numeric_finite(const Numeric& v) {
  if (v.is_exact()) return true;
  if (v.is_double()) return std::isfinite(v.dbl());
  const Complex z = v.cplx();
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Gamma(p)/Gamma(q) with pole bookkeeping: matched poles give the finite
// residue-ratio limit (-1)^{n-m} m!/n!, a lone numerator pole a signed
// infinity, a lone denominator pole an exact zero.
double gamma_ratio(double p, double q) {
  const bool pp = is_nonpos_int(p);
  const bool qp = is_nonpos_int(q);
  if (pp && qp) {
    const long n = std::lround(-p), m = std::lround(-q);
    const double mag = std::exp(std::lgamma(m + 1.0) - std::lgamma(n + 1.0));
    return ((n - m) % 2 != 0) ? -mag : mag;
  }
  if (pp) {
    const long n = std::lround(-p);
    const double s = (n % 2 != 0 ? -1.0 : 1.0) * sign_of(rgamma(q));
    return s * std::numeric_limits<double>::infinity();
  }
  if (qp) return 0.0;
  const SignedLog lp = lgamma_signed(p);
  const SignedLog lq = lgamma_signed(q);
  return lp.sign * lq.sign * std::exp(lp.log_abs - lq.log_abs);
}

// c * f where f may be a signed infinity: drops the 0 * inf NaNs so a pole
// stays visible as a clean signed infinite component.
Complex scale_flagged(const Complex& c, double f) {
  if (!std::isinf(f)) return c * f;
  double re = c.real() * f;
  double im = c.imag() * f;
  if (std::isnan(re)) re = 0.0;
  if (std::isnan(im)) im = 0.0;
  return {re, im};
}

// Reciprocal gamma for complex arguments; real arguments reuse the entire
// real-axis routine so its exact zeros survive.
Complex rgamma_c(const Complex& z) {
  if (z.imag() == 0.0) return Complex(rgamma(z.real()), 0.0);
  return std::exp(-log_gamma(z));
}

double asinc(double v) { return v == 0.0 ? 1.0 : std::asin(v) / v; }
double atanc(double v) { return v == 0.0 ? 1.0 : std::atan(v) / v; }

double softplus(double v) {
  return v > 30.0 ? v + std::exp(-v) : std::log1p(std::exp(v));
}
double sigmoid(double v) {
  return v >= 0.0 ? 1.0 / (1.0 + std::exp(-v))
                  : std::exp(v) / (1.0 + std::exp(v));
}

void toda_check(const TodaParams& p) {
  if (!(p.alpha > 0.0))
    throw DomainError("soliton amplitude alpha must be positive");
  if (p.beta == 0.0) throw DomainError("soliton width beta must be nonzero");
}

}  // namespace

// ---------------------------------------------------------------------------
// Oscillator
// ---------------------------------------------------------------------------

OscillatorState oscillator_evolve(const OscillatorState& s, const Numeric& dt,
                                  const Numeric& a) {
  const auto [sn, cs] = umbral_trig(dt, a);
  return {s.X * cs + s.P * sn, s.P * cs - s.X * sn, s.t + dt};
}

std::pair<double, double> oscillator_spiral(double x0, double p0, double t,
                                            double a) {
  const double w = oscillator_frequency(a);
  const double r =
      a == 0.0 ? 1.0 : std::pow(1.0 + a * a, t / (2.0 * a));
  const double c = std::cos(w * t);
  const double s = std::sin(w * t);
  return {r * (x0 * c + p0 * s), r * (p0 * c - x0 * s)};
}

double oscillator_frequency(double a) {
  return a == 0.0 ? 1.0 : std::atan(a) / a;
}

Numeric oscillator_energy(const OscillatorState& s, const Numeric& a) {
  const Numeric norm = Numeric(1) + a * a;
  const Numeric steps = s.t / a;
  Numeric scale;
  if (steps.is_exact_integer())
    scale = norm.pow_int(-steps.as_long());
  else
    scale = numeric_pow(norm, -steps);
  return (s.X * s.X + s.P * s.P) * scale / Numeric(2);
}

// ---------------------------------------------------------------------------
// One-term recursions
// ---------------------------------------------------------------------------

GridFunction first_order_iterate(
    const std::function<Numeric(const Numeric&)>& ratio, const Numeric& x0,
    const Numeric& y0, long steps, const Numeric& stride) {
  if (!ratio) throw DomainError("recursion has no ratio function");
  if (steps < 0) throw DomainError("step count must be nonnegative");
  std::vector<Numeric> samples;
  samples.reserve(static_cast<std::size_t>(steps) + 1);
  samples.push_back(y0);
  Numeric x = x0;
  Numeric y = y0;
  for (long j = 0; j < steps; ++j) {
    Numeric r;
    try {
      r = ratio(x);
    } catch (const PoleError& e) {
      char msg[192];
      std::snprintf(msg, sizeof msg,
                    "recursion ratio pole at step %ld (x = %.17g): %s", j,
                    x.dbl(), e.what());
      throw PoleError(msg);
    }
    if (!numeric_finite(r)) {
      char msg[128];
      std::snprintf(msg, sizeof msg,
                    "recursion ratio not finite at step %ld (x = %.17g)", j,
                    x.dbl());
      throw PoleError(msg);
    }
    y = y * r;
    x += stride;
    samples.push_back(y);
  }
  return GridFunction(Lattice(stride), x0, std::move(samples));
}

// ---------------------------------------------------------------------------
// Spacing-2 closed forms
// ---------------------------------------------------------------------------

Complex whittaker_c1c2(double kappa, Complex c1, Complex c2, double x) {
  const double h = 0.5 * x;
  const double p2 = std::pow(2.0, h);
  Complex total(0.0, 0.0);
  if (c1 != Complex(0.0, 0.0))
    total += scale_flagged(c1, p2 * gamma_ratio(h - kappa, h));
  if (c2 != Complex(0.0, 0.0)) {
    // principal (-2)^{x/2} = 2^{x/2} e^{i pi x/2}
    const Complex rot(sin_pi(h + 0.5), sin_pi(h));
    total += c2 * rot * (p2 * rgamma(h) * rgamma(1.0 - h + kappa));
  }
  return total;
}

Complex whittaker_a2_closed(double kappa, double mu, Complex c1, Complex c2,
                            double x) {
  const double h = 0.5 * x;
  const double p2 = std::pow(2.0, h);
  // Forming the offsets first keeps the mu = 1/2 arguments bitwise equal to
  // the half-integer form's, so that case reduces literally to it.
  const double sp = 0.5 + mu;
  const double sm = 0.5 - mu;
  Complex total(0.0, 0.0);
  if (c1 != Complex(0.0, 0.0)) {
    const double f = p2 * gamma_ratio(1.0 + h, h + sp) *
                     gamma_ratio(h - kappa, h + sm);
    total += scale_flagged(c1, f);
  }
  if (c2 != Complex(0.0, 0.0)) {
    const double f = p2 * rgamma(h + sp) * rgamma(h + sm) * rgamma(-h) *
                     rgamma(1.0 + kappa - h);
    total += c2 * f;
  }
  return total;
}

std::pair<Complex, Complex> whittaker_constants(double kappa,
                                                Complex y_at_2p2kappa,
                                                Complex y_at_2) {
  if (!(kappa > 0.0) || !(kappa < 1.0))
    throw DomainError("constant recovery is valid for 0 < kappa < 1");
  const Complex c1 =
      gamma_real(1.0 + kappa) * std::pow(2.0, -1.0 - kappa) * y_at_2p2kappa;
  const Complex c2 =
      (kPi / sin_pi(kappa)) * c1 - 0.5 * gamma_real(kappa) * y_at_2;
  return {c1, c2};
}

// ---------------------------------------------------------------------------
// Inverse-square closed form
// ---------------------------------------------------------------------------

double inverse_square_ratio(double kappa, double a, double x) {
  if (a == 0.0) throw DomainError("spacing must be nonzero");
  const double u = x / a;
  const double den = u * u + u + kappa;
  if (den == 0.0)
    throw PoleError("recursion ratio pole: (x/a + s+)(x/a + s-) vanishes");
  return 2.0 * u * (1.0 + u) / den;
}

Complex inverse_square_closed(double kappa, double a, Complex c1, Complex c2,
                              double x) {
  if (a == 0.0) throw DomainError("spacing must be nonzero");
  const double u = x / a;
  const Complex root = std::sqrt(Complex(1.0 - 4.0 * kappa, 0.0));
  const Complex sp = 0.5 * (Complex(1.0, 0.0) + root);
  const Complex sm = 0.5 * (Complex(1.0, 0.0) - root);
  const Complex outer =
      std::pow(2.0, u) * rgamma_c(u + sp) * rgamma_c(u + sm);
  Complex total(0.0, 0.0);
  if (c1 != Complex(0.0, 0.0)) {
    // Gamma(1+u) Gamma(u): signed infinity at nonpositive integer u.
    double logmag = 0.0;
    double sign = 1.0;
    bool infinite = false;
    for (double v : {1.0 + u, u}) {
      if (is_nonpos_int(v)) {
        infinite = true;
        sign *= (std::lround(-v) % 2 != 0) ? -1.0 : 1.0;
      } else {
        const SignedLog l = lgamma_signed(v);
        sign *= l.sign;
        logmag += l.log_abs;
      }
    }
    if (infinite)
      total += scale_flagged(c1 * outer,
                             sign * std::numeric_limits<double>::infinity());
    else
      total += c1 * outer * (sign * std::exp(logmag));
  }
  if (c2 != Complex(0.0, 0.0))
    total += c2 * outer * (rgamma(-u) * rgamma(1.0 - u));
  return total;
}

// ---------------------------------------------------------------------------
// Whittaker-M interpolation
// ---------------------------------------------------------------------------

double um_whittaker_m(double kappa, double mu, double x, double a) {
  if (a == 0.0) throw DomainError("spacing must be nonzero");
  if (a == 2.0)
    throw DomainError(
        "spacing 2 is the pure-recursion point: the interpolation argument "
        "diverges there");
  if (a > 2.0)
    throw DomainError(
        "spacing beyond 2 puts the exponential prefactor on a negative base; "
        "the interpolation is defined for spacing below 2");
  const double z = 2.0 * a / (a - 2.0);
  const double f =
      gauss_2f1_ext(mu + 0.5 - kappa, mu + 0.5 - x / a, 2.0 * mu + 1.0, z);
  const double pre = umbral_power_gamma(x, a, mu + 0.5);
  if (pre == 0.0) return 0.0;
  return pre * std::pow(1.0 - 0.5 * a, x / a - mu - 0.5) * f;
}

// ---------------------------------------------------------------------------
// Discrete Airy
// ---------------------------------------------------------------------------

std::pair<Numeric, Numeric> um_airy_series_components(const Numeric& x,
                                                      const Numeric& a) {
  if (x.is_complex() || a.is_complex())
    throw DomainError("series components need real x and a");
  const Numeric r = x / a;
  long n = -1;
  if (r.is_exact_integer()) {
    n = r.as_long();
  } else if (!r.is_exact()) {
    const double v = r.dbl();
    if (v == std::nearbyint(v) && std::abs(v) < 1e9)
      n = static_cast<long>(std::lround(v));
  }
  if (n < 0)
    throw DomainError("series components exist on the lattice x = N a, N >= 0");
  const EvalMode mode =
      (x.is_exact() && a.is_exact()) ? EvalMode::Exact : EvalMode::Float;

  LemmaInput first{.k = 3,
                   .hyper = HyperSpec({}, {Numeric::ratio(2, 3)},
                                      Numeric::ratio(1, 9)),
                   .a = a,
                   .x = x};
  const Numeric t1 = pfq_eval(umbral_hyper_map(first), mode);
  if (n == 0) return {t1, Numeric(0)};

  LemmaInput second{.gamma_exp = Numeric(1),
                    .k = 3,
                    .hyper = HyperSpec({}, {Numeric::ratio(4, 3)},
                                       Numeric::ratio(1, 9)),
                    .a = a,
                    .x = x};
  const Numeric t2 = pfq_eval(umbral_hyper_map(second), mode);
  return {t1, t2};
}

double um_airy(double x, double a, AiryMethod method,
               const QuadratureBudget& budget) {
  if (a == 0.0) throw DomainError("spacing must be nonzero");
  if (method == AiryMethod::Quadrature) {
    // Rotate the ray by pi/6: the cubic phase becomes e^{-u^3/3} and the
    // binomial base 1 + u a e^{2 i pi/3} stays off the negative real axis
    // for either sign of a.
    const double e = x / a;
    const Complex rot = std::polar(1.0, kPi / 6.0);
    const Complex dir = std::polar(1.0, 2.0 * kPi / 3.0);
    auto f = [a, e, dir](double u) {
      return std::exp(-u * u * u / 3.0) * std::pow(1.0 + u * a * dir, e);
    };
    const Complex val = rot * integrate_semi_infinite(f, 0.0, 1.0, budget);
    return val.real() / kPi;
  }
  if (a < 0.0)
    throw DomainError("series route needs positive spacing; use quadrature");
  const double r = x / a;
  if (!(r >= 0.0) || r != std::nearbyint(r) || r > 1e9)
    throw DomainError("series route needs a lattice point x = N a, N >= 0");
  const auto [t1, t2] = um_airy_series_components(Numeric(x), Numeric(a));
  return kAiZero * t1.dbl() - kAiSlopeZero * t2.dbl();
}

// ---------------------------------------------------------------------------
// Discrete Gaussian
// ---------------------------------------------------------------------------

Numeric um_gaussian_exact(const Numeric& x, const Numeric& a) {
  LemmaInput in{.k = 2, .hyper = HyperSpec({}, {}, Numeric(-1)), .a = a, .x = x};
  return pfq_eval(umbral_hyper_map(in), EvalMode::Exact);
}

double um_gaussian(double x, double a, GaussianMethod method) {
  if (method == GaussianMethod::Series) {
    LemmaInput in{.k = 2,
                  .hyper = HyperSpec({}, {}, Numeric(-1)),
                  .a = Numeric(a),
                  .x = Numeric(x)};
    return pfq_eval(umbral_hyper_map(in), EvalMode::Float).dbl();
  }
  if (!(a > 0.0))
    throw DomainError("the confluent-ratio route needs positive spacing");
  const double r = x / a;
  return std::pow(2.0 * a, r - 1.0) *
         tricomi_u(0.5 * (1.0 - r), 1.5, 1.0 / (4.0 * a * a));
}

// ---------------------------------------------------------------------------
// Plane waves
// ---------------------------------------------------------------------------

Complex plane_wave(const WaveParams& w, double t, double x) {
  const Numeric time_part =
      umbral_exp(Numeric(Complex(0.0, w.omega)), Numeric(t), Numeric(w.a));
  const Numeric space_part =
      umbral_exp(Numeric(Complex(0.0, -w.k)), Numeric(x), Numeric(w.b));
  return time_part.cplx() * space_part.cplx();
}

double phase_velocity(const WaveParams& w, PhaseConvention c) {
  if (w.k == 0.0) throw DomainError("phase velocity needs k != 0");
  if (c == PhaseConvention::ArcSin) {
    if (std::abs(w.a) > 1.0 || std::abs(w.b) > 1.0)
      throw DomainError(
          "arcsine convention needs |a| <= 1 and |b| <= 1; use the arctan "
          "variant beyond that");
    return (w.omega / w.k) * asinc(w.b) / asinc(w.a);
  }
  return (w.omega / w.k) * atanc(w.b) / atanc(w.a);
}

double refraction_index(const WaveParams& w, PhaseConvention c) {
  if (c == PhaseConvention::ArcSin) {
    if (std::abs(w.a) > 1.0 || std::abs(w.b) > 1.0)
      throw DomainError(
          "arcsine convention needs |a| <= 1 and |b| <= 1; use the arctan "
          "variant beyond that");
    return asinc(w.a) / asinc(w.b);
  }
  return atanc(w.a) / atanc(w.b);
}

// ---------------------------------------------------------------------------
// Toda soliton
// ---------------------------------------------------------------------------

double TodaParams::gamma() const {
  return (branch < 0 ? -2.0 : 2.0) * std::sinh(beta / 2.0);
}

double TodaParams::velocity() const { return gamma() / beta; }

std::pair<double, double> toda_continuum(double n, double t,
                                         const TodaParams& p) {
  toda_check(p);
  const double g = p.gamma();
  const double big = std::log(p.alpha) - p.beta * n + g * t;
  const double q = p.q0 + softplus(big) - softplus(big - p.beta);
  const double pd = g * (sigmoid(big) - sigmoid(big - p.beta));
  return {q, pd};
}

namespace {

double toda_z(double n, const TodaParams& p, TodaDomain dom) {
  const double z = -p.alpha * std::exp(-p.beta * n);
  if (dom == TodaDomain::SeriesDisc && !(std::abs(z) < 1.0))
    throw DomainError(
        "umbral series diverges at this site: |alpha e^{-beta n}| >= 1 "
        "(move to larger n or use the rational continuation)");
  return z;
}

}  // namespace

double toda_umbral_q(double n, long m, double a, const TodaParams& p,
                     TodaDomain dom) {
  toda_check(p);
  if (m < 0) throw DomainError("time index m must be nonnegative");
  const double z = toda_z(n, p, dom);
  const double zb = z * std::exp(-p.beta);
  const double g = p.gamma();
  double sum = toda_continuum(n, 0.0, p).first;
  double pw = 1.0;
  double binom = 1.0;
  for (long j = 1; j <= m; ++j) {
    pw *= g * a;
    binom *= static_cast<double>(m - j + 1) / static_cast<double>(j);
    sum += pw * binom *
           (lerch_nonpos(Numeric(zb), static_cast<unsigned>(j)).dbl() -
            lerch_nonpos(Numeric(z), static_cast<unsigned>(j)).dbl());
  }
  return sum;
}

double toda_umbral_p(double n, long m, double a, const TodaParams& p,
                     TodaDomain dom) {
  toda_check(p);
  if (m < 0) throw DomainError("time index m must be nonnegative");
  const double z = toda_z(n, p, dom);
  const double zb = z * std::exp(-p.beta);
  const double g = p.gamma();
  double sum = 0.0;
  double pw = 1.0;
  double binom = 1.0;
  for (long j = 0; j <= m; ++j) {
    if (j > 0) {
      pw *= g * a;
      binom *= static_cast<double>(m - j + 1) / static_cast<double>(j);
    }
    sum += pw * binom *
           (lerch_nonpos(Numeric(zb), static_cast<unsigned>(j + 1)).dbl() -
            lerch_nonpos(Numeric(z), static_cast<unsigned>(j + 1)).dbl());
  }
  return g * sum;
}

}  // namespace umbra
