#include "umbra/verify.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "umbra/errors.hpp"
#include "umbra/solutions.hpp"

namespace umbra {

namespace {

double abs_value(const Numeric& v) {
  if (v.is_complex()) return std::abs(v.cplx());
  return std::abs(v.dbl());
}

SuiteResult make_result(std::string name, ResidualReport rep, double tol) {
  SuiteResult s;
  s.name = std::move(name);
  s.report = std::move(rep);
  s.tolerance = tol;
  s.pass = s.report.max_abs <= tol;
  return s;
}

// Unit-spacing oscillator track against D^2 X + X = 0; everything is exact
// rational arithmetic, so the tolerance is zero.
SuiteResult suite_oscillator() {
  const Numeric a(1);
  std::vector<Numeric> xs;
  OscillatorState s{Numeric(1), Numeric(0), Numeric(0)};
  for (long j = 0; j <= 14; ++j) {
    xs.push_back(s.X);
    s = oscillator_evolve(s, a, a);
  }
  const GridFunction g(Lattice(a), Numeric(0), std::move(xs));
  DifferenceOperatorSpec op;
  op.terms.push_back({{}, 0, 2});
  op.terms.push_back({{}, 0, 0});
  return make_result("oscillator", residual_report(op, g), 0.0);
}

// Half-integer closed form on the odd chain against its one-term recursion.
SuiteResult suite_whittaker_half() {
  const double kappa = 2.0;
  std::vector<Numeric> ys;
  for (int j = 0; j <= 20; ++j)
    ys.push_back(Numeric(
        whittaker_c1c2(kappa, {1.0, 0.0}, {0.0, 0.0}, 1.0 + 2.0 * j).real()));
  const GridFunction g(Lattice(Numeric(2)), Numeric(1), std::move(ys));
  DifferenceOperatorSpec op;
  op.terms.push_back({{}, 1, 0});
  op.terms.push_back({[kappa](const Numeric& x) {
                        const double xd = x.dbl();
                        return Numeric(-2.0 * (xd - 2.0 * kappa) / xd);
                      },
                      0, 0});
  return make_result("whittaker_half", residual_report(op, g), 1e-10);
}

SuiteResult suite_inverse_square() {
  const double kappa = 3.0 / 16.0;
  std::vector<Numeric> ys;
  for (int j = 0; j <= 19; ++j)
    ys.push_back(Numeric(
        inverse_square_closed(kappa, 1.0, {1.0, 0.0}, {0.0, 0.0}, 1.0 + j)
            .real()));
  const GridFunction g(Lattice(Numeric(1)), Numeric(1), std::move(ys));
  DifferenceOperatorSpec op;
  op.terms.push_back({{}, 1, 0});
  op.terms.push_back({[kappa](const Numeric& x) {
                        return Numeric(
                            -inverse_square_ratio(kappa, 1.0, x.dbl()));
                      },
                      0, 0});
  return make_result("inverse_square",
                     residual_report(op, g, ResidualNormalization::Relative),
                     1e-10);
}

SuiteResult suite_whittaker_general() {
  const double kappa = 0.3, mu = 0.25;
  std::vector<Numeric> ys;
  for (int j = 0; j <= 20; ++j)
    ys.push_back(Numeric(
        whittaker_a2_closed(kappa, mu, {1.0, 0.0}, {1.0, 0.0}, 1.0 + 2.0 * j)
            .real()));
  const GridFunction g(Lattice(Numeric(2)), Numeric(1), std::move(ys));
  DifferenceOperatorSpec op;
  op.terms.push_back({{}, 1, 0});
  op.terms.push_back({[kappa, mu](const Numeric& x) {
                        const double xd = x.dbl();
                        return Numeric(-2.0 * (xd + 2.0) * (xd - 2.0 * kappa) /
                                       ((xd + 1.0 + 2.0 * mu) *
                                        (xd + 1.0 - 2.0 * mu)));
                      },
                      0, 0});
  return make_result("whittaker_general",
                     residual_report(op, g, ResidualNormalization::Relative),
                     1e-10);
}

// Quadrature values against D^2 Y(x+a) = (x+a) Y(x).
SuiteResult suite_airy() {
  const double a = 0.5;
  std::vector<Numeric> ys;
  for (int j = 0; j <= 9; ++j)
    ys.push_back(Numeric(um_airy(a * j, a, AiryMethod::Quadrature)));
  const GridFunction g(Lattice(Numeric(0.5)), Numeric(0), std::move(ys));
  DifferenceOperatorSpec op;
  op.terms.push_back({{}, 1, 2});
  op.terms.push_back({[a](const Numeric& x) {
                        return Numeric(-(x.dbl() + a));
                      },
                      0, 0});
  return make_result("airy", residual_report(op, g), 1e-6);
}

// Exact lattice values against D G(x+a) = -2 (x+a) G(x), written with the
// source one site back so every reference looks forward.
SuiteResult suite_gaussian_first_order() {
  const Numeric a = Numeric::ratio(1, 2);
  std::vector<Numeric> gs;
  for (long j = 0; j <= 9; ++j)
    gs.push_back(um_gaussian_exact(a * Numeric(j), a));
  const GridFunction g(Lattice(a), Numeric(0), std::move(gs));
  DifferenceOperatorSpec op;
  op.terms.push_back({{}, 1, 1});
  op.terms.push_back({[a](const Numeric& x) { return Numeric(2) * (x + a); },
                      0, 0});
  return make_result("gaussian_first_order", residual_report(op, g), 1e-10);
}

// Two-lattice check that equal frequencies make the second differences in t
// and x coincide on the plane wave; assembled by hand since the grid is 2-D.
SuiteResult suite_plane_wave() {
  const WaveParams w{0.8, 0.8, 0.5, 0.5};
  ResidualReport rep;
  double fmax = 0.0;
  std::vector<double> raw;
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      const double t = i * w.a;
      const double x = j * w.b;
      const Complex f00 = plane_wave(w, t, x);
      fmax = std::max(fmax, std::abs(f00));
      const Complex dtt = (plane_wave(w, t + 2.0 * w.a, x) -
                           2.0 * plane_wave(w, t + w.a, x) + f00) /
                          (w.a * w.a);
      const Complex dxx = (plane_wave(w, t, x + 2.0 * w.b) -
                           2.0 * plane_wave(w, t, x + w.b) + f00) /
                          (w.b * w.b);
      raw.push_back(std::abs(dxx - dtt));
    }
  }
  rep.scale = fmax > 0.0 ? fmax : 1.0;
  rep.per_point.reserve(raw.size());
  for (std::size_t k = 0; k < raw.size(); ++k) {
    const double v = raw[k] / rep.scale;
    if (v > rep.max_abs) {
      rep.max_abs = v;
      rep.location = k;
    }
    rep.per_point.push_back(v);
  }
  return make_result("plane_wave", rep, 1e-12);
}

using SuiteFn = SuiteResult (*)();

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"oscillator", &suite_oscillator},
      {"whittaker_half", &suite_whittaker_half},
      {"inverse_square", &suite_inverse_square},
      {"whittaker_general", &suite_whittaker_general},
      {"airy", &suite_airy},
      {"gaussian_first_order", &suite_gaussian_first_order},
      {"plane_wave", &suite_plane_wave},
  };
  return table;
}

}  // namespace

long DifferenceOperatorSpec::trailing_span() const {
  long span = 0;
  for (const auto& t : terms)
    span = std::max(span, t.shift + static_cast<long>(t.order));
  return span;
}

GridFunction apply_operator(const DifferenceOperatorSpec& op,
                            const GridFunction& f) {
  if (op.terms.empty()) throw DomainError("operator has no terms");
  for (const auto& t : op.terms)
    if (t.shift < 0)
      throw DomainError("operator term shifts must be nonnegative");
  const long span = op.trailing_span();
  const long n = static_cast<long>(f.size());
  if (n <= span)
    throw DomainError("grid is too short for the operator's trailing span");
  const Numeric& a = f.lattice().spacing;
  std::vector<Numeric> out;
  out.reserve(static_cast<std::size_t>(n - span));
  for (long i = 0; i + span < n; ++i) {
    const Numeric x = f.point(static_cast<std::size_t>(i));
    Numeric acc(0);
    for (const auto& t : op.terms) {
      std::vector<Numeric> w;
      w.reserve(t.order + 1);
      for (unsigned k = 0; k <= t.order; ++k)
        w.push_back(f[static_cast<std::size_t>(i + t.shift + k)]);
      for (unsigned m = t.order; m > 0; --m)
        for (unsigned k = 0; k < m; ++k) w[k] = (w[k + 1] - w[k]) / a;
      acc += (t.coeff ? t.coeff(x) : Numeric(1)) * w[0];
    }
    out.push_back(std::move(acc));
  }
  return GridFunction(f.lattice(), f.origin(), std::move(out));
}

ResidualReport residual_report(const DifferenceOperatorSpec& op,
                               const GridFunction& f,
                               ResidualNormalization norm) {
  const GridFunction r = apply_operator(op, f);
  ResidualReport rep;
  if (norm == ResidualNormalization::Relative) {
    double m = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) m = std::max(m, abs_value(f[j]));
    rep.scale = m > 0.0 ? m : 1.0;
  }
  rep.per_point.reserve(r.size());
  for (std::size_t j = 0; j < r.size(); ++j) {
    const double v = abs_value(r[j]) / rep.scale;
    if (v > rep.max_abs) {
      rep.max_abs = v;
      rep.location = j;
    }
    rep.per_point.push_back(v);
  }
  return rep;
}

const std::vector<std::string>& residual_suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : suite_table()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<SuiteResult> residual_suite(const std::string& which) {
  std::vector<SuiteResult> out;
  for (const auto& [name, fn] : suite_table()) {
    if (which == "all" || which == name) out.push_back(fn());
  }
  if (out.empty()) {
    std::string msg = "unknown suite '" + which + "'; available: all";
    for (const auto& name : residual_suite_names()) msg += ", " + name;
    throw DomainError(msg);
  }
  return out;
}

ContinuumCheck continuum_limit_check(
    const std::function<double(double, double)>& f,
    const std::function<double(double)>& reference,
    const std::vector<double>& xs, const std::vector<double>& spacings) {
  if (xs.empty() || spacings.empty())
    throw DomainError("continuum check needs sample points and spacings");
  ContinuumCheck c;
  c.spacings = spacings;
  c.deviations.reserve(spacings.size());
  for (double a : spacings) {
    double dev = 0.0;
    for (double x : xs) dev = std::max(dev, std::abs(f(x, a) - reference(x)));
    c.deviations.push_back(dev);
  }
  c.monotone = true;
  for (std::size_t k = 1; k < c.deviations.size(); ++k)
    if (!(c.deviations[k] < c.deviations[k - 1])) c.monotone = false;
  return c;
}

}  // namespace umbra
