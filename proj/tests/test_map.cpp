#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "umbra/core.hpp"
#include "umbra/errors.hpp"
#include "umbra/map.hpp"

using umbra::Complex;
using umbra::GridFunction;
using umbra::HyperSpec;
using umbra::Lattice;
using umbra::LemmaInput;
using umbra::Numeric;
using umbra::Spectrum;
using umbra::UmbralSeries;

namespace {

const double kPi = 3.14159265358979323846;

// Coefficients of 1F1(alpha; beta; t): (alpha)_n / ((beta)_n n!), exact.
Numeric kummer_coeff(const Numeric& alpha, const Numeric& beta, long n) {
  Numeric c(1);
  for (long i = 0; i < n; ++i)
    c *= (alpha + Numeric(i)) / ((beta + Numeric(i)) * Numeric(i + 1));
  return c;
}

bool params_equal(const std::vector<Numeric>& got,
                  const std::vector<Numeric>& want) {
  if (got.size() != want.size()) return false;
  for (std::size_t i = 0; i < got.size(); ++i)
    if (got[i] != want[i]) return false;
  return true;
}

}  // namespace

TEST_CASE("k=1 map appends -x/a and flips the argument sign by a") {
  // 1F1(alpha; beta; t) -> 2F1(alpha, -x/a; beta; -a)
  const Numeric alpha = Numeric::ratio(1, 2);
  const Numeric beta = Numeric::ratio(5, 4);
  LemmaInput in{.hyper = HyperSpec({alpha}, {beta}, Numeric(1)),
                .a = Numeric::ratio(1, 4),
                .x = Numeric(2)};
  const HyperSpec out = umbra::umbral_hyper_map(in);
  CHECK(params_equal(out.numerator_params(), {alpha, Numeric(-8)}));
  CHECK(params_equal(out.denominator_params(), {beta}));
  CHECK(out.argument() == -Numeric::ratio(1, 4));
  CHECK_FALSE(out.prefactor_power().has_value());
  CHECK_FALSE(out.prefactor_exponential().has_value());
  CHECK(out.prefactor_scalar() == Numeric(1));
}

TEST_CASE("k=2 map of the squared-argument exponential") {
  // e^{-t^2} = 0F0(;; -t^2) -> 2F0(-x/(2a), (1-x/a)/2 ;; -4a^2)
  for (long den : {1L, 2L}) {
    const Numeric a = Numeric::ratio(1, den);
    const Numeric x = Numeric(2);
    LemmaInput in{.k = 2,
                  .hyper = HyperSpec({}, {}, Numeric(-1)),
                  .a = a,
                  .x = x};
    const HyperSpec out = umbra::umbral_hyper_map(in);
    const Numeric ratio = x / a;
    CHECK(params_equal(out.numerator_params(),
                       {-ratio / Numeric(2),
                        (Numeric(1) - ratio) / Numeric(2)}));
    CHECK(out.denominator_params().empty());
    CHECK(out.argument() == Numeric(-4) * a * a);
  }
}

TEST_CASE("k=3 map of the two Airy-type series") {
  // 0F1(; 2/3; t^3/9) -> 3F1((-x/a)/3, (1-x/a)/3, (2-x/a)/3; 2/3; -3a^3)
  const Numeric a = Numeric::ratio(1, 2);
  const Numeric x = Numeric(2);
  LemmaInput first{.k = 3,
                   .hyper = HyperSpec({}, {Numeric::ratio(2, 3)},
                                      Numeric::ratio(1, 9)),
                   .a = a,
                   .x = x};
  const HyperSpec f = umbra::umbral_hyper_map(first);
  CHECK(params_equal(f.numerator_params(),
                     {Numeric::ratio(-4, 3), Numeric(-1),
                      Numeric::ratio(-2, 3)}));
  CHECK(f.argument() == Numeric::ratio(-3, 8));
  CHECK_FALSE(f.prefactor_power().has_value());

  // t * 0F1(; 4/3; t^3/9) shifts every new parameter by 1/3 and carries the
  // interpolated first power as a prefactor.
  LemmaInput second{.gamma_exp = Numeric(1),
                    .k = 3,
                    .hyper = HyperSpec({}, {Numeric::ratio(4, 3)},
                                       Numeric::ratio(1, 9)),
                    .a = a,
                    .x = x};
  const HyperSpec g = umbra::umbral_hyper_map(second);
  CHECK(params_equal(g.numerator_params(),
                     {Numeric(-1), Numeric::ratio(-2, 3),
                      Numeric::ratio(-1, 3)}));
  CHECK(g.argument() == Numeric::ratio(-3, 8));
  REQUIRE(g.prefactor_power().has_value());
  CHECK(g.prefactor_power()->gamma_exp == Numeric(1));
  CHECK_FALSE(g.prefactor_exponential().has_value());
}

TEST_CASE("full map reproduces the confluent-to-Gauss instance") {
  // t^{mu+1/2} e^{-t/2} 1F1(mu+1/2-kappa; 2mu+1; t) maps to
  // 2F1(mu+1/2-kappa, mu+1/2-x/a; 2mu+1; 2a/(a-2)) with both prefactors.
  const Numeric kappa(1);
  const Numeric mu = Numeric::ratio(1, 2);
  const Numeric a(1);
  const Numeric x(3);
  LemmaInput in{.gamma_exp = mu + Numeric::ratio(1, 2),
                .lambda_exp = Numeric::ratio(-1, 2),
                .hyper = HyperSpec({mu + Numeric::ratio(1, 2) - kappa},
                                   {Numeric(2) * mu + Numeric(1)}, Numeric(1)),
                .a = a,
                .x = x};
  const HyperSpec out = umbra::umbral_hyper_map(in);
  CHECK(params_equal(out.numerator_params(), {Numeric(0), Numeric(-2)}));
  CHECK(params_equal(out.denominator_params(), {Numeric(2)}));
  // 2a/(a-2) at a = 1
  CHECK(out.argument() == Numeric(-2));
  REQUIRE(out.prefactor_power().has_value());
  CHECK(out.prefactor_power()->gamma_exp == Numeric(1));
  REQUIRE(out.prefactor_exponential().has_value());
  CHECK(out.prefactor_exponential()->base == Numeric::ratio(1, 2));
  CHECK(out.prefactor_exponential()->exponent == Numeric(2));
}

TEST_CASE("general map degenerates to the simpler maps parameter by parameter") {
  const Numeric alpha = Numeric::ratio(2, 3);
  const Numeric beta = Numeric::ratio(7, 5);
  const Numeric a = Numeric::ratio(1, 3);
  const Numeric x = Numeric(2);
  const HyperSpec bare({alpha}, {beta}, Numeric::ratio(3, 2));

  // gamma = 0, lambda = 0, k = 1: bare parameter append, no prefactors.
  LemmaInput l1{.hyper = bare, .a = a, .x = x};
  const HyperSpec o1 = umbra::umbral_hyper_map(l1);
  CHECK(params_equal(o1.numerator_params(), {alpha, -(x / a)}));
  CHECK(o1.argument() == Numeric::ratio(3, 2) * -a);
  CHECK_FALSE(o1.prefactor_power().has_value());
  CHECK_FALSE(o1.prefactor_exponential().has_value());

  // gamma = 0, lambda = 0, k = 2: same argument rule with k folded in.
  LemmaInput l2{.k = 2, .hyper = bare, .a = a, .x = x};
  const HyperSpec o2 = umbra::umbral_hyper_map(l2);
  CHECK(params_equal(o2.numerator_params(),
                     {alpha, -(x / a) / Numeric(2),
                      (Numeric(1) - x / a) / Numeric(2)}));
  CHECK(o2.argument() ==
        Numeric::ratio(3, 2) * (Numeric(-2) * a).pow_int(2));
  CHECK_FALSE(o2.prefactor_power().has_value());
  CHECK_FALSE(o2.prefactor_exponential().has_value());

  // gamma = 0, lambda != 0: only the exponential prefactor appears and the
  // argument picks up the 1/(1+a lambda)^k factor.
  const Numeric lambda = Numeric::ratio(1, 2);
  LemmaInput l3{.lambda_exp = lambda, .k = 2, .hyper = bare, .a = a, .x = x};
  const HyperSpec o3 = umbra::umbral_hyper_map(l3);
  const Numeric one_plus = Numeric(1) + a * lambda;
  CHECK(params_equal(o3.numerator_params(), o2.numerator_params()));
  CHECK(o3.argument() ==
        Numeric::ratio(3, 2) * (Numeric(-2) * a / one_plus).pow_int(2));
  CHECK_FALSE(o3.prefactor_power().has_value());
  REQUIRE(o3.prefactor_exponential().has_value());
  CHECK(o3.prefactor_exponential()->base == one_plus);
  CHECK(o3.prefactor_exponential()->exponent == x / a);
}

TEST_CASE("map guards its inputs") {
  const HyperSpec bare({}, {}, Numeric(1));
  // 1 + a lambda = 0 is the branch point of the image.
  LemmaInput pole{.lambda_exp = Numeric(-2),
                  .hyper = bare,
                  .a = Numeric::ratio(1, 2),
                  .x = Numeric(1)};
  CHECK_THROWS_AS(umbra::umbral_hyper_map(pole), umbra::PoleError);

  LemmaInput badk{.k = 0, .hyper = bare, .a = Numeric(1), .x = Numeric(1)};
  CHECK_THROWS_AS(umbra::umbral_hyper_map(badk), umbra::DomainError);

  HyperSpec dressed({}, {}, Numeric(1));
  dressed.with_exp_prefactor({Numeric(2), Numeric(1)});
  LemmaInput nested{.hyper = dressed, .a = Numeric(1), .x = Numeric(1)};
  CHECK_THROWS_AS(umbra::umbral_hyper_map(nested), umbra::DomainError);
}

TEST_CASE("series transform terminates exactly on the lattice") {
  // Exponential coefficients at lambda = 1: image of e^t at x = 3, a = 1 is
  // (1 + 1)^3 = 8, exactly.
  UmbralSeries expo{[](long n) {
                      Numeric c(1);
                      for (long i = 1; i <= n; ++i) c /= Numeric(i);
                      return c;
                    },
                    std::nullopt};
  CHECK(umbra::umbral_series_transform(expo, Numeric(3), Numeric(1)) ==
        Numeric(8));
  CHECK(umbra::umbral_series_transform(expo, Numeric(3), Numeric(1)) ==
        umbra::umbral_exp(Numeric(1), Numeric(3), Numeric(1)));

  // Geometric coefficients: at x = 0 only c_0 survives; at x = 2, a = 1 the
  // sum is 1 + 2 + 2 = 5.
  UmbralSeries geom{[](long) { return Numeric(1); }, 0.0};
  CHECK(umbra::umbral_series_transform(geom, Numeric(0), Numeric(1)) ==
        Numeric(1));
  CHECK(umbra::umbral_series_transform(geom, Numeric(2), Numeric(1)) ==
        Numeric(5));
}

TEST_CASE("series transform equals the mapped series on the lattice") {
  const Numeric alpha = Numeric::ratio(2, 3);
  const Numeric beta = Numeric::ratio(5, 4);
  UmbralSeries series{
      [&](long n) { return kummer_coeff(alpha, beta, n); }, std::nullopt};
  for (long den : {4L, 1L}) {
    const Numeric a = Numeric::ratio(1, den);
    for (long n : {0L, 1L, 2L, 5L, 12L, 25L, 40L}) {
      const Numeric x = a * Numeric(n);
      LemmaInput in{.hyper = HyperSpec({alpha}, {beta}, Numeric(1)),
                    .a = a,
                    .x = x};
      const Numeric direct = umbra::umbral_series_transform(series, x, a);
      const Numeric mapped =
          umbra::pfq_eval(umbra::umbral_hyper_map(in), umbra::EvalMode::Exact);
      CHECK(direct == mapped);
    }
  }
}

TEST_CASE("transform intertwines d/dt with the forward difference") {
  // c'_n = (n+1) c_{n+1} term by term, so the image grids must agree exactly.
  auto coeff = [](long n) {
    return Numeric(1) / Numeric(n * n + 1);
  };
  UmbralSeries f{coeff, std::nullopt};
  UmbralSeries fprime{
      [&](long n) { return Numeric(n + 1) * coeff(n + 1); }, std::nullopt};
  const Numeric a = Numeric::ratio(1, 2);
  std::vector<Numeric> samples;
  for (long j = 0; j <= 6; ++j)
    samples.push_back(
        umbra::umbral_series_transform(f, a * Numeric(j), a));
  const GridFunction grid(Lattice(a), Numeric(0), samples);
  const GridFunction diff = umbra::forward_difference(grid);
  for (long j = 0; j + 1 <= 6; ++j)
    CHECK(diff[j] ==
          umbra::umbral_series_transform(fprime, a * Numeric(j), a));
}

TEST_CASE("series transform converges off the lattice inside its radius") {
  // Image of e^{t/2} at x = 0.3, a = 1: binomial value 1.5^{0.3}.
  UmbralSeries half{[](long n) {
                      Numeric c(1);
                      for (long i = 1; i <= n; ++i)
                        c *= Numeric::ratio(1, 2) / Numeric(i);
                      return c;
                    },
                    2.0};
  const Numeric v =
      umbra::umbral_series_transform(half, Numeric(0.3), Numeric(1.0));
  CHECK(v.dbl() == doctest::Approx(std::pow(1.5, 0.3)).epsilon(1e-12));
}

TEST_CASE("series transform rejects divergent off-lattice sums") {
  // Geometric coefficients: factorial growth off the lattice.
  UmbralSeries geom_unhinted{[](long) { return Numeric(1); }, std::nullopt};
  CHECK_THROWS_AS(umbra::umbral_series_transform(geom_unhinted,
                                                 Numeric::ratio(1, 2),
                                                 Numeric(1)),
                  umbra::ConvergenceError);
  // The radius hint rejects before summing.
  UmbralSeries geom_hinted{[](long) { return Numeric(1); }, 0.0};
  CHECK_THROWS_AS(umbra::umbral_series_transform(geom_hinted,
                                                 Numeric::ratio(1, 2),
                                                 Numeric(1)),
                  umbra::ConvergenceError);
  // e^{3t} at spacing 1 sits outside the binomial disc |3a| < 1.
  UmbralSeries tripled{[](long n) {
                         Numeric c(1);
                         for (long i = 1; i <= n; ++i)
                           c *= Numeric(3) / Numeric(i);
                         return c;
                       },
                       std::nullopt};
  CHECK_THROWS_AS(umbra::umbral_series_transform(tripled, Numeric(0.4),
                                                 Numeric(1.0)),
                  umbra::ConvergenceError);
}

TEST_CASE("delta spike maps to the sampling kernel") {
  // Closed form against the phase-arc quadrature at ten points.
  const double xs[] = {-2.0, -1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.7, 2.0, 3.25};
  for (double a : {1.0, 0.5}) {
    for (double x : xs) {
      const double closed = umbra::sampling_function(x, a);
      const double arc = umbra::fourier_delta_image(x, a);
      CHECK(std::abs(closed - arc) < 1e-8);
    }
  }
  // Named values: 1/pi at the origin for unit spacing, zero one step out,
  // and the removable point at x = -a.
  CHECK(umbra::sampling_function(0.0, 1.0) ==
        doctest::Approx(1.0 / kPi).epsilon(1e-14));
  CHECK(std::abs(umbra::sampling_function(1.0, 1.0)) < 1e-15);
  CHECK(umbra::sampling_function(-0.5, 0.5) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(umbra::fourier_delta_image(-0.5, 0.5) ==
        doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("pure-line spectra map to discrete exponentials") {
  for (double a : {0.25, 1.0}) {
    for (double w0 : {0.5, 1.0, 2.0}) {
      Spectrum line{nullptr, {{w0, Complex(2.0 * kPi, 0.0)}}};
      for (double x : {0.0, a, 3.0 * a}) {
        const Complex got = umbra::fourier_umbral_transform(line, x, a);
        const Complex want =
            umbra::umbral_exp(Numeric(Complex(0.0, w0)), Numeric(x), Numeric(a))
                .cplx();
        CHECK(std::abs(got - want) < 1e-12);
      }
    }
  }
}

TEST_CASE("Gaussian spectrum maps to the discrete Gaussian") {
  // Frequency side of e^{-t^2} is sqrt(pi) e^{-w^2/4}.
  Spectrum gauss{[](double w) {
                   return Complex(std::sqrt(kPi) * std::exp(-w * w / 4.0),
                                  0.0);
                 },
                 {}};
  // At x = 1, a = 1/4 the image series terminates: 1 - 3/4 + 3/64 = 19/64.
  const Complex v = umbra::fourier_umbral_transform(gauss, 1.0, 0.25);
  CHECK(std::abs(v - Complex(19.0 / 64.0, 0.0)) < 1e-6);
  // At the origin the image is 1; at x = 2, a = 1 it is 1 - [2]^2 = -1.
  CHECK(std::abs(umbra::fourier_umbral_transform(gauss, 0.0, 1.0) -
                 Complex(1.0, 0.0)) < 1e-6);
  CHECK(std::abs(umbra::fourier_umbral_transform(gauss, 2.0, 1.0) -
                 Complex(-1.0, 0.0)) < 1e-6);
}

TEST_CASE("geometric sum maps through the incomplete gamma") {
  const double want[] = {1.0, 2.0, 5.0};
  for (int t = 0; t <= 2; ++t)
    CHECK(std::abs(umbra::rational_geom_transform(t, 1.0) - want[t]) < 1e-12);
  // Lattice cross-check: the term-by-term image of sum t^n at t = 2, a = 1.
  UmbralSeries geom{[](long) { return Numeric(1); }, 0.0};
  CHECK(umbra::umbral_series_transform(geom, Numeric(2), Numeric(1)).dbl() ==
        doctest::Approx(umbra::rational_geom_transform(2.0, 1.0))
            .epsilon(1e-12));
  CHECK_THROWS_AS(umbra::rational_geom_transform(-1.5, 1.0),
                  umbra::DomainError);
  CHECK_THROWS_AS(umbra::rational_geom_transform(1.0, -1.0),
                  umbra::DomainError);
}
