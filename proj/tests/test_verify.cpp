#include <cmath>
#include <vector>

#include "doctest.h"
#include "umbra/core.hpp"
#include "umbra/errors.hpp"
#include "umbra/solutions.hpp"
#include "umbra/verify.hpp"

using umbra::DifferenceOperatorSpec;
using umbra::GridFunction;
using umbra::Lattice;
using umbra::Numeric;
using umbra::ResidualNormalization;

TEST_CASE("operator application differentiates basic polynomials exactly") {
  const Numeric a = Numeric::ratio(1, 2);
  std::vector<Numeric> cubes;
  for (long j = 0; j <= 8; ++j)
    cubes.push_back(umbra::falling_factorial(a * Numeric(j), a, 3));
  const GridFunction g(Lattice(a), Numeric(0), cubes);

  DifferenceOperatorSpec d1;
  d1.terms.push_back({{}, 0, 1});
  CHECK(d1.trailing_span() == 1);
  const GridFunction dg = umbra::apply_operator(d1, g);
  CHECK(dg.size() == 8);
  for (std::size_t j = 0; j < dg.size(); ++j) {
    const Numeric x = a * Numeric(static_cast<long>(j));
    CHECK(dg[j] == Numeric(3) * umbra::falling_factorial(x, a, 2));
  }
}

TEST_CASE("operator guards") {
  const GridFunction tiny(Lattice(Numeric(1)), Numeric(0),
                          {Numeric(1), Numeric(2)});
  DifferenceOperatorSpec empty_op;
  CHECK_THROWS_AS(umbra::apply_operator(empty_op, tiny), umbra::DomainError);

  DifferenceOperatorSpec wide;
  wide.terms.push_back({{}, 1, 2});
  wide.terms.push_back({{}, 0, 0});
  CHECK(wide.trailing_span() == 3);
  CHECK_THROWS_AS(umbra::apply_operator(wide, tiny), umbra::DomainError);

  DifferenceOperatorSpec backward;
  backward.terms.push_back({{}, -1, 0});
  CHECK_THROWS_AS(umbra::apply_operator(backward, tiny), umbra::DomainError);
}

TEST_CASE("residual normalization modes") {
  const GridFunction g(Lattice(Numeric(1)), Numeric(0),
                       {Numeric(1), Numeric(10)});
  DifferenceOperatorSpec identity;
  identity.terms.push_back({{}, 0, 0});

  const auto abs_rep = umbra::residual_report(identity, g);
  CHECK(abs_rep.scale == 1.0);
  CHECK(abs_rep.per_point == std::vector<double>{1.0, 10.0});
  CHECK(abs_rep.max_abs == 10.0);
  CHECK(abs_rep.location == 1);

  const auto rel_rep =
      umbra::residual_report(identity, g, ResidualNormalization::Relative);
  CHECK(rel_rep.scale == 10.0);
  CHECK(rel_rep.max_abs == 1.0);
  CHECK(rel_rep.per_point.front() == 0.1);
}

TEST_CASE("built-in residual suites all pass") {
  const auto all = umbra::residual_suite("all");
  REQUIRE(all.size() == 7);
  const std::vector<std::string> want = {
      "oscillator",        "whittaker_half", "inverse_square",
      "whittaker_general", "airy",           "gaussian_first_order",
      "plane_wave"};
  for (std::size_t i = 0; i < all.size(); ++i) {
    CAPTURE(all[i].name);
    CHECK(all[i].name == want[i]);
    CHECK(all[i].pass);
    CHECK(all[i].report.max_abs <= all[i].tolerance);
  }
}

TEST_CASE("exact suites report literally zero residual") {
  const auto osc = umbra::residual_suite("oscillator");
  REQUIRE(osc.size() == 1);
  CHECK(osc.front().report.max_abs == 0.0);
  CHECK(osc.front().tolerance == 0.0);
  CHECK(osc.front().pass);

  const auto gauss = umbra::residual_suite("gaussian_first_order");
  REQUIRE(gauss.size() == 1);
  CHECK(gauss.front().report.max_abs == 0.0);
}

TEST_CASE("float suites have small but nonzero residual") {
  const auto airy = umbra::residual_suite("airy");
  REQUIRE(airy.size() == 1);
  CHECK(airy.front().report.max_abs > 0.0);
  CHECK(airy.front().report.max_abs < 1e-6);
  CHECK(airy.front().report.per_point.size() == 7);
}

TEST_CASE("unknown suite names are rejected with the available list") {
  try {
    umbra::residual_suite("nope");
    FAIL("expected rejection");
  } catch (const umbra::DomainError& e) {
    CHECK(std::string(e.what()).find("whittaker_half") != std::string::npos);
  }
}

TEST_CASE("continuum limit check flags non-monotone schedules") {
  auto f = [](double x, double a) {
    return umbra::um_gaussian(x, a, umbra::GaussianMethod::UIdentity);
  };
  auto ref = [](double x) { return std::exp(-x * x); };
  const std::vector<double> xs = {0.5, 1.0};

  const auto good = umbra::continuum_limit_check(f, ref, xs, {0.5, 0.25, 0.125});
  CHECK(good.monotone);
  CHECK(good.deviations.size() == 3);
  CHECK(good.deviations[2] < good.deviations[0]);

  const auto bad = umbra::continuum_limit_check(f, ref, xs, {0.125, 0.25, 0.5});
  CHECK_FALSE(bad.monotone);

  CHECK_THROWS_AS(umbra::continuum_limit_check(f, ref, {}, {0.5}),
                  umbra::DomainError);
}
