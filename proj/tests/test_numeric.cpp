#include "doctest.h"

#include "umbra/errors.hpp"
#include "umbra/numeric.hpp"

using umbra::Complex;
using umbra::Numeric;

TEST_CASE("rational arithmetic stays exact") {
  const Numeric half = Numeric::ratio(1, 2);
  const Numeric third = Numeric::ratio(1, 3);
  CHECK(half + third == Numeric::ratio(5, 6));
  CHECK(half - third == Numeric::ratio(1, 6));
  CHECK(half * third == Numeric::ratio(1, 6));
  CHECK(half / third == Numeric::ratio(3, 2));
  CHECK((half + third).is_exact());
  CHECK((-half) == Numeric::ratio(-1, 2));
}

TEST_CASE("mixed arithmetic promotes exact to double to complex") {
  const Numeric half = Numeric::ratio(1, 2);
  const Numeric quarter(0.25);
  const Numeric i_unit(Complex(0.0, 1.0));
  CHECK((half + quarter).is_double());
  CHECK((half + quarter).dbl() == doctest::Approx(0.75).epsilon(1e-15));
  CHECK((half + i_unit).is_complex());
  CHECK((quarter * i_unit).is_complex());
  CHECK((quarter * i_unit).cplx() == Complex(0.0, 0.25));
}

TEST_CASE("integer powers of rationals are exact, including negative exponents") {
  const Numeric q = Numeric::ratio(-3, 2);
  CHECK(q.pow_int(3) == Numeric::ratio(-27, 8));
  CHECK(q.pow_int(-2) == Numeric::ratio(4, 9));
  CHECK(q.pow_int(0) == Numeric(1));
  CHECK(Numeric(10).pow_int(6) == Numeric(1000000));
}

TEST_CASE("exact division by exact zero raises a pole error") {
  CHECK_THROWS_AS(Numeric(1) / Numeric(0), umbra::PoleError);
  CHECK_THROWS_AS(Numeric::ratio(1, 2).pow_int(-1) * Numeric(0) / Numeric(0),
                  umbra::PoleError);
}

TEST_CASE("exact integer detection and extraction") {
  CHECK(Numeric(7).is_exact_integer());
  CHECK(Numeric(7).as_long() == 7);
  CHECK(Numeric(-3).as_long() == -3);
  CHECK_FALSE(Numeric::ratio(7, 2).is_exact_integer());
  CHECK_FALSE(Numeric(7.0).is_exact());
}

TEST_CASE("zero detection across representations") {
  CHECK(Numeric(0).is_zero());
  CHECK(Numeric(0.0).is_zero());
  CHECK(Numeric(Complex(0.0, 0.0)).is_zero());
  CHECK_FALSE(Numeric(Complex(0.0, 1e-30)).is_zero());
}

TEST_CASE("equality is semantic across representations") {
  CHECK(Numeric(2) == Numeric(2.0));
  CHECK(Numeric(2) == Numeric(Complex(2.0, 0.0)));
  CHECK_FALSE(Numeric::ratio(1, 3) == Numeric(1.0 / 3.0));  // binary double is inexact
}

TEST_CASE("magnitude and printing") {
  CHECK(Numeric::ratio(-3, 2).abs() == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(Numeric(Complex(3.0, 4.0)).abs() == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(Numeric::ratio(22, 7).str() == "22/7");
}
