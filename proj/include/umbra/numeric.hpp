#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "umbra/errors.hpp"

namespace umbra {

using Rational = mpq_class;
using Complex = std::complex<double>;

// A lattice quantity: exact rational, double, or complex double. Arithmetic
// keeps results exact as long as every operand is exact; mixing with a double
// demotes to double, and a complex operand taints the result complex. Complex
// values never appear from real inputs except through operations documented
// to produce them (principal-branch powers, trig component assembly).
class Numeric {
 public:
  Numeric() : v_(Rational(0)) {}
  Numeric(int n) : v_(Rational(n)) {}
  Numeric(long n) : v_(Rational(static_cast<signed long>(n))) {}
  Numeric(long long n) : v_(Rational(static_cast<signed long>(n))) {}
  Numeric(unsigned n) : v_(Rational(static_cast<unsigned long>(n))) {}
  Numeric(unsigned long n) : v_(Rational(n)) {}
  Numeric(unsigned long long n)
      : v_(Rational(static_cast<unsigned long>(n))) {}
  Numeric(const Rational& q) : v_(q) { canon(); }
  Numeric(double d) : v_(d) {}
  Numeric(const Complex& z) : v_(z) {}

  // num/den with canonicalization; den must be nonzero.
  static Numeric ratio(long num, long den) {
    if (den == 0) throw PoleError("rational with zero denominator");
    Rational q{mpz_class(num), mpz_class(den)};
    q.canonicalize();
    return Numeric(q);
  }

  bool is_exact() const { return std::holds_alternative<Rational>(v_); }
  bool is_double() const { return std::holds_alternative<double>(v_); }
  bool is_complex() const { return std::holds_alternative<Complex>(v_); }

  const Rational& rat() const {
    if (!is_exact()) throw DomainError("numeric value is not exact");
    return std::get<Rational>(v_);
  }

  // Narrowing views. dbl() refuses complex values with nonzero imaginary
  // part; cplx() always succeeds.
  double dbl() const {
    if (is_exact()) return std::get<Rational>(v_).get_d();
    if (is_double()) return std::get<double>(v_);
    const Complex& z = std::get<Complex>(v_);
    if (z.imag() != 0.0) throw DomainError("complex value has no real view");
    return z.real();
  }
  Complex cplx() const {
    if (is_complex()) return std::get<Complex>(v_);
    return Complex(dbl(), 0.0);
  }

  bool is_zero() const {
    if (is_exact()) return sgn(std::get<Rational>(v_)) == 0;
    if (is_double()) return std::get<double>(v_) == 0.0;
    return std::get<Complex>(v_) == Complex(0.0, 0.0);
  }

  // True when the value is an exact integer (denominator one).
  bool is_exact_integer() const {
    return is_exact() && std::get<Rational>(v_).get_den() == 1;
  }
  long as_long() const {
    if (!is_exact_integer()) throw DomainError("value is not an exact integer");
    const mpz_class& n = std::get<Rational>(v_).get_num();
    if (!n.fits_slong_p()) throw DomainError("integer too large for long");
    return n.get_si();
  }

  friend Numeric operator+(const Numeric& a, const Numeric& b) {
    return binop(a, b, Add{});
  }
  friend Numeric operator-(const Numeric& a, const Numeric& b) {
    return binop(a, b, Sub{});
  }
  friend Numeric operator*(const Numeric& a, const Numeric& b) {
    return binop(a, b, Mul{});
  }
  friend Numeric operator/(const Numeric& a, const Numeric& b) {
    if (b.is_exact() && b.is_zero())
      throw PoleError("exact division by zero");
    return binop(a, b, Div{});
  }
  Numeric operator-() const {
    if (is_exact()) return Numeric(Rational(-std::get<Rational>(v_)));
    if (is_double()) return Numeric(-std::get<double>(v_));
    return Numeric(-std::get<Complex>(v_));
  }
  Numeric& operator+=(const Numeric& o) { return *this = *this + o; }
  Numeric& operator-=(const Numeric& o) { return *this = *this - o; }
  Numeric& operator*=(const Numeric& o) { return *this = *this * o; }
  Numeric& operator/=(const Numeric& o) { return *this = *this / o; }

  // Integer power; exact for exact base. Negative exponent of exact zero is
  // a pole.
  Numeric pow_int(long k) const;

  // Semantic equality: rationals compare exactly (a finite double is a
  // rational, so exact/double pairs compare exactly too); anything complex
  // compares as complex doubles.
  friend bool operator==(const Numeric& a, const Numeric& b) {
    if (a.is_exact() && b.is_exact())
      return std::get<Rational>(a.v_) == std::get<Rational>(b.v_);
    if (a.is_exact() && b.is_double()) return exact_eq_double(a, b);
    if (a.is_double() && b.is_exact()) return exact_eq_double(b, a);
    return a.cplx() == b.cplx();
  }
  friend bool operator!=(const Numeric& a, const Numeric& b) {
    return !(a == b);
  }

  // |value| as double (works for every kind).
  double abs() const {
    if (is_complex()) return std::abs(std::get<Complex>(v_));
    double d = is_exact() ? std::get<Rational>(v_).get_d()
                          : std::get<double>(v_);
    return d < 0 ? -d : d;
  }

  std::string str() const;

 private:
  static bool exact_eq_double(const Numeric& e, const Numeric& d) {
    const double v = std::get<double>(d.v_);
    if (!std::isfinite(v)) return false;
    return std::get<Rational>(e.v_) == Rational(v);
  }

  struct Add {
    template <class T>
    T operator()(const T& a, const T& b) const { return a + b; }
  };
  struct Sub {
    template <class T>
    T operator()(const T& a, const T& b) const { return a - b; }
  };
  struct Mul {
    template <class T>
    T operator()(const T& a, const T& b) const { return a * b; }
  };
  struct Div {
    template <class T>
    T operator()(const T& a, const T& b) const { return a / b; }
  };

  template <class Op>
  static Numeric binop(const Numeric& a, const Numeric& b, Op op) {
    if (a.is_complex() || b.is_complex())
      return Numeric(op(a.cplx(), b.cplx()));
    if (a.is_double() || b.is_double()) {
      double x = a.is_exact() ? std::get<Rational>(a.v_).get_d()
                              : std::get<double>(a.v_);
      double y = b.is_exact() ? std::get<Rational>(b.v_).get_d()
                              : std::get<double>(b.v_);
      return Numeric(op(x, y));
    }
    Rational r = op(std::get<Rational>(a.v_), std::get<Rational>(b.v_));
    return Numeric(r);
  }

  void canon() {
    if (is_exact()) std::get<Rational>(v_).canonicalize();
  }

  std::variant<Rational, double, Complex> v_;
};

}  // namespace umbra
