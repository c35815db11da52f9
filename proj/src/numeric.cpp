#include "umbra/numeric.hpp"

#include <cmath>
#include <cstdio>

namespace umbra {

Numeric Numeric::pow_int(long k) const {
  if (k == 0) return Numeric(1);
  if (is_exact()) {
    const Rational& q = std::get<Rational>(v_);
    if (sgn(q) == 0) {
      if (k < 0) throw PoleError("exact zero raised to a negative power");
      return Numeric(0);
    }
    unsigned long e =
        k > 0 ? static_cast<unsigned long>(k)
              : static_cast<unsigned long>(-(k + 1)) + 1ul;  // avoids -LONG_MIN
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), q.get_den().get_mpz_t(), e);
    Rational r = k > 0 ? Rational(num, den) : Rational(den, num);
    r.canonicalize();
    return Numeric(r);
  }
  if (is_double())
    return Numeric(std::pow(std::get<double>(v_), static_cast<double>(k)));
  return Numeric(std::pow(std::get<Complex>(v_), static_cast<double>(k)));
}

namespace {
std::string fmt_double(double d) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  return buf;
}
}  // namespace

std::string Numeric::str() const {
  if (is_exact()) return std::get<Rational>(v_).get_str();
  if (is_double()) return fmt_double(std::get<double>(v_));
  const Complex& z = std::get<Complex>(v_);
  std::string s = fmt_double(z.real());
  s += (z.imag() < 0 || std::signbit(z.imag())) ? "-" : "+";
  s += fmt_double(std::abs(z.imag()));
  s += "i";
  return s;
}

}  // namespace umbra
