#pragma once

#include <utility>
#include <vector>

#include "umbra/numeric.hpp"

namespace umbra {

// Uniform lattice t_j = origin + j*spacing. Spacing must be positive; the
// exact-vs-float representation of the spacing is what selects exact-mode
// arithmetic downstream. (Negative spacing appears only in the point
// operations that explicitly allow it and never builds a Lattice.)
struct Lattice {
  explicit Lattice(Numeric a) : spacing(std::move(a)) {
    if (spacing.is_complex()) throw DomainError("lattice spacing must be real");
    bool pos = spacing.is_exact() ? sgn(spacing.rat()) > 0 : spacing.dbl() > 0;
    if (!pos) throw DomainError("lattice spacing must be positive");
  }
  bool exact() const { return spacing.is_exact(); }
  Numeric spacing;
};

// Sampled values F(origin + j*a), j = 0..size()-1.
class GridFunction {
 public:
  GridFunction(Lattice lat, Numeric origin, std::vector<Numeric> samples)
      : lat_(std::move(lat)),
        origin_(std::move(origin)),
        samples_(std::move(samples)) {
    if (samples_.empty()) throw DomainError("grid function with no samples");
  }

  const Lattice& lattice() const { return lat_; }
  const Numeric& origin() const { return origin_; }
  std::size_t size() const { return samples_.size(); }
  const Numeric& operator[](std::size_t j) const { return samples_[j]; }
  const std::vector<Numeric>& samples() const { return samples_; }
  Numeric point(std::size_t j) const {
    return origin_ + Numeric(static_cast<long>(j)) * lat_.spacing;
  }

 private:
  Lattice lat_;
  Numeric origin_;
  std::vector<Numeric> samples_;
};

// Basic polynomial [t]^n = t (t-a) (t-2a) ... (t-(n-1)a); literal product,
// exact for exact inputs. [t]^0 = 1.
Numeric falling_factorial(const Numeric& t, const Numeric& a, unsigned n);

// [1/t]^n = 1/((t+a)(t+2a)...(t+na)). Pole error names the vanishing factor.
Numeric rising_factorial_inverse(const Numeric& t, const Numeric& a,
                                 unsigned n);

// a^g * Gamma(x/a+1)/Gamma(x/a-g+1), the arbitrary-power interpolation of the
// basic polynomials. Always evaluated through log-gamma (double); a pole of
// the denominator gamma gives an exact zero, a pole of the numerator alone is
// an error. Negative spacing is allowed here.
double umbral_power_gamma(double x, double a, double gamma_exp);

// (1 + lambda a)^{t/a}. Exact rational when t/a is an integer and all inputs
// are exact; complex lambda gives the principal-branch complex result. For
// non-integer t/a a real base on the cut (1+lambda*a <= 0) is refused.
Numeric umbral_exp(const Numeric& lambda, const Numeric& t, const Numeric& a);

// (Sin[t], Cos[t]) = (Im, Re) of (1+ia)^{t/a}; exact rational pair for
// integer t/a with exact inputs, otherwise (1+a^2)^{t/2a} (sin, cos)(t w)
// with w = arctan(a)/a.
std::pair<Numeric, Numeric> umbral_trig(const Numeric& t, const Numeric& a);

// Delta^order F with Delta F(t) = (F(t+a) - F(t))/a; output shorter by
// `order` samples; exact for exact samples.
GridFunction forward_difference(const GridFunction& F, unsigned order = 1);

// base^exponent preserving exactness for integer exponents; negative real
// base with a non-integer exponent takes the principal complex branch.
Numeric numeric_pow(const Numeric& base, const Numeric& exponent);

namespace detail {
// Exact Gaussian-rational helper for integer powers of (1 + i*a); used by the
// exact paths of umbral_trig and the plane-wave solutions.
struct RatComplex {
  Rational re, im;
  RatComplex operator*(const RatComplex& o) const {
    return {Rational(re * o.re - im * o.im), Rational(re * o.im + im * o.re)};
  }
};
RatComplex ratc_pow(RatComplex base, long n);

// Integer power of a complex double by squaring (keeps Gaussian-integer
// results exact).
Complex cplx_pow_int(Complex base, long n);
}  // namespace detail

}  // namespace umbra
