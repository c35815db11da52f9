#pragma once

#include <functional>
#include <utility>

#include "umbra/core.hpp"
#include "umbra/quadrature.hpp"

namespace umbra {

// ---------------------------------------------------------------------------
// Discrete harmonic oscillator
// ---------------------------------------------------------------------------

struct OscillatorState {
  Numeric X;
  Numeric P;
  Numeric t;  // lattice time accumulated so far
};

// One closed-form step of size dt on spacing a:
//   X' = X Cos[dt] + P Sin[dt],  P' = P Cos[dt] - X Sin[dt]
// with the discrete trig pair (Im, Re) of (1+ia)^{dt/a}. Exact when dt/a is
// an integer and the inputs are exact.
OscillatorState oscillator_evolve(const OscillatorState& s, const Numeric& dt,
                                  const Numeric& a);

// The same trajectory in polar form (float):
//   (1+a^2)^{t/2a} (X0 cos wt + P0 sin wt, P0 cos wt - X0 sin wt),
// w = arctan(a)/a. Independent route used to cross-check the step form.
std::pair<double, double> oscillator_spiral(double x0, double p0, double t,
                                            double a);

// Effective angular frequency arctan(a)/a; 1 at a = 0.
double oscillator_frequency(double a);

// Conserved combination (X^2 + P^2) (1+a^2)^{-t/a} / 2; exact on the lattice.
Numeric oscillator_energy(const OscillatorState& s, const Numeric& a);

// ---------------------------------------------------------------------------
// One-term recursions Y(x + stride) = ratio(x) Y(x)
// ---------------------------------------------------------------------------

// Iterates the recursion from (x0, y0) for `steps` steps and returns the
// grid of steps+1 samples. A pole in the ratio (thrown or produced as a
// non-finite value) is reported as a PoleError naming the step index and
// abscissa.
GridFunction first_order_iterate(
    const std::function<Numeric(const Numeric&)>& ratio, const Numeric& x0,
    const Numeric& y0, long steps, const Numeric& stride);

// ---------------------------------------------------------------------------
// Closed forms on the spacing-2 lattice (half-integer index)
// ---------------------------------------------------------------------------

// Y(x) = 2^{x/2} Gamma(x/2 - kappa)/Gamma(x/2) c1
//      + (-2)^{x/2} / (Gamma(x/2) Gamma(1 - x/2 + kappa)) c2,
// principal branch for (-2)^{x/2}. The c2 part is entire (reciprocal gammas);
// a lone numerator pole in the c1 part is returned as a signed infinite
// component rather than raised, so callers can flag it.
Complex whittaker_c1c2(double kappa, Complex c1, Complex c2, double x);

// General second-index closed form at spacing 2:
// Y(x) = 2^{x/2} / (Gamma(x/2+1/2+mu) Gamma(x/2+1/2-mu)) *
//        [ Gamma(1+x/2) Gamma(x/2-kappa) c1
//          + c2 / (Gamma(-x/2) Gamma(1+kappa-x/2)) ].
// At mu = 1/2 its c1 part coincides with whittaker_c1c2's c1 part exactly.
Complex whittaker_a2_closed(double kappa, double mu, Complex c1, Complex c2,
                            double x);

// Recovers (c1, c2) from the samples Y(2+2 kappa) and Y(2), valid for
// 0 < kappa < 1:
//   c1 = Gamma(1+kappa) 2^{-1-kappa} Y(2+2kappa),
//   c2 = pi/sin(pi kappa) c1 - Gamma(kappa)/2 Y(2).
std::pair<Complex, Complex> whittaker_constants(double kappa,
                                                Complex y_at_2p2kappa,
                                                Complex y_at_2);

// ---------------------------------------------------------------------------
// Inverse-square closed form (spacing a, coupling kappa)
// ---------------------------------------------------------------------------

// Step ratio Y(x+a)/Y(x) = 2 u (1+u) / (u^2 + u + kappa), u = x/a; the
// denominator is (u+s_+)(u+s_-) with s_pm = (1 ± sqrt(1-4 kappa))/2 and is
// real for every kappa. PoleError where it vanishes.
double inverse_square_ratio(double kappa, double a, double x);

// Y(x) = 2^{u} [ Gamma(1+u) Gamma(u) c1 + c2 / (Gamma(-u) Gamma(1-u)) ]
//        / (Gamma(u+s_+) Gamma(u+s_-)), u = x/a; s_pm complex for
// kappa > 1/4. c1-part poles at nonpositive integer u come back as signed
// infinite components; the c2 part is entire and vanishes exactly at
// nonnegative integer u.
Complex inverse_square_closed(double kappa, double a, Complex c1, Complex c2,
                              double x);

// ---------------------------------------------------------------------------
// Discrete Whittaker-M interpolation (arbitrary spacing)
// ---------------------------------------------------------------------------

// a^{mu+1/2} Gamma(x/a+1)/Gamma(x/a-mu+1/2) (1-a/2)^{x/a-mu-1/2}
//   * 2F1(mu+1/2-kappa, mu+1/2-x/a; 2mu+1; 2a/(a-2)).
// Spacing 2 is the pure-recursion point and is refused; spacings beyond 2
// push the interpolation argument past 1 and propagate a DomainError.
// Denominator gamma poles of the prefactor yield exact zeros.
double um_whittaker_m(double kappa, double mu, double x, double a);

// ---------------------------------------------------------------------------
// Discrete Airy function
// ---------------------------------------------------------------------------

enum class AiryMethod { Quadrature, Series };

// Quadrature: Re (1/pi) int_0^inf e^{i s^3/3} (1 + i s a)^{x/a} ds, computed
// on the rotated ray s = e^{i pi/6} u where the cubic phase decays; works for
// either sign of a. Series: the two-part terminating expansion below, lattice
// points x = N a with a > 0 only.
double um_airy(double x, double a, AiryMethod method,
               const QuadratureBudget& budget = {});

// The two series components (T1, T2) with
//   um_airy = Ai(0) T1 - (-Ai'(0)) T2,
//   T1 = 3F1(-r/3, (1-r)/3, (2-r)/3; 2/3; -3a^3),
//   T2 = x * 3F1((1-r)/3, (2-r)/3, (3-r)/3; 4/3; -3a^3),  r = x/a.
// Each component separately solves the three-term difference equation, so
// exact inputs give exact residuals. T2 carries the plain factor x, which
// kills it at the origin where its series would not terminate.
std::pair<Numeric, Numeric> um_airy_series_components(const Numeric& x,
                                                      const Numeric& a);

// ---------------------------------------------------------------------------
// Discrete Gaussian
// ---------------------------------------------------------------------------

enum class GaussianMethod { Series, UIdentity };

// G(x, a) = sum_n (-1)^n [x]^{2n} / n!. Series: the terminating 2F0 form
// (lattice points; off-lattice raises through the series classifier).
// UIdentity: (2a)^{x/a-1} U((1-x/a)/2, 3/2, 1/(4a^2)) through the confluent
// second-kind function; any real x, spacing a > 0.
double um_gaussian(double x, double a,
                   GaussianMethod method = GaussianMethod::UIdentity);

// Exact lattice value of G (x/a a nonnegative integer, exact inputs).
Numeric um_gaussian_exact(const Numeric& x, const Numeric& a);

// ---------------------------------------------------------------------------
// Plane waves on a time/space double lattice
// ---------------------------------------------------------------------------

struct WaveParams {
  double omega;
  double k;
  double a;  // time spacing
  double b;  // space spacing
};

enum class PhaseConvention { ArcSin, ArcTan };

// F(t, x) = (1 + i omega a)^{t/a} (1 - i k b)^{x/b}.
Complex plane_wave(const WaveParams& w, double t, double x);

// (omega/k) (a arcsin b)/(b arcsin a) in the arcsine convention (requires
// |a| <= 1 and |b| <= 1); the arctangent variant replaces arcsin by arctan
// and has no domain restriction. Both reduce to omega/k at a = b.
double phase_velocity(const WaveParams& w,
                      PhaseConvention c = PhaseConvention::ArcSin);

// Relative index (b arcsin a)/(a arcsin b) (or the arctan variant): the
// factor by which the two-lattice medium rescales the continuum speed.
double refraction_index(const WaveParams& w,
                        PhaseConvention c = PhaseConvention::ArcSin);

// ---------------------------------------------------------------------------
// Toda lattice soliton and its time-umbral image
// ---------------------------------------------------------------------------

struct TodaParams {
  double q0 = 0.0;
  double alpha = 1.0;  // > 0
  double beta = 1.0;   // != 0
  int branch = 1;      // sign of gamma
  double gamma() const;     // branch * 2 sinh(beta/2)
  double velocity() const;  // gamma / beta
};

// Soliton displacement and momentum
//   q = q0 + log((1 + alpha e^{-beta n + gamma t}) /
//                (1 + alpha e^{-beta(n+1) + gamma t})),
//   p = gamma (sigma(L) - sigma(L - beta)), L = log(alpha) - beta n + gamma t
// evaluated in softplus/sigmoid form so both tails stay finite.
std::pair<double, double> toda_continuum(double n, double t,
                                         const TodaParams& p);

// Domain policy for the umbral image: the defining series converges only for
// |alpha e^{-beta n}| < 1; the closed form below is a rational function of
// that variable and extends to every site (its only pole, z = 1, cannot
// occur for alpha > 0).
enum class TodaDomain { SeriesDisc, RationalContinuation };

// Time-umbral displacement at t = m a:
//   Q(n, m a) = q(n, 0) + sum_{j=1..m} (gamma a)^j C(m,j)
//               [ Phi(z e^{-beta}, j) - Phi(z, j) ],  z = -alpha e^{-beta n},
// where Phi(., j) is the closed rational form of sum_k z^k k^{j-1}.
double toda_umbral_q(double n, long m, double a, const TodaParams& p,
                     TodaDomain dom = TodaDomain::SeriesDisc);

// Matching momentum image:
//   P(n, m a) = gamma sum_{j=0..m} (gamma a)^j C(m,j)
//               [ Phi(z e^{-beta}, j+1) - Phi(z, j+1) ];
// satisfies the forward-difference equation of motion
// (Q(n,(m+1)a) - Q(n,ma))/a = P(n,ma) identically.
double toda_umbral_p(double n, long m, double a, const TodaParams& p,
                     TodaDomain dom = TodaDomain::SeriesDisc);

}  // namespace umbra
