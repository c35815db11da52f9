#pragma once

#include <optional>
#include <vector>

#include "umbra/core.hpp"
#include "umbra/numeric.hpp"

namespace umbra {

// Power-type prefactor: a^g * Gamma(x/a + 1) / Gamma(x/a - g + 1), the
// lattice power continued through the gamma ratio (always evaluated that way
// in float mode; integer g falls back to the exact product form).
struct PowerPrefactor {
  Numeric x;
  Numeric a;
  Numeric gamma_exp;
};

// Exponential-type prefactor base^exponent; base is typically 1 + a*lambda.
struct ExpPrefactor {
  Numeric base;
  Numeric exponent;
};

struct ConvergenceClass {
  enum class Kind {
    Terminating,             // some numerator parameter is a nonpositive integer
    Entire,                  // p < q + 1
    ConditionallyConvergent, // p = q + 1, |z| < 1
    NeedsConnection,         // p = q + 1, |z| >= 1
    Asymptotic,              // p > q + 1
  };
  Kind kind;
  long truncation_index = -1;  // N for Terminating, else -1
};

// Returns N >= 0 when v is a nonpositive integer (so (v)_n vanishes for
// n > N = -v), else -1.
long nonpos_int_magnitude(const Numeric& v);

// A generalized hypergeometric series pFq(num; den; z) together with the
// prefactors produced by the lattice mapping lemmas:
//   scalar * [power prefactor] * [exponential prefactor] * pFq(...; z).
class HyperSpec {
 public:
  HyperSpec(std::vector<Numeric> numerator, std::vector<Numeric> denominator,
            Numeric argument);

  HyperSpec& with_power_prefactor(PowerPrefactor p);
  HyperSpec& with_exp_prefactor(ExpPrefactor p);
  HyperSpec& with_scalar(Numeric s);

  const std::vector<Numeric>& numerator_params() const { return num_; }
  const std::vector<Numeric>& denominator_params() const { return den_; }
  const Numeric& argument() const { return z_; }
  const std::optional<PowerPrefactor>& prefactor_power() const { return power_; }
  const std::optional<ExpPrefactor>& prefactor_exponential() const { return expf_; }
  const Numeric& prefactor_scalar() const { return scalar_; }

  ConvergenceClass convergence_class() const;

 private:
  std::vector<Numeric> num_;
  std::vector<Numeric> den_;
  Numeric z_;
  std::optional<PowerPrefactor> power_;
  std::optional<ExpPrefactor> expf_;
  Numeric scalar_{1};
};

enum class EvalMode { Exact, Float };

ConvergenceClass pfq_classify(const HyperSpec& spec);

// Evaluates prefactors times the series. Exact mode requires exact inputs
// and a terminating series; float mode sums until the term stays below
// tol * |partial sum| for three consecutive terms (cap 1e5 terms).
// Divergent classes (Asymptotic / NeedsConnection) are refused unless the
// series terminates.
Numeric pfq_eval(const HyperSpec& spec, EvalMode mode, double tol = 1e-14);

// Gauss 2F1(alpha, beta; gamma_p; z) on the real line z < 1 (plus the
// convergent z = 1 point): direct series for |z| < 0.9, Pfaff z/(z-1)
// mapping for moderate negative z, and the two-term 1/z connection for
// z <= -5 (also reached from 0.9 <= z < 1 via Pfaff). Terminating cases sum
// directly for any z.
double gauss_2f1_ext(double alpha, double beta, double gamma_p, double z);

// Tricomi U(alpha, beta, x), x > 0. Small x uses the two-Kummer combination
// (with extrapolation around integer beta); large x switches to the Laplace
// integral representation with a downward recurrence in alpha, which avoids
// the e^x cancellation of the combination formula.
double tricomi_u(double alpha, double beta, double x);

namespace detail {
// Individual strategies, exposed so tests can compare them across the
// method-switch boundaries.
double gauss_series(double alpha, double beta, double gamma_p, double z);
double gauss_pfaff(double alpha, double beta, double gamma_p, double z);
double gauss_connection(double alpha, double beta, double gamma_p, double z);
double tricomi_combination(double alpha, double beta, double x);
double tricomi_large_x(double alpha, double beta, double x);
}  // namespace detail

}  // namespace umbra
