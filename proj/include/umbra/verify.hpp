#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "umbra/core.hpp"

namespace umbra {

// One term of a linear difference operator: coeff(x) * D^order F(x + shift*a),
// where D is the forward difference on the grid's own lattice and `shift`
// counts lattice steps. An empty coeff means the constant 1.
struct DifferenceOperatorTerm {
  std::function<Numeric(const Numeric&)> coeff;
  long shift = 0;
  unsigned order = 0;
};

struct DifferenceOperatorSpec {
  std::vector<DifferenceOperatorTerm> terms;

  // Number of samples past the base point any term reaches; a grid of N
  // samples supports N - trailing_span() base points.
  long trailing_span() const;
};

// Evaluates the operator at every supported base point. Exact inputs with an
// exact lattice produce exact outputs.
GridFunction apply_operator(const DifferenceOperatorSpec& op,
                            const GridFunction& f);

enum class ResidualNormalization { Absolute, Relative };

// Residual magnitudes of op[F] per base point. With Relative normalization
// every entry is divided by scale = max |F| over the input grid.
struct ResidualReport {
  double max_abs = 0.0;
  std::size_t location = 0;
  std::vector<double> per_point;
  double scale = 1.0;
};

ResidualReport residual_report(
    const DifferenceOperatorSpec& op, const GridFunction& f,
    ResidualNormalization norm = ResidualNormalization::Absolute);

struct SuiteResult {
  std::string name;
  ResidualReport report;
  double tolerance = 0.0;
  bool pass = false;
};

// Built-in residual checks pairing each closed-form solution with its
// difference equation. `which` is one suite name or "all".
std::vector<SuiteResult> residual_suite(const std::string& which = "all");
const std::vector<std::string>& residual_suite_names();

// Largest deviation from the continuum reference over `xs`, one entry per
// spacing; `monotone` reports whether shrinking the spacing shrank the
// deviation at every step.
struct ContinuumCheck {
  std::vector<double> spacings;
  std::vector<double> deviations;
  bool monotone = false;
};

ContinuumCheck continuum_limit_check(
    const std::function<double(double, double)>& f,
    const std::function<double(double)>& reference,
    const std::vector<double>& xs, const std::vector<double>& spacings);

}  // namespace umbra
