#include "umbra/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace umbra {
namespace {

using Cplx = std::complex<double>;

// Gauss-Kronrod (7, 15) nodes and weights on [-1, 1] (positive half; the
// rule is symmetric).  Even-indexed nodes are Kronrod-only; odd-indexed
// nodes and the centre carry the embedded 7-point Gauss rule.
constexpr double kNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
constexpr double kWeightsK[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWeightsG[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct PanelResult {
  Cplx value;
  double error;
};

PanelResult kronrod_panel(const std::function<Cplx(double)>& f, double lo, double hi) {
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  Cplx sum_k = kWeightsK[7] * f(mid);
  Cplx sum_g = kWeightsG[3] * f(mid);
  for (int i = 0; i < 7; ++i) {
    const Cplx lo_v = f(mid - half * kNodes[i]);
    const Cplx hi_v = f(mid + half * kNodes[i]);
    sum_k += kWeightsK[i] * (lo_v + hi_v);
    if (i % 2 == 1) sum_g += kWeightsG[i / 2] * (lo_v + hi_v);
  }
  const Cplx value = half * sum_k;
  const double diff = std::abs(half * (sum_k - sum_g));
  // QUADPACK-style rescaling sharpens the estimate for smooth integrands
  // while staying conservative for rough ones.
  const double scale = std::abs(value) + 1e-300;
  double err = diff;
  if (diff < scale) err = scale * std::pow(diff / scale, 1.5);
  return {value, err};
}

struct Panel {
  double lo, hi;
  Cplx value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

}  // namespace

Cplx integrate_finite(const std::function<Cplx(double)>& f, double lo, double hi,
                      const QuadratureBudget& budget) {
  if (lo == hi) return {0.0, 0.0};
  std::priority_queue<Panel> queue;
  PanelResult first = kronrod_panel(f, lo, hi);
  queue.push({lo, hi, first.value, first.error});
  Cplx total = first.value;
  double total_err = first.error;
  int used = 1;
  while (total_err > std::max(budget.abs_tol, budget.rel_tol * std::abs(total))) {
    if (used >= budget.max_intervals) {
      throw QuadratureBudgetError("adaptive quadrature: interval budget exhausted",
                                  std::abs(total), total_err);
    }
    Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (mid <= worst.lo || mid >= worst.hi) {
      // Interval at floating-point resolution; accept its estimate as-is.
      queue.push({worst.lo, worst.hi, worst.value, 0.0});
      total_err -= worst.error;
      continue;
    }
    PanelResult left = kronrod_panel(f, worst.lo, mid);
    PanelResult right = kronrod_panel(f, mid, worst.hi);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    queue.push({worst.lo, mid, left.value, left.error});
    queue.push({mid, worst.hi, right.value, right.error});
    ++used;
  }
  return total;
}

double integrate_finite_real(const std::function<double(double)>& f, double lo, double hi,
                             const QuadratureBudget& budget) {
  return integrate_finite([&f](double t) { return Cplx(f(t), 0.0); }, lo, hi, budget).real();
}

Cplx integrate_semi_infinite(const std::function<Cplx(double)>& f, double lo,
                             double first_window, const QuadratureBudget& budget) {
  Cplx total{0.0, 0.0};
  double start = lo;
  double width = first_window;
  int consecutive_small = 0;
  for (int w = 0; w < budget.max_windows; ++w) {
    QuadratureBudget window_budget = budget;
    window_budget.abs_tol = std::max(budget.abs_tol * 0.25,
                                     budget.rel_tol * 0.25 * std::abs(total));
    const Cplx piece = integrate_finite(f, start, start + width, window_budget);
    total += piece;
    const double threshold = std::max(budget.abs_tol, budget.rel_tol * std::abs(total));
    if (std::abs(piece) < threshold) {
      if (++consecutive_small >= 2) return total;
    } else {
      consecutive_small = 0;
    }
    start += width;
    width *= 2.0;
  }
  throw QuadratureBudgetError("semi-infinite quadrature: window budget exhausted",
                              std::abs(total), std::abs(total));
}

double integrate_semi_infinite_real(const std::function<double(double)>& f, double lo,
                                    double first_window, const QuadratureBudget& budget) {
  return integrate_semi_infinite([&f](double t) { return Cplx(f(t), 0.0); }, lo,
                                 first_window, budget)
      .real();
}

}  // namespace umbra
