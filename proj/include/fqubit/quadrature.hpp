#pragma once

#include <algorithm>
#include <cmath>
#include <queue>
#include <span>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <fmt/format.h>

#include "fqubit/errors.hpp"

namespace fqubit {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
};

/// Globally adaptive 15-point Gauss-Kronrod on [a, b]: the panel with the
/// largest error estimate is bisected until the summed estimate drops below
/// max(abs_tol, 1e-13 * L1(|f|)). Throws QuadratureError otherwise.
template <class F>
QuadResult integrate(F&& f, double a, double b, double abs_tol, int max_panels = 4000) {
  if (a == b) return {};
  using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
  struct Panel {
    double a, b, value, error, l1;
    bool operator<(const Panel& o) const { return error < o.error; }
  };
  const auto rule = [&f](double lo, double hi) {
    Panel p{lo, hi, 0.0, 0.0, 0.0};
    p.value = GK::integrate(f, lo, hi, 0, 0.0, &p.error, &p.l1);
    // The single-panel error comes back on [-1, 1] without the Jacobian.
    p.error *= 0.5 * (hi - lo);
    return p;
  };
  // Error estimates below this fraction of L1 are rounding noise.
  constexpr double kRelativeFloor = 1e-13;

  std::priority_queue<Panel> panels;
  panels.push(rule(a, b));
  double value = panels.top().value;
  double error = panels.top().error;
  double l1 = panels.top().l1;
  while (error > std::max(abs_tol, kRelativeFloor * l1) && static_cast<int>(panels.size()) < max_panels) {
    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(worst.a < mid && mid < worst.b)) break;
    const Panel left = rule(worst.a, mid);
    const Panel right = rule(mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    l1 += left.l1 + right.l1 - worst.l1;
    panels.push(left);
    panels.push(right);
  }
  // Re-sum to shed the drift of the running updates.
  value = error = l1 = 0.0;
  for (; !panels.empty(); panels.pop()) {
    value += panels.top().value;
    error += panels.top().error;
    l1 += panels.top().l1;
  }
  if (!(error <= std::max(abs_tol, kRelativeFloor * l1))) {
    throw QuadratureError(fmt::format("adaptive quadrature missed tolerance: error {:.3e} > {:.3e} on [{}, {}]",
                                      error, abs_tol, a, b),
                          error);
  }
  return {value, error};
}

/// Integrates over consecutive breakpoints; the tolerance is shared evenly.
template <class F>
QuadResult integrate_pieces(F&& f, std::span<const double> breaks, double abs_tol) {
  QuadResult total;
  if (breaks.size() < 2) return total;
  const double piece_tol = abs_tol / static_cast<double>(breaks.size() - 1);
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const QuadResult r = integrate(f, breaks[i], breaks[i + 1], piece_tol);
    total.value += r.value;
    total.error += r.error;
  }
  return total;
}

}  // namespace fqubit
