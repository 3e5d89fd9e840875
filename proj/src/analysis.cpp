#include "fqubit/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "fqubit/errors.hpp"
#include "fqubit/floquet.hpp"
#include "fqubit/specfun.hpp"

namespace fqubit {
namespace {

template <class F>
double bisect(F&& f, double lo, double hi, double f_lo, double tol) {
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Linear interpolation on a strictly increasing grid; t inside the grid.
double interpolate(const std::vector<double>& ts, const std::vector<double>& ys, double t) {
  auto it = std::upper_bound(ts.begin(), ts.end(), t);
  if (it == ts.begin()) return ys.front();
  if (it == ts.end()) return ys.back();
  const auto k = static_cast<std::size_t>(it - ts.begin());
  const double x = (t - ts[k - 1]) / (ts[k] - ts[k - 1]);
  return ys[k - 1] + x * (ys[k] - ys[k - 1]);
}

}  // namespace

std::vector<double> quasienergy_zeros(const SystemParams& p_base, double ratio_min, double ratio_max, double tol,
                                      Exec exec) {
  if (!(ratio_min >= 0.0)) throw PreconditionError("quasienergy_zeros: ratio_min must be >= 0");
  if (!(tol > 0.0)) throw PreconditionError("quasienergy_zeros: tol must be positive");
  std::vector<double> zeros;
  if (!(ratio_max > ratio_min)) return zeros;

  const int order = p_base.order;
  const auto cells = static_cast<std::size_t>(std::ceil((ratio_max - ratio_min) / kZeroScanStep - 1e-9));
  std::vector<double> grid(cells + 1);
  for (std::size_t k = 0; k <= cells; ++k) grid[k] = std::min(ratio_min + kZeroScanStep * k, ratio_max);
  const std::vector<ScanPoint> scan = scan_mean_bessel(order, grid, exec);

  const auto mean = [order](double r) { return mean_bessel(order, r); };
  const auto slope = [order](double r) { return mean_bessel_derivative(order, r); };
  for (std::size_t k = 0; k < cells; ++k) {
    const ScanPoint& a = scan[k];
    const ScanPoint& b = scan[k + 1];
    if (a.mean == 0.0 && a.ratio > 0.0) {
      zeros.push_back(a.ratio);
      continue;
    }
    if ((a.mean < 0.0) != (b.mean < 0.0) && b.mean != 0.0) {
      zeros.push_back(bisect(mean, a.ratio, b.ratio, a.mean, tol));
    } else if (a.derivative < 0.0 && b.derivative > 0.0) {
      const double r = bisect(slope, a.ratio, b.ratio, a.derivative, tol);
      if (std::fabs(mean(r)) <= kTouchingZeroLevel) zeros.push_back(r);
    }
  }
  return zeros;
}

PeriodicityResult periodicity_residual(const SystemParams& p, int m, int n, double tol) {
  if (m < 1 || n < 1) throw PreconditionError("periodicity_residual: m and n must be positive");
  check_params(p);
  const double e = std::fabs(quasienergy(p));
  PeriodicityResult out{m, n, std::fabs(m * e - n * p.modulation) / p.modulation, false};
  out.is_periodic = out.residual < tol;
  return out;
}

PeriodicityResult find_periodicity(const SystemParams& p, int max_m, double tol) {
  if (max_m < 1) throw PreconditionError("find_periodicity: max_m must be positive");
  check_params(p);
  const double e = std::fabs(quasienergy(p));
  PeriodicityResult best{1, 1, std::numeric_limits<double>::infinity(), false};
  for (int m = 1; m <= max_m; ++m) {
    const int n = std::max(1, static_cast<int>(std::lround(m * e / p.modulation)));
    PeriodicityResult r{m, n, std::fabs(m * e - n * p.modulation) / p.modulation, false};
    r.is_periodic = r.residual < tol;
    if (r.is_periodic) return r;
    if (r.residual < best.residual) best = r;
  }
  return best;
}

PeriodicRatio solve_periodic_ratio(const SystemParams& p_base, int m, int n) {
  if (m < 1 || n < 1) throw PreconditionError("solve_periodic_ratio: m and n must be positive");
  const double mean = mean_bessel(p_base.order, p_base.ratio());
  return {0.5 * mean * m / n, mean == 0.0};
}

double weak_periodic_ratio(int order, double ratio, int m, int n) {
  if (m < 1 || n < 1) throw PreconditionError("weak_periodic_ratio: m and n must be positive");
  const double nn = order;
  const double lhs = std::pow(ratio, nn) / gamma_fn(nn + 1.0) * std::sqrt(std::numbers::pi) *
                     gamma_fn(0.5 * (1.0 + nn)) / gamma_fn(1.0 + 0.5 * nn);
  // lhs * Delta / (2 delta) = pi n / m.
  return lhs * m / (2.0 * std::numbers::pi * n);
}

double trace_periodicity_check(const PopulationTrace& trace, double period, int reps, double tol) {
  if (!(period > 0.0) || reps < 1) throw PreconditionError("trace_periodicity_check: need period > 0, reps >= 1");
  if (!(tol > 0.0)) throw PreconditionError("trace_periodicity_check: tol must be positive");
  if (trace.size() < 2) throw PreconditionError("trace_periodicity_check: trace too short");
  const double t0 = trace.times.front();
  const double t_last = trace.times.back();
  const double needed = (reps + 1) * period;
  // Uniform grids accumulate rounding in their last sample.
  if (t_last - t0 < needed * (1.0 - 1e-12)) {
    throw PreconditionError("trace_periodicity_check: trace spans less than (reps + 1) periods");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const double t = trace.times[i];
    if (t + reps * period > t_last) break;
    for (int k = 1; k <= reps; ++k) {
      const double shifted = interpolate(trace.times, trace.p1, t + k * period);
      worst = std::max(worst, std::fabs(shifted - trace.p1[i]));
    }
  }
  return worst;
}

int default_index_cutoff(const SystemParams& p) { return static_cast<int>(std::ceil(p.ratio())) + 20; }

std::vector<SpectralLine> spectral_lines(const SystemParams& p, double weight_threshold, int index_cutoff,
                                         Exec exec) {
  check_params(p);
  const int cutoff = index_cutoff < 0 ? default_index_cutoff(p) : index_cutoff;
  const std::vector<double> weights = spectral_weight_grid(p.ratio(), cutoff, exec);
  const double stark = 2.0 * quasienergy(p);
  const auto side = static_cast<std::size_t>(2 * cutoff + 1);

  std::vector<SpectralLine> lines;
  for (int m = -cutoff; m <= cutoff; ++m) {
    for (int n = -cutoff; n <= cutoff; ++n) {
      const double w = weights[static_cast<std::size_t>(m + cutoff) * side + static_cast<std::size_t>(n + cutoff)];
      if (w < weight_threshold) continue;
      const double f = p.epsilon0 + m * p.carrier + stark + (2 * n - m) * p.modulation;
      const LineKind kind = f > 0.0 ? LineKind::absorption : f < 0.0 ? LineKind::amplification : LineKind::zero_frequency;
      lines.push_back({m, n, f, w, kind});
    }
  }
  return lines;
}

std::vector<double> xconfig_spectral_lines(double omega0, double delta_mod, int n_range) {
  if (n_range < 0) throw PreconditionError("xconfig_spectral_lines: n_range must be >= 0");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(2 * n_range + 1));
  for (int n = -n_range; n <= n_range; ++n) out.push_back(omega0 + n * delta_mod);
  return out;
}

}  // namespace fqubit
