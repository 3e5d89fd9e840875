#include "fqubit/kernels.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "fqubit/floquet.hpp"
#include "fqubit/quadrature.hpp"
#include "fqubit/specfun.hpp"
#include "parallel.hpp"

namespace fqubit {

std::vector<double> mean_bessel_grid(int order, std::span<const double> ratios, Exec exec) {
  std::vector<double> out(ratios.size());
  detail::for_each_index(ratios.size(), exec, [&](std::size_t i) { out[i] = mean_bessel(order, ratios[i]); });
  return out;
}

std::vector<ScanPoint> scan_mean_bessel(int order, std::span<const double> ratios, Exec exec) {
  std::vector<ScanPoint> out(ratios.size());
  detail::for_each_index(ratios.size(), exec, [&](std::size_t i) {
    out[i] = {ratios[i], mean_bessel(order, ratios[i]), mean_bessel_derivative(order, ratios[i])};
  });
  return out;
}

std::vector<double> quasienergy_sweep(const SystemParams& base, std::span<const double> ratios,
                                      Exec exec) {
  std::vector<double> out = mean_bessel_grid(base.order, ratios, exec);
  const double sign = base.order % 2 == 0 ? 1.0 : -1.0;
  for (double& v : out) v *= sign * 0.5 * base.delta_gap;
  return out;
}

std::vector<double> cumulative_envelope_integral(const SystemParams& p, std::size_t cells, Exec exec) {
  check_params(p);
  const double period = p.period();
  const double half = 0.5 * period;
  const double h = period / static_cast<double>(cells);
  const auto integrand = [&p](double tau) { return bessel_j(p.order, envelope_argument(p, tau)); };

  std::vector<double> pieces(cells);
  detail::for_each_index(cells, exec, [&](std::size_t k) {
    const double a = h * static_cast<double>(k);
    const double b = k + 1 == cells ? period : a + h;
    const double tol = 1e-15 * period;
    if (a < half && half < b) {
      const std::array<double, 3> breaks{a, half, b};
      pieces[k] = integrate_pieces(integrand, breaks, tol).value;
    } else {
      pieces[k] = integrate(integrand, a, b, tol).value;
    }
  });

  std::vector<double> cumulative(cells + 1, 0.0);
  for (std::size_t k = 0; k < cells; ++k) cumulative[k + 1] = cumulative[k] + pieces[k];
  return cumulative;
}

std::vector<cplx> envelope_fourier_coefficients(int order, double ratio, int n_max, Exec exec) {
  const std::size_t count = static_cast<std::size_t>(2 * n_max + 1);
  std::vector<cplx> out(count);
  detail::for_each_index(count, exec, [&](std::size_t idx) {
    const int n = static_cast<int>(idx) - n_max;
    // Even panel count keeps the kink at u = pi/2 on a breakpoint.
    const int panels = 2 * (std::abs(n) + 1);
    std::vector<double> breaks(static_cast<std::size_t>(panels) + 1);
    for (int k = 0; k <= panels; ++k) breaks[k] = std::numbers::pi * k / panels;
    const auto env = [=](double u) { return bessel_j(order, 2.0 * ratio * std::fabs(std::cos(u))); };
    const double re = integrate_pieces([&](double u) { return env(u) * std::cos(2.0 * n * u); }, breaks, 1e-12).value;
    const double im = integrate_pieces([&](double u) { return -env(u) * std::sin(2.0 * n * u); }, breaks, 1e-12).value;
    out[idx] = cplx(re, im) / std::numbers::pi;
  });
  return out;
}

std::vector<double> spectral_weight_grid(double ratio, int cutoff, Exec exec) {
  // J_k(r) for k in [-2 cutoff, 2 cutoff].
  const int span = 2 * cutoff;
  std::vector<double> bessel(static_cast<std::size_t>(2 * span + 1));
  for (int k = -span; k <= span; ++k) bessel[k + span] = bessel_j(k, ratio);

  const std::size_t side = static_cast<std::size_t>(2 * cutoff + 1);
  std::vector<double> out(side * side);
  detail::for_each_index(side, exec, [&](std::size_t row) {
    const int m = static_cast<int>(row) - cutoff;
    for (std::size_t col = 0; col < side; ++col) {
      const int n = static_cast<int>(col) - cutoff;
      out[row * side + col] = 2.0 * std::fabs(bessel[n + span] * bessel[m - n + span]);
    }
  });
  return out;
}

}  // namespace fqubit
