#pragma once

// Data-parallel grid kernels. Each takes an Exec switch: `serial` is the plain
// reference loop, `parallel` the OpenMP version. Both produce bit-identical
// results in grid order.

#include <cstddef>
#include <span>
#include <vector>

#include "fqubit/model.hpp"

namespace fqubit {

enum class Exec { serial, parallel };

/// Period average of J_order(2 r |cos u|) for each r in `ratios`.
std::vector<double> mean_bessel_grid(int order, std::span<const double> ratios, Exec exec);

struct ScanPoint {
  double ratio = 0.0;
  double mean = 0.0;        ///< J̄_N(r)
  double derivative = 0.0;  ///< dJ̄_N/dr
};

/// J̄_N and its ratio derivative on a grid; feeds the zero finder.
std::vector<ScanPoint> scan_mean_bessel(int order, std::span<const double> ratios, Exec exec);

/// E_N at each ratio A/w0 with every other parameter from `base`.
std::vector<double> quasienergy_sweep(const SystemParams& base, std::span<const double> ratios,
                                      Exec exec);

/// Cumulative integral of J_N(w(tau)) on `cells` equal cells over one period
/// [0, T]; entry k holds the integral up to k*T/cells (entry 0 is 0).
std::vector<double> cumulative_envelope_integral(const SystemParams& p, std::size_t cells,
                                                 Exec exec);

/// Complex Fourier coefficients G(n), n = -n_max..n_max, of J_N(w(t)) over
/// one period. Index n + n_max.
std::vector<cplx> envelope_fourier_coefficients(int order, double ratio, int n_max, Exec exec);

/// 2 |J_n(r) J_{m-n}(r)| for |m|, |n| <= cutoff; row-major in (m, n), both
/// starting at -cutoff.
std::vector<double> spectral_weight_grid(double ratio, int cutoff, Exec exec);

}  // namespace fqubit
