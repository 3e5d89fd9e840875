#pragma once

#include <vector>

#include "fqubit/dynamics.hpp"
#include "fqubit/kernels.hpp"
#include "fqubit/model.hpp"

namespace fqubit {

/// Grid step of the zero scan in A/w0.
inline constexpr double kZeroScanStep = 0.02;
/// A local minimum of J̄_N at or below this value counts as a zero.
inline constexpr double kTouchingZeroLevel = 1e-6;
inline constexpr double kPeriodicityTolerance = 1e-3;

/// Zeros of A/w0 -> E_N in [ratio_min, ratio_max], to `tol` in the ratio.
///
/// J̄_N(r) = J_{N/2}(r)^2 never changes sign, so besides sign changes of
/// J̄_N the scan also brackets minima (dJ̄_N/dr going from - to +) and keeps
/// those where J̄_N <= kTouchingZeroLevel. Ascending order.
std::vector<double> quasienergy_zeros(const SystemParams& p_base, double ratio_min, double ratio_max,
                                      double tol = 1e-4, Exec exec = Exec::parallel);

/// Balance of the rationality condition m |E_N| = n delta.
struct PeriodicityResult {
  int m = 1;
  int n = 1;
  double residual = 0.0;  ///< |m |E_N| - n delta| / delta
  bool is_periodic = false;
};

/// At A = 0 the residual is n: E_N = 0 keeps P1 identically 1, which is
/// trivially periodic but is reported through the residual like any other case.
PeriodicityResult periodicity_residual(const SystemParams& p, int m, int n,
                                       double tol = kPeriodicityTolerance);

/// For each m = 1..max_m the nearest n >= 1; returns the first (m, n) under
/// `tol`, otherwise the smallest residual seen.
PeriodicityResult find_periodicity(const SystemParams& p, int max_m, double tol = kPeriodicityTolerance);

struct PeriodicRatio {
  double ratio = 0.0;       ///< delta / Delta
  bool degenerate = false;  ///< J̄_N = 0: no modulation frequency gives n >= 1
};

/// delta/Delta = (m/n) J̄_N / 2, so that m |E_N| = n delta with the amplitude
/// of p_base. Only amplitude, carrier and order are read.
PeriodicRatio solve_periodic_ratio(const SystemParams& p_base, int m, int n);

/// Weak-drive form of the same condition:
/// (1/N!) (Delta / 2 delta) r^N sqrt(pi) G((1+N)/2) / G(1+N/2) = pi n / m.
double weak_periodic_ratio(int order, double ratio, int m, int n);

/// max over trace samples t of |P1(t + k period) - P1(t)|, k = 1..reps, with
/// P1(t + k period) linearly interpolated. The trace must span at least
/// (reps + 1) periods from its first sample.
double trace_periodicity_check(const PopulationTrace& trace, double period, int reps, double tol);

enum class LineKind { absorption, amplification, zero_frequency };

struct SpectralLine {
  int m = 0;
  int n = 0;
  double frequency = 0.0;  ///< eps0 + m w0 + 2 E_N + (2n - m) delta
  double weight = 0.0;     ///< 2 |J_n(r) J_{m-n}(r)|
  LineKind kind = LineKind::absorption;
};

inline constexpr double kDefaultWeightThreshold = 1e-8;

/// ceil(A/w0) + 20.
int default_index_cutoff(const SystemParams& p);

/// Lines with |m|, |n| <= index_cutoff and weight >= weight_threshold, ordered by
/// (m, n). A negative cutoff selects default_index_cutoff.
std::vector<SpectralLine> spectral_lines(const SystemParams& p, double weight_threshold = kDefaultWeightThreshold,
                                         int index_cutoff = -1, Exec exec = Exec::parallel);

/// w0 + n delta for n = -n_range..n_range.
std::vector<double> xconfig_spectral_lines(double omega0, double delta_mod, int n_range);

}  // namespace fqubit
