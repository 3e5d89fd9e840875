#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <vector>

#include "fqubit/kernels.hpp"
#include "fqubit/model.hpp"

namespace fqubit {

/// Absolute tolerance of the period-averaged Bessel mean.
inline constexpr double kMeanTolerance = 1e-10;
/// Table resolution of the periodic phase over one period.
inline constexpr std::size_t kPhaseTableSize = 4096;

/// Effective Bessel argument w(t) = 2 (A/w0) |cos(delta t)|.
double envelope_argument(const SystemParams& p, double t);

struct TunnelingAmplitude {
  double amplitude = 0.0;  ///< (-1)^{N+1} (Delta/2) J_N(w(t))
  double argument = 0.0;   ///< w(t)
};

TunnelingAmplitude tunneling_amplitude(const SystemParams& p, double t);

/// J̄_N = (1/pi) int_0^pi J_N(2 r |cos u|) du, r = A/w0. Depends only on (N, r).
double mean_bessel(int order, double ratio);
double mean_bessel(const SystemParams& p);

/// d J̄_N / d r.
double mean_bessel_derivative(int order, double ratio);

/// E_N = (-1)^N (Delta/2) J̄_N. The quasienergy pair is (+E_N, -E_N).
double quasienergy(const SystemParams& p);

struct QuasienergyPair {
  double plus = 0.0;
  double minus = 0.0;
};
QuasienergyPair quasienergy_pair(const SystemParams& p);

/// Linear-plus-periodic split gamma_N(t) = slope * t + Phi_N(t), with
/// Phi_N(0) = 0 and Phi_N(t + T) = Phi_N(t). Immutable; copies share the
/// precomputed table and are safe to use from any thread.
class PhaseDecomposition {
 public:
  explicit PhaseDecomposition(const SystemParams& p, Exec exec = Exec::parallel);

  double slope() const { return data_->slope; }
  double quasienergy() const { return data_->quasienergy; }
  double period() const { return data_->period; }
  double mean() const { return data_->mean; }
  const SystemParams& params() const { return data_->params; }

  /// Phi_N(t) by adaptive quadrature over the reduced time t mod T.
  double periodic_part(double t) const;
  /// Phi_N(t) from the table (periodic cubic Hermite interpolation).
  double periodic_part_interpolated(double t) const;

  double gamma(double t) const { return slope() * t + periodic_part(t); }
  double gamma_interpolated(double t) const { return slope() * t + periodic_part_interpolated(t); }

 private:
  struct Data {
    SystemParams params;
    double mean = 0.0;
    double slope = 0.0;
    double quasienergy = 0.0;
    double period = 0.0;
    std::vector<double> values;       // Phi_N at k T / M, k = 0..M
    std::vector<double> derivatives;  // dPhi_N/dt at the same nodes
  };
  std::shared_ptr<const Data> data_;
};

struct PhaseGamma {
  double gamma = 0.0;
  PhaseDecomposition decomposition;
};

/// gamma_N(t) = (Delta/2) int_0^t J_N(w(tau)) dtau by half-period panels
/// (split at the kinks of |cos|), together with its decomposition. t >= 0.
PhaseGamma phase_gamma(const SystemParams& p, double t);

/// Panel-wise quadrature of gamma_N(t) alone.
double phase_gamma_direct(const SystemParams& p, double t);

/// Fourier representation of J_N(w(t)) and of Phi_N.
struct FourierPhase {
  int n_max = 0;
  double period = 0.0;
  double half_gap = 0.0;           ///< Delta/2, scales the periodic part
  std::vector<cplx> coefficients;  ///< G(n) at index n + n_max

  cplx coefficient(int n) const { return coefficients.at(static_cast<std::size_t>(n + n_max)); }
  /// (Delta/2) sum_{1 <= |n| <= n_max} G(n) T/(i 2 pi n) (e^{i 2 pi n t/T} - 1).
  double periodic_part(double t) const;
};

FourierPhase fourier_phase(const SystemParams& p, int n_max, Exec exec = Exec::parallel);

enum class Branch { plus, minus };

struct QesState {
  Branch branch = Branch::plus;
  double quasienergy = 0.0;
  cplx c1;  ///< |down> amplitude
  cplx c2;  ///< |up> amplitude
};

/// Periodic factor of the quasienergetic state at exact resonance:
/// e^{+-i(-1)^N Phi_N(t)} (|down> +- |up>)/sqrt(2).
QesState qes_state(const PhaseDecomposition& phase, Branch branch, double t);
QesState qes_state(const SystemParams& p, Branch branch, double t);

/// Weak-drive (A/w0 <= 0.3) closed forms.
struct WeakForms {
  double mean_quadrature = 0.0;    ///< (1/N!) r^N (1/sqrt(pi)) G((N+1)/2)/G(N/2+1)
  double mean_bracket_form = 0.0;  ///< bracket closed form, see weak_mean_bracket
  double phi_weak = 0.0;           ///< weak-drive Phi_N(t)
};

inline constexpr double kWeakDriveLimit = 0.3;

WeakForms weak_forms(const SystemParams& p, double t);

/// Exact period average of (1/N!) r^N |cos u|^N.
double weak_mean(int order, double ratio);
/// Bracketed Gamma-function closed form of the weak-drive mean,
/// [2G((3+N)/2) + (1+N)G((1+N)/2)] / [2 sqrt(pi) N! (1+N) G((3+N)/2)] r^N.
/// For N = 1 it equals r/sqrt(pi), a factor sqrt(pi)/2 off the true 2r/pi.
double weak_mean_bracket(int order, double ratio);
/// int_0^theta |cos u|^N du for theta in [0, pi], through 2F1.
double weak_phase_primitive(int order, double theta);

/// Truncated double-Bessel sum sum_{|k| <= cutoff} J_k(z1) J_{N+k}(z2) e^{i k gamma}.
cplx graf_series(int order, double z1, double z2, double gamma, int cutoff);
/// J_N(w) ((z2 - z1 e^{-i gamma}) / (z2 - z1 e^{i gamma}))^{N/2}, w^2 = z1^2 + z2^2 - 2 z1 z2 cos gamma.
/// Requires 0 <= z1 < z2; the power follows the branch that is 1 at gamma = pi.
cplx graf_closed_form(int order, double z1, double z2, double gamma);

}  // namespace fqubit
