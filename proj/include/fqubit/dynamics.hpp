#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "fqubit/model.hpp"

namespace fqubit {

/// Amplitudes on the diabatic basis: c1 on |down>, c2 on |up>.
struct AmplitudePair {
  cplx c1{1.0, 0.0};
  cplx c2{0.0, 0.0};

  double norm_squared() const { return std::norm(c1) + std::norm(c2); }
};

/// Sampled populations. p1 + p2 equals the squared norm of the evolved state;
/// integrators never renormalize, so the sum measures unitarity.
struct PopulationTrace {
  std::vector<double> times;
  std::vector<double> p1;
  std::vector<double> p2;

  std::size_t size() const { return times.size(); }
};

struct IntegrationOptions {
  double tol = 1e-9;          ///< relative and absolute error target per step
  AmplitudePair initial{};    ///< defaults to |down>
  std::size_t max_steps = 50'000'000;
};

/// `count` equally spaced times on [0, t_end], both ends included.
std::vector<double> uniform_times(double t_end, std::size_t count);

/// Closed-form resonant populations P1 = cos^2 gamma_N, P2 = sin^2 gamma_N
/// from the initial state |down>. Throws PreconditionError when the detuning
/// exceeds the resonance threshold of validate_regime.
PopulationTrace analytic_populations(const SystemParams& p, std::span<const double> times);

/// Instantaneous Rabi frequency d gamma_N / dt = (Delta/2) J_N(w(t)).
double rabi_frequency(const SystemParams& p, double t);

/// Reduced two-amplitude equations
///   i C1' = -(Delta/2) J_N(w) e^{-i alpha} C2,  i C2' = -(Delta/2) J_N(w) e^{i alpha} C1,
/// alpha(t) = Delta_N t - N pi, by an embedded Dormand-Prince 5(4) pair with
/// dense output sampled at `times` (strictly increasing, >= 0, starting at 0
/// or later; the state at t = 0 is `options.initial`).
PopulationTrace integrate_reduced(const SystemParams& p, std::span<const double> times,
                                  const IntegrationOptions& options = {});
PopulationTrace integrate_reduced(const SystemParams& p, double t_end, double tol = 1e-9,
                                  std::size_t samples = 1001);

/// Evolves the reduced equations from `initial` at t0 to t1 >= t0.
AmplitudePair evolve_reduced(const SystemParams& p, const AmplitudePair& initial, double t0,
                             double t1, double tol = 1e-9);

/// Full Schroedinger equation i psi' = H(t) psi with the raw Hamiltonian of
/// the chosen axis; step size capped at (2 pi / w0) / 20.
PopulationTrace integrate_full(const SystemParams& p, Axis axis, std::span<const double> times,
                               const IntegrationOptions& options = {});
PopulationTrace integrate_full(const SystemParams& p, Axis axis, double t_end, double tol = 1e-9,
                               std::size_t samples = 1001);

/// Rotating-frame solution of the x-configuration at resonance Delta E = w0:
/// propagator exp(-i (V/delta) sin(delta t) sigma_x) applied to |down>.
struct XConfigState {
  double p_up = 0.0;
  cplx qes_plus;   ///< e^{+i (V/delta) sin(delta t)}
  cplx qes_minus;  ///< e^{-i (V/delta) sin(delta t)}
  double quasienergy = 0.0;
};

XConfigState xconfig_dynamics(double v, double delta_mod, double t);

/// Raw parameters whose x-axis Hamiltonian has rotating-frame coupling
/// V cos(delta t) sigma_x at resonance: eps0 = 0, Delta = w0, A = 2 V.
SystemParams xconfig_params(double v, double delta_mod, double carrier = 1.0);

}  // namespace fqubit
