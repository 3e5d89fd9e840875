#include "fqubit/dynamics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include <boost/numeric/odeint.hpp>

#include "fqubit/errors.hpp"
#include "fqubit/floquet.hpp"
#include "fqubit/specfun.hpp"

namespace fqubit {
namespace {

namespace odeint = boost::numeric::odeint;

// (Re c1, Im c1, Re c2, Im c2); odeint's error norms want a real state.
using State = std::array<double, 4>;
using Dopri5 = odeint::runge_kutta_dopri5<State>;

State pack(const AmplitudePair& a) { return {a.c1.real(), a.c1.imag(), a.c2.real(), a.c2.imag()}; }
AmplitudePair unpack(const State& s) { return {cplx(s[0], s[1]), cplx(s[2], s[3])}; }

void check_times(std::span<const double> times) {
  if (times.empty()) throw PreconditionError("time grid is empty");
  if (!(times.front() >= 0.0)) throw PreconditionError("time grid must start at t >= 0");
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) throw PreconditionError("time grid must be strictly increasing");
  }
}

AmplitudePair identity_map(const State& s, double) { return unpack(s); }

/// Integrates `system` from `initial` and records populations of to_lab(state, t).
template <class System, class ToLab>
PopulationTrace sample(System&& system, std::span<const double> times, const IntegrationOptions& options,
                       double max_dt, const AmplitudePair& initial, ToLab&& to_lab) {
  check_times(times);
  if (!(options.tol > 0.0)) throw PreconditionError("integration tolerance must be positive");

  std::vector<double> grid;
  grid.reserve(times.size() + 1);
  if (times.front() > 0.0) grid.push_back(0.0);
  grid.insert(grid.end(), times.begin(), times.end());
  const std::size_t skip = grid.size() - times.size();

  PopulationTrace trace;
  trace.times.assign(times.begin(), times.end());
  trace.p1.reserve(times.size());
  trace.p2.reserve(times.size());
  std::size_t seen = 0;
  const auto observe = [&](const State& s, double t) {
    if (seen++ < skip) return;
    const AmplitudePair a = to_lab(s, t);
    trace.p1.push_back(std::norm(a.c1));
    trace.p2.push_back(std::norm(a.c2));
  };

  State state = pack(initial);
  if (grid.size() == 1) {
    observe(state, grid.front());
    return trace;
  }
  try {
    auto stepper = odeint::make_dense_output(options.tol, options.tol, max_dt, Dopri5());
    odeint::integrate_times(stepper, system, state, grid.begin(), grid.end(), std::min(max_dt, 1e-3 * max_dt + grid[1]),
                            observe, odeint::max_step_checker(static_cast<int>(std::min<std::size_t>(options.max_steps, 2'000'000'000))));
  } catch (const std::exception& e) {
    throw IntegrationError(std::string("ODE integration failed: ") + e.what());
  }
  return trace;
}

double parity(int order) { return order % 2 == 0 ? 1.0 : -1.0; }

struct ReducedSystem {
  SystemParams p;
  double detuning;
  void operator()(const State& s, State& ds, double t) const {
    const double g = 0.5 * p.delta_gap * bessel_j(p.order, envelope_argument(p, t));
    // e^{i alpha} with alpha = Delta_N t - N pi.
    const double ca = parity(p.order) * std::cos(detuning * t);
    const double sa = parity(p.order) * std::sin(detuning * t);
    const cplx e_plus(ca, sa);
    const cplx c1(s[0], s[1]);
    const cplx c2(s[2], s[3]);
    const cplx i_g(0.0, g);
    const cplx d1 = i_g * std::conj(e_plus) * c2;
    const cplx d2 = i_g * e_plus * c1;
    ds = {d1.real(), d1.imag(), d2.real(), d2.imag()};
  }
};

// H_x is the Hadamard conjugate of H_z, so either axis can be integrated in
// the "driven" form -(eps0+f)/2 sigma_z - Delta/2 sigma_x or the "gap" form
// -Delta/2 sigma_z - (eps0+f)/2 sigma_x. The larger term goes on the diagonal
// and is removed exactly by the interaction frame c = exp(-i theta sigma_z) a,
// theta = integral of H_00; the RK pair then only sees the small coupling.
struct FullSystem {
  SystemParams p;
  Axis form;     // z: driven form, x: gap form
  bool rotated;  // form differs from the requested axis
  double frame_angle(double t) const { return form == Axis::z ? -phase_phi(p, t) : -0.5 * p.delta_gap * t; }
  void operator()(const State& s, State& ds, double t) const {
    const cplx coupling = hamiltonian(p, form, t)(0, 1);
    const cplx e = std::polar(1.0, 2.0 * frame_angle(t));
    const cplx a1(s[0], s[1]);
    const cplx a2(s[2], s[3]);
    const cplx minus_i(0.0, -1.0);
    const cplx d1 = minus_i * coupling * e * a2;
    const cplx d2 = minus_i * coupling * std::conj(e) * a1;
    ds = {d1.real(), d1.imag(), d2.real(), d2.imag()};
  }
  static AmplitudePair hadamard(const AmplitudePair& c) {
    const double s = std::numbers::sqrt2 / 2.0;
    return {s * (c.c1 + c.c2), s * (c.c1 - c.c2)};
  }
  AmplitudePair to_frame(const AmplitudePair& lab) const { return rotated ? hadamard(lab) : lab; }
  AmplitudePair to_lab(const State& s, double t) const {
    const cplx phase = std::polar(1.0, -frame_angle(t));
    const AmplitudePair c{phase * cplx(s[0], s[1]), std::conj(phase) * cplx(s[2], s[3])};
    return rotated ? hadamard(c) : c;
  }
};

double reduced_max_step(const SystemParams& p) {
  double scale = p.period();
  const double detuning = std::fabs(p.detuning());
  if (detuning > 0.0) scale = std::min(scale, 2.0 * std::numbers::pi / detuning);
  return scale / 20.0;
}

}  // namespace

std::vector<double> uniform_times(double t_end, std::size_t count) {
  if (count < 2) throw PreconditionError("uniform_times: need at least two samples");
  std::vector<double> out(count);
  for (std::size_t k = 0; k < count; ++k) out[k] = t_end * static_cast<double>(k) / static_cast<double>(count - 1);
  out.back() = t_end;
  return out;
}

PopulationTrace analytic_populations(const SystemParams& p, std::span<const double> times) {
  check_params(p);
  check_times(times);
  if (!(p.epsilon0 > 0.0) || std::fabs(p.detuning()) > kMaxRelativeDetuning * p.epsilon0) {
    throw PreconditionError("analytic_populations: exact resonance required (|Delta_N| <= 1% of eps0)");
  }
  const PhaseDecomposition phase(p);
  PopulationTrace trace;
  trace.times.assign(times.begin(), times.end());
  trace.p1.reserve(times.size());
  trace.p2.reserve(times.size());
  for (double t : times) {
    const double c = std::cos(phase.gamma_interpolated(t));
    trace.p1.push_back(c * c);
    trace.p2.push_back(1.0 - c * c);
  }
  return trace;
}

double rabi_frequency(const SystemParams& p, double t) {
  return 0.5 * p.delta_gap * bessel_j(p.order, envelope_argument(p, t));
}

PopulationTrace integrate_reduced(const SystemParams& p, std::span<const double> times,
                                  const IntegrationOptions& options) {
  check_params(p);
  return sample(ReducedSystem{p, p.detuning()}, times, options, reduced_max_step(p), options.initial, identity_map);
}

PopulationTrace integrate_reduced(const SystemParams& p, double t_end, double tol, std::size_t samples) {
  if (!(t_end > 0.0)) throw PreconditionError("integrate_reduced: t_end must be positive");
  IntegrationOptions options;
  options.tol = tol;
  return integrate_reduced(p, uniform_times(t_end, samples), options);
}

AmplitudePair evolve_reduced(const SystemParams& p, const AmplitudePair& initial, double t0, double t1,
                             double tol) {
  check_params(p);
  if (!(t1 >= t0)) throw PreconditionError("evolve_reduced: need t1 >= t0");
  State state = pack(initial);
  if (t1 == t0) return initial;
  const double max_dt = reduced_max_step(p);
  try {
    auto stepper = odeint::make_dense_output(tol, tol, max_dt, Dopri5());
    odeint::integrate_adaptive(stepper, ReducedSystem{p, p.detuning()}, state, t0, t1,
                               std::min(max_dt, t1 - t0));
  } catch (const std::exception& e) {
    throw IntegrationError(std::string("ODE integration failed: ") + e.what());
  }
  return unpack(state);
}

PopulationTrace integrate_full(const SystemParams& p, Axis axis, std::span<const double> times,
                               const IntegrationOptions& options) {
  check_params(p);
  // Twenty steps per turn of the fastest rotation in the frame.
  const double rate = std::max({p.carrier, std::fabs(p.epsilon0) + 2.0 * p.amplitude, std::fabs(p.delta_gap)});
  const Axis form = std::fabs(p.epsilon0) + 2.0 * p.amplitude >= std::fabs(p.delta_gap) ? Axis::z : Axis::x;
  const FullSystem system{p, form, form != axis};
  return sample(system, times, options, 2.0 * std::numbers::pi / rate / 20.0, system.to_frame(options.initial),
                [&system](const State& s, double t) { return system.to_lab(s, t); });
}

PopulationTrace integrate_full(const SystemParams& p, Axis axis, double t_end, double tol,
                               std::size_t samples) {
  if (!(t_end > 0.0)) throw PreconditionError("integrate_full: t_end must be positive");
  IntegrationOptions options;
  options.tol = tol;
  return integrate_full(p, axis, uniform_times(t_end, samples), options);
}

XConfigState xconfig_dynamics(double v, double delta_mod, double t) {
  if (delta_mod == 0.0) throw DomainError("xconfig_dynamics: modulation frequency must be nonzero");
  const double theta = v / delta_mod * std::sin(delta_mod * t);
  const double s = std::sin(theta);
  return {s * s, std::exp(cplx(0.0, theta)), std::exp(cplx(0.0, -theta)), 0.0};
}

SystemParams xconfig_params(double v, double delta_mod, double carrier) {
  SystemParams p;
  p.epsilon0 = 0.0;
  p.delta_gap = carrier;
  p.amplitude = 2.0 * std::fabs(v);
  p.carrier = carrier;
  p.modulation = delta_mod;
  p.order = 1;
  return p;
}

}  // namespace fqubit
