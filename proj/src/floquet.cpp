#include "fqubit/floquet.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "fqubit/errors.hpp"
#include "fqubit/quadrature.hpp"
#include "fqubit/specfun.hpp"

namespace fqubit {
namespace {

constexpr double kPi = std::numbers::pi;

double parity(int order) { return order % 2 == 0 ? 1.0 : -1.0; }

// Pieces over [0, pi/2] so oscillatory integrands at large r get one panel per
// half-oscillation or so.
std::vector<double> quarter_breaks(double ratio) {
  const int pieces = 1 + static_cast<int>(ratio);
  std::vector<double> breaks(static_cast<std::size_t>(pieces) + 1);
  for (int k = 0; k <= pieces; ++k) breaks[k] = 0.5 * kPi * k / pieces;
  return breaks;
}

// int_0^s J_N(w(tau)) dtau for 0 <= s <= T, split at the kink T/2.
double envelope_integral(const SystemParams& p, double s) {
  const double half = 0.5 * p.period();
  const auto f = [&p](double tau) { return bessel_j(p.order, envelope_argument(p, tau)); };
  const double tol = 1e-13 * p.period();
  if (s <= half) return integrate(f, 0.0, s, tol).value;
  const std::array<double, 3> breaks{0.0, half, s};
  return integrate_pieces(f, breaks, tol).value;
}

double reduce_to_period(double t, double period) {
  double s = std::fmod(t, period);
  if (s < 0.0) s += period;
  return s;
}

}  // namespace

double envelope_argument(const SystemParams& p, double t) {
  return 2.0 * p.ratio() * std::fabs(std::cos(p.modulation * t));
}

TunnelingAmplitude tunneling_amplitude(const SystemParams& p, double t) {
  const double w = envelope_argument(p, t);
  return {-parity(p.order) * 0.5 * p.delta_gap * bessel_j(p.order, w), w};
}

double mean_bessel(int order, double ratio) {
  if (order < 1) throw DomainError("mean_bessel: order must be >= 1");
  if (ratio == 0.0) return 0.0;
  const auto f = [=](double u) { return bessel_j(order, 2.0 * ratio * std::cos(u)); };
  const auto breaks = quarter_breaks(ratio);
  // (1/pi) int_0^pi = (2/pi) int_0^{pi/2} by the symmetry of |cos u|.
  return 2.0 / kPi * integrate_pieces(f, breaks, 1e-2 * kMeanTolerance).value;
}

double mean_bessel(const SystemParams& p) { return mean_bessel(p.order, p.ratio()); }

double mean_bessel_derivative(int order, double ratio) {
  if (order < 1) throw DomainError("mean_bessel_derivative: order must be >= 1");
  // d/dr J_N(2 r cos u) = cos u (J_{N-1} - J_{N+1})(2 r cos u).
  const auto f = [=](double u) {
    const double c = std::cos(u);
    const double x = 2.0 * ratio * c;
    return c * (bessel_j(order - 1, x) - bessel_j(order + 1, x));
  };
  return 2.0 / kPi * integrate_pieces(f, quarter_breaks(ratio), 1e-12).value;
}

double quasienergy(const SystemParams& p) { return parity(p.order) * 0.5 * p.delta_gap * mean_bessel(p); }

QuasienergyPair quasienergy_pair(const SystemParams& p) {
  const double e = quasienergy(p);
  return {e, -e};
}

// ---------------------------------------------------------------------------

PhaseDecomposition::PhaseDecomposition(const SystemParams& p, Exec exec) {
  check_params(p);
  auto data = std::make_shared<Data>();
  data->params = p;
  data->mean = mean_bessel(p);
  data->slope = 0.5 * p.delta_gap * data->mean;
  data->quasienergy = parity(p.order) * data->slope;
  data->period = p.period();

  const std::vector<double> cumulative = cumulative_envelope_integral(p, kPhaseTableSize, exec);
  const double h = data->period / static_cast<double>(kPhaseTableSize);
  data->values.resize(kPhaseTableSize + 1);
  data->derivatives.resize(kPhaseTableSize + 1);
  for (std::size_t k = 0; k <= kPhaseTableSize; ++k) {
    const double t = h * static_cast<double>(k);
    data->values[k] = 0.5 * p.delta_gap * (cumulative[k] - data->mean * t);
    data->derivatives[k] = 0.5 * p.delta_gap * (bessel_j(p.order, envelope_argument(p, t)) - data->mean);
  }
  // Close the period exactly.
  data->values[kPhaseTableSize] = data->values[0];
  data_ = std::move(data);
}

double PhaseDecomposition::periodic_part(double t) const {
  const Data& d = *data_;
  const double s = reduce_to_period(t, d.period);
  return 0.5 * d.params.delta_gap * (envelope_integral(d.params, s) - d.mean * s);
}

double PhaseDecomposition::periodic_part_interpolated(double t) const {
  const Data& d = *data_;
  const double s = reduce_to_period(t, d.period);
  const double h = d.period / static_cast<double>(kPhaseTableSize);
  const auto k = std::min(static_cast<std::size_t>(s / h), kPhaseTableSize - 1);
  const double x = (s - h * static_cast<double>(k)) / h;
  const double x2 = x * x;
  const double x3 = x2 * x;
  // Cubic Hermite basis.
  const double h00 = 2 * x3 - 3 * x2 + 1;
  const double h10 = x3 - 2 * x2 + x;
  const double h01 = -2 * x3 + 3 * x2;
  const double h11 = x3 - x2;
  return h00 * d.values[k] + h10 * h * d.derivatives[k] + h01 * d.values[k + 1] +
         h11 * h * d.derivatives[k + 1];
}

double phase_gamma_direct(const SystemParams& p, double t) {
  if (!(t >= 0.0)) throw PreconditionError("phase_gamma: t must be non-negative");
  check_params(p);
  const double period = p.period();
  // Panels end on the kinks T/2 + kT.
  std::vector<double> breaks{0.0};
  for (int k = 0; (k + 0.5) * period < t; ++k) breaks.push_back((k + 0.5) * period);
  breaks.push_back(t);
  const auto f = [&p](double tau) { return bessel_j(p.order, envelope_argument(p, tau)); };
  const double tol = 1e-13 * std::max(t, period);
  return 0.5 * p.delta_gap * integrate_pieces(f, breaks, tol).value;
}

PhaseGamma phase_gamma(const SystemParams& p, double t) {
  return {phase_gamma_direct(p, t), PhaseDecomposition(p)};
}

// ---------------------------------------------------------------------------

double FourierPhase::periodic_part(double t) const {
  cplx sum = 0.0;
  for (int n = -n_max; n <= n_max; ++n) {
    if (n == 0) continue;
    const double k = 2.0 * kPi * n / period;
    sum += coefficient(n) / cplx(0.0, k) * (std::exp(cplx(0.0, k * t)) - 1.0);
  }
  return half_gap * sum.real();
}

FourierPhase fourier_phase(const SystemParams& p, int n_max, Exec exec) {
  if (n_max < 1) throw DomainError("fourier_phase: n_max must be >= 1");
  check_params(p);
  FourierPhase out;
  out.n_max = n_max;
  out.period = p.period();
  out.half_gap = 0.5 * p.delta_gap;
  out.coefficients = envelope_fourier_coefficients(p.order, p.ratio(), n_max, exec);
  return out;
}

// ---------------------------------------------------------------------------

QesState qes_state(const PhaseDecomposition& phase, Branch branch, double t) {
  const double sign = branch == Branch::plus ? 1.0 : -1.0;
  const int order = phase.params().order;
  const cplx factor = std::exp(cplx(0.0, sign * parity(order) * phase.periodic_part(t))) / std::sqrt(2.0);
  return {branch, sign * phase.quasienergy(), factor, sign * factor};
}

QesState qes_state(const SystemParams& p, Branch branch, double t) {
  return qes_state(PhaseDecomposition(p), branch, t);
}

// ---------------------------------------------------------------------------

double weak_mean(int order, double ratio) {
  const double n = order;
  return std::pow(ratio, n) / gamma_fn(n + 1.0) / std::sqrt(kPi) * gamma_fn(0.5 * (n + 1.0)) /
         gamma_fn(0.5 * n + 1.0);
}

double weak_mean_bracket(int order, double ratio) {
  const double n = order;
  const double g3 = gamma_fn(0.5 * (3.0 + n));
  const double g1 = gamma_fn(0.5 * (1.0 + n));
  const double bracket =
      (2.0 * g3 + (1.0 + n) * g1) / (2.0 * std::sqrt(kPi) * gamma_fn(n + 1.0) * (1.0 + n) * g3);
  return bracket * std::pow(ratio, n);
}

double weak_phase_primitive(int order, double theta) {
  if (!(theta >= 0.0 && theta <= kPi)) throw DomainError("weak_phase_primitive: theta must be in [0, pi]");
  const double n = order;
  const double wallis = 0.5 * std::sqrt(kPi) * gamma_fn(0.5 * (1.0 + n)) / gamma_fn(1.0 + 0.5 * n);
  const double c = std::cos(theta);
  return wallis - hyp2f1_reduced(order, c * c) / (1.0 + n) * c * std::pow(std::fabs(c), n);
}

WeakForms weak_forms(const SystemParams& p, double t) {
  check_params(p);
  const double r = p.ratio();
  if (r > kWeakDriveLimit) throw PreconditionError("weak_forms: A/w0 must not exceed 0.3");
  WeakForms out;
  out.mean_quadrature = weak_mean(p.order, r);
  out.mean_bracket_form = weak_mean_bracket(p.order, r);

  const double theta = p.modulation * reduce_to_period(t, p.period());
  const double full = weak_phase_primitive(p.order, kPi);
  const double scale = p.delta_gap / p.modulation * std::pow(r, p.order) / (2.0 * gamma_fn(p.order + 1.0));
  out.phi_weak = scale * (weak_phase_primitive(p.order, theta) - full * theta / kPi);
  return out;
}

// ---------------------------------------------------------------------------

cplx graf_series(int order, double z1, double z2, double gamma, int cutoff) {
  cplx sum = 0.0;
  for (int k = -cutoff; k <= cutoff; ++k) {
    sum += bessel_j(k, z1) * bessel_j(order + k, z2) * std::exp(cplx(0.0, k * gamma));
  }
  return sum;
}

cplx graf_closed_form(int order, double z1, double z2, double gamma) {
  if (!(z1 >= 0.0 && z1 < z2)) throw DomainError("graf_closed_form: need 0 <= z1 < z2");
  // w e^{i chi} = z2 - z1 e^{-i gamma}; the ratio is e^{2 i chi} and chi stays
  // in (-pi/2, pi/2), continuous in gamma and zero at gamma = pi.
  const double re = z2 - z1 * std::cos(gamma);
  const double im = z1 * std::sin(gamma);
  const double w = std::hypot(re, im);
  const double chi = std::atan2(im, re);
  return bessel_j(order, w) * std::exp(cplx(0.0, order * chi));
}

}  // namespace fqubit
