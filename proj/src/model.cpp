#include "fqubit/model.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "fqubit/errors.hpp"

namespace fqubit {

double SystemParams::period() const { return std::numbers::pi / modulation; }

void check_params(const SystemParams& p) {
  const auto finite = [](double v) { return std::isfinite(v); };
  if (!finite(p.epsilon0) || !finite(p.delta_gap) || !finite(p.amplitude) || !finite(p.carrier) ||
      !finite(p.modulation)) {
    throw DomainError("SystemParams: non-finite field");
  }
  if (!(p.carrier > 0.0)) throw DomainError("SystemParams: carrier must be positive");
  if (!(p.modulation > 0.0)) throw DomainError("SystemParams: modulation must be positive");
  if (!(p.modulation < p.carrier)) throw DomainError("SystemParams: modulation must be below carrier");
  if (p.amplitude < 0.0) throw DomainError("SystemParams: amplitude must be non-negative");
  if (p.order < 1) throw DomainError("SystemParams: order must be >= 1");
}

Matrix2 Matrix2::adjoint() const {
  Matrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = std::conj((*this)(j, i));
  return r;
}

bool Matrix2::is_hermitian(double tol) const {
  const Matrix2 a = adjoint();
  for (int k = 0; k < 4; ++k)
    if (std::abs(a.m[k] - m[k]) > tol) return false;
  return true;
}

Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
  Matrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  return r;
}

Matrix2 operator+(const Matrix2& a, const Matrix2& b) {
  Matrix2 r;
  for (int k = 0; k < 4; ++k) r.m[k] = a.m[k] + b.m[k];
  return r;
}

Matrix2 operator*(cplx s, const Matrix2& a) {
  Matrix2 r;
  for (int k = 0; k < 4; ++k) r.m[k] = s * a.m[k];
  return r;
}

namespace pauli {
Matrix2 identity() { return Matrix2{{1.0, 0.0, 0.0, 1.0}}; }
Matrix2 x() { return Matrix2{{0.0, 1.0, 1.0, 0.0}}; }
Matrix2 y() { return Matrix2{{0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0}}; }
Matrix2 z() { return Matrix2{{1.0, 0.0, 0.0, -1.0}}; }
}  // namespace pauli

double drive_field(const SystemParams& p, double t) {
  return 2.0 * p.amplitude * std::cos(p.carrier * t) * std::cos(p.modulation * t);
}

double drive_field_bichromatic(const SystemParams& p, double t) {
  return p.amplitude * (std::cos((p.carrier - p.modulation) * t) + std::cos((p.carrier + p.modulation) * t));
}

double phase_phi(const SystemParams& p, double t) {
  const double w1 = p.carrier - p.modulation;
  const double w2 = p.carrier + p.modulation;
  return 0.5 * (p.epsilon0 * t + p.amplitude / w1 * std::sin(w1 * t) +
                p.amplitude / w2 * std::sin(w2 * t));
}

HermitianMatrix2 hamiltonian(const SystemParams& p, Axis axis, double t) {
  const double driven = -0.5 * (p.epsilon0 + drive_field(p, t));
  const double tunnel = -0.5 * p.delta_gap;
  if (axis == Axis::z) return driven * pauli::z() + tunnel * pauli::x();
  return tunnel * pauli::z() + driven * pauli::x();
}

Matrix2 rotation_y(double theta) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  return Matrix2{{c, -s, s, c}};
}

RegimeReport validate_regime(const SystemParams& p) {
  RegimeReport report;
  report.detuning = p.detuning();
  if (p.modulation / p.carrier > kMaxModulationRatio) {
    report.warnings.push_back(
        fmt::format("modulation/carrier = {:.3g} exceeds {:.3g}; envelope approximation degrades",
                    p.modulation / p.carrier, kMaxModulationRatio));
  }
  if (!(p.epsilon0 > 0.0)) {
    report.warnings.push_back("epsilon0 is not positive; resonance condition undefined");
    return report;
  }
  if (std::fabs(report.detuning) / p.epsilon0 > kMaxRelativeDetuning) {
    report.warnings.push_back(fmt::format("|detuning|/epsilon0 = {:.3g} exceeds {:.3g}",
                                          std::fabs(report.detuning) / p.epsilon0,
                                          kMaxRelativeDetuning));
  }
  if (p.delta_gap / p.epsilon0 > kMaxRelativeGap) {
    report.warnings.push_back(fmt::format("delta_gap/epsilon0 = {:.3g} exceeds {:.3g}",
                                          p.delta_gap / p.epsilon0, kMaxRelativeGap));
  }
  return report;
}

CircuitControls circuit_controls(double ej0, double ec, double /*cg*/, double flux_ratio,
                                 double gate_charge) {
  return {2.0 * ej0 * std::cos(std::numbers::pi * flux_ratio), 4.0 * ec * (1.0 - gate_charge)};
}

}  // namespace fqubit
