#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fqubit/errors.hpp"
#include "fqubit/model.hpp"

using namespace fqubit;

namespace {

SystemParams base() {
  SystemParams p;
  p.epsilon0 = 1.0;
  p.delta_gap = 0.01;
  p.amplitude = 0.1;
  p.carrier = 1.0;
  p.modulation = 0.01;
  p.order = 1;
  return p;
}

void expect_matrix_near(const Matrix2& a, const Matrix2& b, double tol) {
  for (int k = 0; k < 4; ++k) EXPECT_LE(std::abs(a.m[k] - b.m[k]), tol) << "entry " << k;
}

}  // namespace

TEST(Params, DerivedQuantities) {
  SystemParams p = base();
  p.epsilon0 = 2.1;
  p.order = 2;
  EXPECT_NEAR(p.detuning(), 0.1, 1e-15);
  EXPECT_DOUBLE_EQ(p.ratio(), 0.1);
  EXPECT_DOUBLE_EQ(p.period(), std::numbers::pi / 0.01);
  EXPECT_DOUBLE_EQ(p.z1(), 0.1 / 1.01);
  EXPECT_DOUBLE_EQ(p.z2(), 0.1 / 0.99);
}

TEST(Params, InvariantsEnforced) {
  SystemParams p = base();
  EXPECT_NO_THROW(check_params(p));
  p.modulation = 1.0;
  EXPECT_THROW(check_params(p), DomainError);
  p = base();
  p.amplitude = -0.1;
  EXPECT_THROW(check_params(p), DomainError);
  p = base();
  p.order = 0;
  EXPECT_THROW(check_params(p), DomainError);
  p = base();
  p.carrier = 0.0;
  EXPECT_THROW(check_params(p), DomainError);
  p = base();
  p.delta_gap = INFINITY;
  EXPECT_THROW(check_params(p), DomainError);
}

TEST(DriveField, SpecialPoints) {
  SystemParams p = base();
  EXPECT_DOUBLE_EQ(drive_field(p, 0.0), 0.2);
  EXPECT_NEAR(drive_field(p, std::numbers::pi / 2 / p.modulation), 0.0, 1e-15);
  p.amplitude = 0.0;
  EXPECT_EQ(drive_field(p, 12.3), 0.0);
}

TEST(DriveField, ProductEqualsBichromaticSum) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    SystemParams p = base();
    p.amplitude = 2.0 * u(rng);
    p.carrier = 0.5 + u(rng);
    p.modulation = 0.05 * p.carrier * u(rng) + 1e-6;
    const double t = 100.0 * u(rng);
    EXPECT_NEAR(drive_field(p, t), drive_field_bichromatic(p, t), 1e-13);
  }
}

TEST(PhasePhi, Values) {
  SystemParams p = base();
  EXPECT_EQ(phase_phi(p, 0.0), 0.0);
  p.amplitude = 0.0;
  p.epsilon0 = 2.0;
  EXPECT_DOUBLE_EQ(phase_phi(p, 1.0), 1.0);
  p = base();
  // 40-digit evaluation of the same closed form.
  EXPECT_NEAR(phase_phi(p, std::numbers::pi), 1.5708277406953647943, 1e-14);
}

TEST(PhasePhi, DerivativeIsHalfTheLongitudinalField) {
  const SystemParams p = base();
  const double h = 1e-6 / p.carrier;
  for (double t : {0.3, 7.0, 55.5, 400.0}) {
    const double fd = (phase_phi(p, t + h) - phase_phi(p, t - h)) / (2 * h);
    const double want = 0.5 * (p.epsilon0 + drive_field(p, t));
    EXPECT_LE(std::fabs(fd - want), 1e-6 * std::fabs(want)) << t;
  }
}

TEST(Hamiltonian, BareQubit) {
  SystemParams p = base();
  p.amplitude = 0.0;
  p.delta_gap = 0.0;
  const auto h = hamiltonian(p, Axis::z, 3.0);
  expect_matrix_near(h, Matrix2{{-0.5, 0.0, 0.0, 0.5}}, 1e-15);
}

TEST(Hamiltonian, DriveNode) {
  const SystemParams p = base();
  const double t = std::numbers::pi / 2 / p.modulation;
  const auto h = hamiltonian(p, Axis::z, t);
  const auto want = cplx(-0.5 * p.epsilon0) * pauli::z() + cplx(-0.5 * p.delta_gap) * pauli::x();
  expect_matrix_near(h, want, 1e-15);
}

TEST(Hamiltonian, XAxisAtOrigin) {
  const SystemParams p = base();
  const auto h = hamiltonian(p, Axis::x, 0.0);
  EXPECT_NEAR(h(0, 1).real(), -(1.0 + 0.2) / 2, 1e-15);
  EXPECT_NEAR(h(1, 0).real(), -(1.0 + 0.2) / 2, 1e-15);
  EXPECT_NEAR(h(0, 0).real(), -p.delta_gap / 2, 1e-15);
  EXPECT_NEAR(h(1, 1).real(), p.delta_gap / 2, 1e-15);
}

TEST(Hamiltonian, Hermitian) {
  const SystemParams p = base();
  for (double t = 0.0; t < 50.0; t += 1.3) {
    EXPECT_TRUE(hamiltonian(p, Axis::z, t).is_hermitian());
    EXPECT_TRUE(hamiltonian(p, Axis::x, t).is_hermitian());
  }
}

// A y rotation alone maps sigma_z -> sigma_x but sigma_x -> -sigma_z, so it
// reproduces H_x only with Delta negated; sigma_x R fixes the sign.
TEST(Hamiltonian, RotationMapsZToX) {
  const SystemParams p = base();
  const Matrix2 r = rotation_y(std::numbers::pi / 2);
  const Matrix2 exact = pauli::x() * r;
  for (double t = 0.0; t < 200.0; t += 7.7) {
    const Matrix2 hz = hamiltonian(p, Axis::z, t);
    expect_matrix_near(exact.adjoint() * hz * exact, hamiltonian(p, Axis::x, t), 1e-13);
    // The bare rotation alone reverses the sign of the driven term.
    const double driven = 0.5 * (p.epsilon0 + drive_field(p, t));
    const Matrix2 rotated = cplx(-0.5 * p.delta_gap) * pauli::z() + cplx(driven) * pauli::x();
    expect_matrix_near(r.adjoint() * hz * r, rotated, 1e-13);
  }
}

TEST(Regime, Detuning) {
  SystemParams p = base();
  EXPECT_EQ(validate_regime(p).detuning, 0.0);
  EXPECT_TRUE(validate_regime(p).warnings.empty());
  p.epsilon0 = 2.0;
  p.order = 2;
  EXPECT_EQ(validate_regime(p).detuning, 0.0);
  p = base();
  p.epsilon0 = 1.05;
  const auto r = validate_regime(p);
  EXPECT_NEAR(r.detuning, 0.05, 1e-15);
  EXPECT_EQ(r.warnings.size(), 1u);
}

TEST(Regime, OtherHeuristics) {
  SystemParams p = base();
  p.modulation = 0.06;
  EXPECT_EQ(validate_regime(p).warnings.size(), 1u);
  p = base();
  p.delta_gap = 0.2;
  EXPECT_EQ(validate_regime(p).warnings.size(), 1u);
  p = base();
  p.epsilon0 = 0.0;
  EXPECT_FALSE(validate_regime(p).warnings.empty());
}

TEST(CircuitControls, Relations) {
  EXPECT_NEAR(circuit_controls(1.0, 1.0, 0.1, 0.5, 0.0).bx, 0.0, 1e-15);
  EXPECT_NEAR(circuit_controls(1.0, 1.0, 0.1, 0.0, 1.0).bz, 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(circuit_controls(1.0, 0.5, 0.1, 0.0, 0.25).bx, 2.0);
  EXPECT_DOUBLE_EQ(circuit_controls(1.0, 0.5, 0.1, 0.0, 0.25).bz, 1.5);
}
