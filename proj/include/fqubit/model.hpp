#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

namespace fqubit {

using cplx = std::complex<double>;

/// Qubit plus amplitude-modulated drive. Units: hbar = 1, every energy and
/// frequency shares one angular-frequency unit.
struct SystemParams {
  double epsilon0 = 0.0;    ///< qubit bias
  double delta_gap = 0.0;   ///< tunneling amplitude
  double amplitude = 0.0;   ///< drive amplitude A >= 0
  double carrier = 1.0;     ///< carrier frequency w0 > 0
  double modulation = 1e-3; ///< modulation frequency, 0 < delta < w0
  int order = 1;            ///< resonance order N >= 1

  double ratio() const { return amplitude / carrier; }
  double detuning() const { return epsilon0 - order * carrier; }
  /// Period of the coupling envelope |cos(delta t)|.
  double period() const;
  /// Bessel arguments of the two spectral components, A/(w0+delta) and A/(w0-delta).
  double z1() const { return amplitude / (carrier + modulation); }
  double z2() const { return amplitude / (carrier - modulation); }
};

/// Throws DomainError unless carrier > 0, 0 < modulation < carrier,
/// amplitude >= 0, order >= 1 and all fields are finite.
void check_params(const SystemParams& p);

enum class Axis { z, x };

/// 2x2 matrix in the (|down>, |up>) basis, row-major.
struct Matrix2 {
  std::array<cplx, 4> m{};

  cplx& operator()(int r, int c) { return m[2 * r + c]; }
  const cplx& operator()(int r, int c) const { return m[2 * r + c]; }
  Matrix2 adjoint() const;
  bool is_hermitian(double tol = 1e-14) const;
  friend Matrix2 operator*(const Matrix2& a, const Matrix2& b);
  friend Matrix2 operator+(const Matrix2& a, const Matrix2& b);
  friend Matrix2 operator*(cplx s, const Matrix2& a);
};

/// Hamiltonians here are Hermitian by construction; the alias documents intent.
using HermitianMatrix2 = Matrix2;

namespace pauli {
Matrix2 identity();
Matrix2 x();
Matrix2 y();
/// diag(+1, -1): |down> (index 0) is the lower level of -eps0/2 sigma_z.
Matrix2 z();
}  // namespace pauli

/// f(t) = 2 A cos(w0 t) cos(delta t).
double drive_field(const SystemParams& p, double t);
/// Same field written as the two-component sum A[cos((w0-delta)t) + cos((w0+delta)t)].
double drive_field_bichromatic(const SystemParams& p, double t);

/// Dynamic phase of the drive propagator:
/// phi(t) = (eps0 t + (A/w1) sin(w1 t) + (A/w2) sin(w2 t)) / 2, w1,2 = w0 -/+ delta.
double phase_phi(const SystemParams& p, double t);

/// z: -(eps0+f)/2 sigma_z - Delta/2 sigma_x.  x: -Delta/2 sigma_z - (eps0+f)/2 sigma_x.
HermitianMatrix2 hamiltonian(const SystemParams& p, Axis axis, double t);

/// exp(-i theta sigma_y / 2).
Matrix2 rotation_y(double theta);

struct RegimeReport {
  double detuning = 0.0;
  std::vector<std::string> warnings;
};

// Heuristic validity thresholds of the resonance approximation.
inline constexpr double kMaxModulationRatio = 0.05;
inline constexpr double kMaxRelativeDetuning = 0.01;
inline constexpr double kMaxRelativeGap = 0.1;

RegimeReport validate_regime(const SystemParams& p);

struct CircuitControls {
  double bx = 0.0;
  double bz = 0.0;
};

/// Charge-qubit control relations: bx = 2 EJ0 cos(pi Phi/Phi0), bz = 4 EC (1 - Cg Vg / e).
/// `cg` is carried for the record; the gate charge already includes it.
CircuitControls circuit_controls(double ej0, double ec, double cg, double flux_ratio,
                                 double gate_charge);

}  // namespace fqubit
