#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fqubit/errors.hpp"
#include "fqubit/floquet.hpp"
#include "fqubit/specfun.hpp"
#include "oracles.hpp"

using namespace fqubit;

namespace {

constexpr double kPi = std::numbers::pi;

SystemParams resonant(int order, double ratio, double delta_over_mod = 40.0) {
  SystemParams p;
  p.order = order;
  p.carrier = 1.0;
  p.epsilon0 = order;
  p.delta_gap = 1e-2;
  p.modulation = p.delta_gap / delta_over_mod;
  p.amplitude = ratio;
  return p;
}

}  // namespace

TEST(Envelope, TunnelingAmplitude) {
  SystemParams p = resonant(1, 0.1, 34.0);
  const double node = 0.5 * kPi / p.modulation;
  EXPECT_NEAR(tunneling_amplitude(p, node).amplitude, 0.0, 1e-15);
  EXPECT_NEAR(tunneling_amplitude(p, node).argument, 0.0, 1e-15);
  const auto a0 = tunneling_amplitude(p, 0.0);
  EXPECT_DOUBLE_EQ(a0.argument, 0.2);
  EXPECT_DOUBLE_EQ(a0.amplitude, 0.5 * p.delta_gap * bessel_j(1, 0.2));
  p.amplitude = 0.0;
  for (double t = 0.0; t < 1e4; t += 777.0) EXPECT_EQ(tunneling_amplitude(p, t).amplitude, 0.0);
}

// For small A/w0, |amplitude|^2 follows the cos^2(delta t) envelope.
TEST(Envelope, SquaredAmplitudeFollowsCosineSquared) {
  const SystemParams p = resonant(1, 0.1, 34.0);
  const double peak = std::pow(tunneling_amplitude(p, 0.0).amplitude, 2);
  for (double x = 0.0; x < kPi; x += 0.1) {
    const double t = x / p.modulation;
    const double c2 = std::pow(std::cos(x), 2);
    EXPECT_NEAR(std::pow(tunneling_amplitude(p, t).amplitude, 2), peak * c2, 0.01 * peak);
  }
}

TEST(MeanBessel, FrozenQuadratureValues) {
  EXPECT_EQ(mean_bessel(1, 0.0), 0.0);
  // 40-digit adaptive quadrature of the defining integral.
  EXPECT_NEAR(mean_bessel(1, 0.1), 0.063450053386078277, 1e-10);
  EXPECT_NEAR(mean_bessel(1, 1.0), 0.4507735383608561, 1e-10);
  EXPECT_NEAR(mean_bessel(2, 1.0), 0.19364451801445908, 1e-10);
  EXPECT_NEAR(mean_bessel(3, 2.5), 0.27570928433961959, 1e-10);
  EXPECT_NEAR(mean_bessel(2, 0.1), 0.0024937565066203477, 1e-10);
  EXPECT_NEAR(mean_bessel(1, 5.0), 0.11707892982083509, 1e-10);
  EXPECT_NEAR(mean_bessel(2, 10.5), 0.0062173247436503781, 1e-10);
}

TEST(MeanBessel, SmallArgumentSeries) {
  const double r = 0.1;
  const double series = 2.0 / kPi * r - r * r * r * (4.0 / (3.0 * kPi)) / 2.0;
  EXPECT_NEAR(mean_bessel(1, r), series, 1e-6);
}

TEST(MeanBessel, SquaredHalfOrderIdentity) {
  for (int n = 1; n <= 4; ++n) {
    for (double r = 0.05; r < 12.0; r += 0.45) {
      EXPECT_NEAR(mean_bessel(n, r), oracle::mean_bessel_identity(n, r), 1e-10) << n << " " << r;
    }
  }
}

TEST(MeanBessel, QuotedZeros) {
  EXPECT_NEAR(mean_bessel(1, 3.13), 0.0, 2e-3);
  EXPECT_NEAR(mean_bessel(2, 3.8), 0.0, 2e-3);
}

TEST(MeanBessel, DerivativeMatchesFiniteDifference) {
  for (int n : {1, 2, 3}) {
    for (double r : {0.3, 2.0, 5.5, 9.1}) {
      const double h = 1e-5;
      const double fd = (mean_bessel(n, r + h) - mean_bessel(n, r - h)) / (2 * h);
      EXPECT_NEAR(mean_bessel_derivative(n, r), fd, 1e-7) << n << " " << r;
    }
  }
}

TEST(Quasienergy, SignAndValues) {
  SystemParams p = resonant(1, 0.1);
  p.delta_gap = 1.0;
  EXPECT_NEAR(quasienergy(p), -0.5 * 0.063450053386078277, 1e-10);
  EXPECT_NEAR(quasienergy(p), -0.03172, 1e-5);  // quoted to four digits
  p.amplitude = 0.0;
  EXPECT_EQ(quasienergy(p), 0.0);

  SystemParams q = resonant(2, 3.8);
  EXPECT_NEAR(quasienergy(q), 0.0, 2e-3 * q.delta_gap);
}

TEST(Quasienergy, SignLawBelowFirstZero) {
  for (int n = 1; n <= 3; ++n) {
    for (double r = 0.1; r < 3.0; r += 0.2) {
      const double e = quasienergy(resonant(n, r));
      EXPECT_GT(e * (n % 2 ? -1.0 : 1.0), 0.0) << n << " " << r;
    }
  }
}

TEST(Quasienergy, PairSumsToZero) {
  // Branch energies from two independent quadratures of +J and -J.
  const SystemParams p = resonant(2, 1.7);
  const auto pair = quasienergy_pair(p);
  EXPECT_EQ(pair.plus + pair.minus, 0.0);
  const double plus = 0.5 * p.delta_gap *
                      oracle::simpson([&](double u) { return bessel_j(2, 2 * 1.7 * std::fabs(std::cos(u))); }, 0, kPi, 4000) / kPi;
  const double minus = -0.5 * p.delta_gap *
                       oracle::simpson([&](double u) { return bessel_j(2, 2 * 1.7 * std::fabs(std::cos(u))); }, 0, kPi, 4000) / kPi;
  EXPECT_NEAR(pair.plus, plus, 1e-10);
  EXPECT_NEAR(pair.minus, minus, 1e-10);
  EXPECT_EQ(plus + minus, 0.0);
}

TEST(PhaseDecomposition, FrozenPeriodicPart) {
  // Phi_N at 0.3 T and 0.7 T for Delta = 1e-2, delta = 2.5e-4, A/w0 = 1.
  const SystemParams p2 = resonant(2, 1.0);
  const PhaseDecomposition d2(p2);
  EXPECT_NEAR(d2.periodic_part(0.3 * d2.period()), 1.721874879432642, 1e-9);
  EXPECT_NEAR(d2.periodic_part(0.7 * d2.period()), -1.721874879432642, 1e-9);
  EXPECT_NEAR(d2.periodic_part_interpolated(0.3 * d2.period()), 1.721874879432642, 1e-9);
  const PhaseDecomposition d1(resonant(1, 1.0));
  EXPECT_NEAR(d1.periodic_part(0.3 * d1.period()), 2.1733922736335842, 1e-9);
  EXPECT_NEAR(d1.periodic_part_interpolated(0.7 * d1.period()), -2.1733922736335842, 1e-9);
}

TEST(PhaseDecomposition, Fields) {
  const SystemParams p = resonant(2, 1.0);
  const PhaseDecomposition d(p);
  EXPECT_DOUBLE_EQ(d.period(), kPi / p.modulation);
  EXPECT_DOUBLE_EQ(d.slope(), 0.5 * p.delta_gap * mean_bessel(p));
  EXPECT_DOUBLE_EQ(d.quasienergy(), quasienergy(p));
  EXPECT_EQ(d.periodic_part(0.0), 0.0);
  EXPECT_EQ(d.periodic_part_interpolated(0.0), 0.0);
}

TEST(PhaseDecomposition, PeriodicToTightTolerance) {
  for (int n : {1, 2}) {
    const PhaseDecomposition d(resonant(n, 1.0, 12.0));
    const double bound = 1e-8 * std::max(1.0, std::fabs(d.slope()) * d.period());
    std::mt19937_64 rng(n);
    std::uniform_real_distribution<double> u(0.0, 10.0 * d.period());
    for (int i = 0; i < 1000; ++i) {
      const double t = u(rng);
      EXPECT_NEAR(d.periodic_part_interpolated(t + d.period()), d.periodic_part_interpolated(t), bound);
    }
  }
}

TEST(PhaseDecomposition, TableMatchesQuadrature) {
  const PhaseDecomposition d(resonant(1, 3.0));
  for (double f = 0.013; f < 1.0; f += 0.0917) {
    const double t = f * d.period();
    EXPECT_NEAR(d.periodic_part_interpolated(t), d.periodic_part(t), 1e-9) << f;
  }
}

TEST(PhaseGamma, OriginAndFullPeriods) {
  const SystemParams p = resonant(2, 1.0, 31.0);
  const auto g0 = phase_gamma(p, 0.0);
  EXPECT_EQ(g0.gamma, 0.0);
  for (int k = 1; k <= 3; ++k) {
    const double t = k * p.period();
    const auto g = phase_gamma(p, t);
    EXPECT_NEAR(g.gamma, g.decomposition.slope() * t, 1e-10 * std::max(1.0, g.gamma));
  }
}

TEST(PhaseGamma, DecompositionConsistency) {
  const SystemParams p = resonant(1, 1.0, 12.0);
  const PhaseDecomposition d(p);
  const double period = d.period();
  for (double t = 0.0; t < 4 * period; t += 0.173 * period) {
    const double g = phase_gamma_direct(p, t);
    EXPECT_NEAR(g, d.slope() * t + d.periodic_part(t), 1e-8);
    const double shifted = phase_gamma_direct(p, t + period) - d.slope() * (t + period);
    EXPECT_NEAR(shifted, g - d.slope() * t, 1e-8);
  }
  EXPECT_THROW(phase_gamma(p, -1.0), PreconditionError);
}

// Staircase: gamma grows fast near delta t = k pi and stalls near pi/2 + k pi.
TEST(PhaseGamma, StaircaseGrowth) {
  const SystemParams p = resonant(1, 1.0, 12.0);
  const double t_step = 0.1 / p.modulation;
  const double fast = phase_gamma_direct(p, t_step);
  const double slow = phase_gamma_direct(p, 0.5 * kPi / p.modulation + 0.05 / p.modulation) -
                      phase_gamma_direct(p, 0.5 * kPi / p.modulation - 0.05 / p.modulation);
  EXPECT_GT(fast, 10.0 * slow);
}

TEST(FourierPhase, CoefficientsAndSymmetry) {
  const SystemParams p = resonant(1, 1.0);
  const FourierPhase f = fourier_phase(p, 8);
  EXPECT_NEAR(f.coefficient(0).real(), mean_bessel(p), 1e-9);
  EXPECT_EQ(f.coefficient(0).imag(), 0.0);
  // 40-digit values; the imaginary parts vanish by symmetry of |cos|.
  EXPECT_NEAR(f.coefficient(1).real(), 0.10359212643337123, 1e-12);
  EXPECT_NEAR(f.coefficient(2).real(), -0.054570014261440028, 1e-12);
  EXPECT_NEAR(f.coefficient(5).real(), 0.0066526681771296206, 1e-12);
  for (int n = 1; n <= 8; ++n) {
    EXPECT_NEAR(std::abs(f.coefficient(-n) - std::conj(f.coefficient(n))), 0.0, 1e-14);
    EXPECT_NEAR(f.coefficient(n).imag(), 0.0, 1e-13);
  }
  EXPECT_THROW(fourier_phase(p, 0), DomainError);
}

TEST(FourierPhase, ZeroDrive) {
  const FourierPhase f = fourier_phase(resonant(1, 0.0), 4);
  for (const auto& c : f.coefficients) EXPECT_EQ(c, cplx(0.0));
}

TEST(FourierPhase, ReconstructionMatchesQuadrature) {
  const SystemParams p = resonant(1, 1.0, 1.0);  // small Delta/delta keeps Phi_N O(1)
  const PhaseDecomposition d(p);
  const FourierPhase f = fourier_phase(p, 64);
  for (double x = 0.05; x < 1.0; x += 0.1) {
    const double t = x * d.period();
    EXPECT_NEAR(f.periodic_part(t), d.periodic_part(t), 1e-6) << x;
  }
}

TEST(QesState, PeriodicUnitNormStates) {
  const SystemParams p = resonant(2, 1.0);
  const PhaseDecomposition d(p);
  const double s = 1.0 / std::sqrt(2.0);
  const auto q0 = qes_state(d, Branch::plus, 0.0);
  EXPECT_NEAR(std::abs(q0.c1 - cplx(s)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(q0.c2 - cplx(s)), 0.0, 1e-15);
  const auto qt = qes_state(d, Branch::plus, d.period());
  EXPECT_NEAR(std::abs(qt.c1 - cplx(s)), 0.0, 1e-9);
  EXPECT_NEAR(std::abs(qt.c2 - cplx(s)), 0.0, 1e-9);
  const auto qm = qes_state(p, Branch::minus, 0.0);
  EXPECT_NEAR(std::abs(qm.c2 + cplx(s)), 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(qm.quasienergy, -d.quasienergy());

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 20.0 * d.period());
  for (int i = 0; i < 50; ++i) {
    for (Branch b : {Branch::plus, Branch::minus}) {
      const auto q = qes_state(d, b, u(rng));
      EXPECT_NEAR(std::norm(q.c1) + std::norm(q.c2), 1.0, 1e-12);
    }
  }
}

TEST(WeakForms, MomentFactorAndBracket) {
  EXPECT_NEAR(weak_mean(1, 1.0), 2.0 / kPi, 1e-12);
  EXPECT_NEAR(weak_mean_bracket(1, 1.0), 1.0 / std::sqrt(kPi), 1e-12);
  EXPECT_NEAR(weak_mean_bracket(1, 1.0) / weak_mean(1, 1.0), std::sqrt(kPi) / 2.0, 1e-12);
  for (int n = 1; n <= 5; ++n) {
    const double simplified = 2.0 / (std::sqrt(kPi) * std::tgamma(n + 1.0) * (1.0 + n));
    EXPECT_NEAR(weak_mean_bracket(n, 1.0), simplified, 1e-12) << n;
  }
}

TEST(WeakForms, PrimitiveAtCosineNode) {
  EXPECT_NEAR(weak_phase_primitive(1, kPi / 2), 1.0, 1e-12);
  EXPECT_NEAR(weak_phase_primitive(1, kPi), 2.0, 1e-12);
  EXPECT_NEAR(weak_phase_primitive(2, 0.0), 0.0, 1e-15);
  EXPECT_THROW(weak_phase_primitive(1, 3.5), DomainError);
}

TEST(WeakForms, PrimitiveIsTheIntegralOfCosPower) {
  for (int n = 1; n <= 4; ++n) {
    for (double theta : {0.2, 1.0, 1.6, 2.5, 3.0}) {
      const double direct = oracle::simpson([n](double u) { return std::pow(std::fabs(std::cos(u)), n); },
                                            0.0, std::min(theta, kPi / 2), 2000) +
                            (theta > kPi / 2 ? oracle::simpson([n](double u) { return std::pow(std::fabs(std::cos(u)), n); },
                                                               kPi / 2, theta, 2000)
                                             : 0.0);
      EXPECT_NEAR(weak_phase_primitive(n, theta), direct, 1e-10) << n << " " << theta;
    }
  }
}

TEST(WeakForms, WeakPhaseTracksQuadrature) {
  const SystemParams p = resonant(2, 0.05, 401.0);
  const PhaseDecomposition d(p);
  double scale = 0.0;
  for (double x = 0.0; x < 1.0; x += 0.05) scale = std::max(scale, std::fabs(d.periodic_part(x * d.period())));
  for (double x = 0.05; x < 1.0; x += 0.1) {
    const double t = x * d.period();
    const auto w = weak_forms(p, t);
    EXPECT_NEAR(w.phi_weak, d.periodic_part(t), 0.01 * scale) << x;
  }
  const auto w = weak_forms(p, 0.0);
  EXPECT_NEAR(w.mean_quadrature / mean_bessel(p), 1.0, 0.01);
  EXPECT_NEAR(w.phi_weak, 0.0, 1e-15);
  EXPECT_NEAR(weak_forms(p, d.period()).phi_weak, 0.0, 1e-12);
}

TEST(WeakForms, RejectsStrongDrive) { EXPECT_THROW(weak_forms(resonant(1, 0.31), 0.0), PreconditionError); }

TEST(Graf, SeriesEqualsClosedForm) {
  for (int n = 0; n <= 3; ++n) {
    for (double g : {0.0, 0.7, 2.0, kPi, 4.5}) {
      const cplx s = graf_series(n, 0.8, 1.9, g, 60);
      const cplx c = graf_closed_form(n, 0.8, 1.9, g);
      EXPECT_NEAR(std::abs(s - c), 0.0, 1e-12) << n << " " << g;
    }
  }
  EXPECT_THROW(graf_closed_form(1, 2.0, 1.0, 0.5), DomainError);
}
