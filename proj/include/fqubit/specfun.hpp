#pragma once

namespace fqubit {

/// Bessel function of the first kind J_order(x).
///
/// Ascending series (extended precision) for |x| < 12, normalized backward
/// recurrence for 12 <= |x| <= 50 and for high orders, Hankel asymptotic
/// expansion beyond 50 when it converges. Negative orders and arguments use
/// J_{-n}(x) = (-1)^n J_n(x) and J_n(-x) = (-1)^n J_n(x).
/// Throws DomainError for |x| > 1e3 or |order| > 200.
double bessel_j(int order, double x);

/// Gamma function for x > 0 (Lanczos, g = 7, 9 coefficients).
/// Throws DomainError for x <= 0 or NaN.
double gamma_fn(double x);

/// 2F1(1/2, (1+N)/2; (3+N)/2; z) for 1 <= N <= 10 and 0 <= z <= 1.
double hyp2f1_reduced(int order, double z);

}  // namespace fqubit
