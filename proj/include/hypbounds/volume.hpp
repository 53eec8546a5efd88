#pragma once

#include <map>
#include <string>

namespace hyp {

struct Estimate {
  double value = 0.0;
  double error = 0.0;  // absolute
};

/// Lobachevsky function -∫_0^x log|2 sin t| dt.
///
/// The argument is reduced to [0, π/2] using oddness and π-periodicity.
/// There the integrand splits as -log(2t) - log(sin t / t): the first part
/// integrates in closed form and the second is smooth on the whole range,
/// handled by adaptive Gauss–Kronrod (7/15). The returned error is the
/// accumulated |K15 - G7| estimate plus a rounding allowance and stays
/// below 1e-14. DomainError for non-finite x.
Estimate lobachevsky_estimate(double x);
double lobachevsky(double x);

// π/2 - arccos(1 / (2 cos(π/n))), n >= 5.
double theta(long n);

// Volume of the regular ideal tetrahedron, 2Λ(π/6).
double v3();
Estimate v3_estimate();

struct VolumeResult {
  double value = 0.0;
  double error_bound = 0.0;
  std::map<std::string, double> parameters;  // "theta", or "a_n" and "b_n"
};

/// Volume of every Löbell manifold of order n (eight copies of R(n)):
/// 4n(2Λ(θ) + Λ(θ + π/n) + Λ(θ - π/n) - Λ(2θ - π/2)). n >= 5.
VolumeResult lobell_volume(long n);

struct FibonacciParameters {
  double a;
  double b;
};

/// b_n = π/n and a_n = arccos(cos(2 b_n) - 1/2) / 2, n >= 4.
FibonacciParameters fibonacci_parameters(long n);

/// Volume of the Fibonacci manifold M(n): 2n(Λ(a_n + b_n) + Λ(a_n - b_n)).
VolumeResult fibonacci_volume(long n);

}  // namespace hyp
