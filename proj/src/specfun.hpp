#pragma once

// Gamma-family special functions for real positive arguments.

namespace adams::specfun {

/// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

/// Gamma(x) for x > 0. Throws Domain for x <= 0 and Overflow above ~171.62.
double gamma(double x);

/// ln Gamma(x) for x > 0. This is the primitive for Gamma ratios.
double log_gamma(double x);

/// psi(x) = d/dx ln Gamma(x), x > 0.
double digamma(double x);

/// psi'(x), x > 0.
double trigamma(double x);

double euler_gamma() noexcept;

/// H_k = 1 + 1/2 + ... + 1/k, compensated summation. Requires k >= 1.
double harmonic(long long k);

}  // namespace adams::specfun
