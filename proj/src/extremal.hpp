#pragma once

// Explicit test function beating the concentration level for m = 2.

#include "profile.hpp"
#include "quadrature.hpp"

namespace adams::extremal {

struct TestFnParams {
  int n = 0;
  double b = 0.0;
  double s = 0.0;
  double lambda = 0.0;  // 1 + ((n-2)/2) e^{b-s}
  double sigma = 0.0;   // 1 + 2/sqrt(3)
  bool admissible = false;  // 0 < s < b, equivalently lambda > n/2
};

/// Even n >= 4; odd n >= 5 only when `extended`.
TestFnParams make_params(int n, bool extended = false);

/// w(t): linear on [0, n/2], (t-1)^{(n-2)/n} on [n/2, lambda], exponential
/// saturation on [lambda, inf). C^1 at lambda. Throws Domain if inadmissible.
PiecewiseProfile test_function(const TestFnParams& params);

/// L(t) = (n/(n-2)) w''(t) - w'(t), negative on all three pieces.
PiecewiseProfile l_operator(const TestFnParams& params);

/// Minkowski-chain upper bound on (int |L|^{n/2})^{2/n}.
double norm_chain_bound(const TestFnParams& params);

/// (int_0^inf |L|^{n/2})^{2/n}. The middle piece uses its binomial
/// antiderivative for even n unless `adaptive_middle` is set.
double norm_quadrature(const TestFnParams& params, const QuadratureSpec& spec = {},
                       bool adaptive_middle = false);

/// 1 + (n/2 - 1) e^{b-s-1}.
double functional_lower_bound(const TestFnParams& params);

/// int_0^inf e^{w^{n/(n-2)}(t) - t} dt.
double functional_quadrature(const TestFnParams& params, const QuadratureSpec& spec = {});

/// 1 + e^{psi(n/2) + gamma}.
double level(int n);

/// psi(t) + gamma + (t/(t-1))^t [sigma/(t-1) - 1] + t/(t-1) + 1 - ln(t-1), t >= 2.
double eta_function(double t);

/// Smallest integer k >= 1 with eta(k + 1) < 0.
int eta_first_negative();

struct VerdictRow {
  int n = 0;
  double norm_chain_bound = 0.0;
  double norm_quadrature = 0.0;
  double functional_lower = 0.0;
  double functional_quadrature = 0.0;
  double level = 0.0;
  bool gap_analytic = false;
  bool gap_numeric = false;
};

/// n >= 16; even unless `extended`.
VerdictRow verdict(int n, const QuadratureSpec& spec = {}, bool extended = false);

}  // namespace adams::extremal
