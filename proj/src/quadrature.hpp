#pragma once

#include <functional>

namespace adams {

struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_subdivisions = 1 << 15;
  double truncation_epsilon = 1e-12;

  /// Throws InvalidArgument unless tolerances lie in (0, 1) and
  /// max_subdivisions >= 8.
  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// Adaptive Gauss-Kronrod integration of `f` over [a, b]; either endpoint may
/// be infinite (mapped onto [0, 1) by t = a + x / (1 - x)). Global adaptive
/// bisection of the panel with the largest error, up to max_subdivisions.
/// Throws QuadratureError when the error estimate exceeds
/// max(rel_tol * |integral of |f||, abs_tol).
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureSpec& spec);

}  // namespace adams
