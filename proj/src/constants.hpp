#pragma once

namespace adams {

/// Derivative order m and dimension n of an Adams inequality.
struct AdamsParams {
  int m = 1;
  int n = 2;

  /// Throws Domain unless n >= 2 and 1 <= m < n.
  void validate() const;
  bool odd() const { return m % 2 == 1; }
};

struct SphereConstants {
  double omega_sphere = 0.0;  // area of the unit (n-1)-sphere
  double omega_ball = 0.0;    // volume of the unit n-ball
};

SphereConstants sphere_constants(int n);

/// ln of the unit (n-1)-sphere area, 2 pi^{n/2} / Gamma(n/2).
double log_omega_sphere(int n);

/// Sharp Adams exponent from the Gamma-ratio formula, evaluated in log space.
double beta0(const AdamsParams& params);

/// The same exponent from the integer-product re-expression:
///   even m = 2k: [n^{(n-m)/n} w^{m/n} (n-2) prod_{j=0}^{k-2} (n-m+2j)(m-2j-2)]^{n/(n-m)}
///   odd m = 2k+1: [n^{(n-m)/n} w^{m/n} prod_{j=0}^{k-1} (n-m+2j+1)(m-2j-1)]^{n/(n-m)}
double beta0_product_form(const AdamsParams& params);

/// domain_measure * (1 + exp(psi(n/m) + gamma)).
double concentration_level(const AdamsParams& params, double domain_measure);

/// (1 - grad_norm^p)^{-1/(p-1)}; Domain error once grad_norm >= 1.
double eta_exponent(double grad_norm, double p);

struct TZero {
  double raw = 0.0;
  int integer = 0;
  double sigma = 0.0;
  int n_threshold = 0;  // 2 * integer
};

/// Dimension threshold constant for the explicit extremal test function.
TZero t_zero();

}  // namespace adams
