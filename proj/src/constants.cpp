#include "constants.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "error.hpp"
#include "specfun.hpp"

namespace adams {

void AdamsParams::validate() const {
  if (n < 2) domain_error("AdamsParams: n must be >= 2, got " + std::to_string(n));
  if (m < 1 || m >= n) {
    domain_error("AdamsParams: need 1 <= m < n, got m = " + std::to_string(m) +
                 ", n = " + std::to_string(n));
  }
}

double log_omega_sphere(int n) {
  if (n < 1) domain_error("log_omega_sphere: n must be >= 1");
  const double half_n = 0.5 * n;
  return std::log(2.0) + half_n * std::log(std::numbers::pi) -
         specfun::log_gamma(half_n);
}

SphereConstants sphere_constants(int n) {
  // Direct evaluation is exact to a few ulp while pi^{n/2} stays finite.
  const double sphere = n >= 1 && n <= 300
                            ? 2.0 * std::pow(std::numbers::pi, 0.5 * n) / specfun::gamma(0.5 * n)
                            : std::exp(log_omega_sphere(n));
  return {sphere, sphere / n};
}

double beta0(const AdamsParams& params) {
  params.validate();
  const double m = params.m;
  const double n = params.n;
  const double log_gamma_ratio =
      params.odd() ? specfun::log_gamma(0.5 * (m + 1)) -
                         specfun::log_gamma(0.5 * (n - m + 1))
                   : specfun::log_gamma(0.5 * m) - specfun::log_gamma(0.5 * (n - m));
  const double log_bracket =
      0.5 * n * std::log(std::numbers::pi) + m * std::log(2.0) + log_gamma_ratio;
  return std::exp(std::log(n) - log_omega_sphere(params.n) +
                  n / (n - m) * log_bracket);
}

double beta0_product_form(const AdamsParams& params) {
  params.validate();
  const int m = params.m;
  const int n = params.n;
  double log_prod = 0.0;
  if (params.odd()) {
    const int k = (m - 1) / 2;
    for (int j = 0; j <= k - 1; ++j) {
      log_prod += std::log(static_cast<double>(n - m + 2 * j + 1)) +
                  std::log(static_cast<double>(m - 2 * j - 1));
    }
  } else {
    const int k = m / 2;
    log_prod = std::log(static_cast<double>(n - 2));
    for (int j = 0; j <= k - 2; ++j) {
      log_prod += std::log(static_cast<double>(n - m + 2 * j)) +
                  std::log(static_cast<double>(m - 2 * j - 2));
    }
  }
  const double dn = n;
  const double dm = m;
  const double log_bracket = (dn - dm) / dn * std::log(dn) +
                             dm / dn * log_omega_sphere(n) + log_prod;
  return std::exp(dn / (dn - dm) * log_bracket);
}

double concentration_level(const AdamsParams& params, double domain_measure) {
  params.validate();
  if (!(domain_measure > 0.0)) domain_error("concentration_level: measure must be > 0");
  const double ratio = static_cast<double>(params.n) / params.m;
  return domain_measure *
         (1.0 + std::exp(specfun::digamma(ratio) + specfun::euler_gamma()));
}

double eta_exponent(double grad_norm, double p) {
  if (!(p > 1.0)) domain_error("eta_exponent: p must be > 1");
  if (!(grad_norm >= 0.0)) domain_error("eta_exponent: norm must be >= 0");
  if (grad_norm >= 1.0) {
    domain_error("eta_exponent: norm >= 1 (full concentration, eta = inf)");
  }
  return std::exp(-std::log1p(-std::pow(grad_norm, p)) / (p - 1.0));
}

TZero t_zero() {
  const double sigma = 1.0 + 2.0 / std::sqrt(3.0);
  const double denom = 17.0 - 24.0 * specfun::euler_gamma();
  const double a = (1.0 + 36.0 * sigma) / denom;
  const double raw = 1.0 + a + std::sqrt(1.0 + a * a + 72.0 * sigma / denom);
  const int integer = static_cast<int>(std::ceil(raw));
  return {raw, integer, sigma, 2 * integer};
}

}  // namespace adams
