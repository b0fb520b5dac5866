#include "extremal.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "constants.hpp"
#include "error.hpp"
#include "moser1d.hpp"
#include "specfun.hpp"

namespace adams::extremal {
namespace {

void require_admissible(const TestFnParams& p) {
  if (!p.admissible) {
    domain_error("extremal: parameters for n = " + std::to_string(p.n) +
                 " are inadmissible (s >= b)");
  }
}

}  // namespace

TestFnParams make_params(int n, bool extended) {
  if (n < 4) domain_error("make_params: n must be >= 4");
  if (n % 2 != 0 && !extended) domain_error("make_params: n must be even");
  const double dn = n;
  const double half = 0.5 * dn;
  const double ratio = dn / (dn - 2.0);
  TestFnParams p;
  p.n = n;
  p.b = std::pow(ratio, half) - ratio;
  p.s = std::pow(ratio, half) *
        (1.0 + (4.0 / 3.0) * std::pow((dn + 1.0) / dn, half) / (dn - 2.0) -
         std::pow(1.0 - 4.0 / (dn * (dn - 2.0)), half));
  p.lambda = 1.0 + 0.5 * (dn - 2.0) * std::exp(p.b - p.s);
  p.sigma = 1.0 + 2.0 / std::sqrt(3.0);
  p.admissible = p.s > 0.0 && p.s < p.b;
  return p;
}

PiecewiseProfile test_function(const TestFnParams& params) {
  require_admissible(params);
  const double dn = params.n;
  const double kappa = (dn - 2.0) / dn;
  const double lam = params.lambda;
  const double slope = kappa * std::pow(0.5 * (dn - 2.0), -2.0 / dn);
  ExpSaturationPiece tail;
  tail.offset = std::pow(lam - 1.0, kappa);
  tail.coef = (dn - 2.0) / 3.0 * std::pow(lam - 1.0, -2.0 / dn);
  tail.rate = 3.0 / dn;
  tail.start = lam;
  tail.exponent = 1.0;
  return PiecewiseProfile(
      {0.0, 0.5 * dn, lam, std::numeric_limits<double>::infinity()},
      {PowerSumPiece{0.0, {{slope, 1.0}}, 0.0}, PowerSumPiece{1.0, {{1.0, kappa}}, 0.0}, tail});
}

PiecewiseProfile l_operator(const TestFnParams& params) {
  require_admissible(params);
  const double dn = params.n;
  const double lam = params.lambda;
  const double first = -(dn - 2.0) / dn * std::pow(0.5 * (dn - 2.0), -2.0 / dn);
  const PowerSumPiece middle{
      1.0, {{-(dn - 2.0) / dn, -2.0 / dn}, {-2.0 / dn, -(dn + 2.0) / dn}}, 0.0};
  const ExponentialPiece last{
      0.0, -(dn + 1.0) / dn * std::pow(lam - 1.0, -2.0 / dn) * std::exp(3.0 * lam / dn),
      -3.0 / dn};
  return PiecewiseProfile({0.0, 0.5 * dn, lam, std::numeric_limits<double>::infinity()},
                          {constant_piece(first), middle, last});
}

double norm_chain_bound(const TestFnParams& params) {
  require_admissible(params);
  const double n = params.n;
  const double half = 0.5 * n;
  const double inner = 1.0 - params.s * std::pow((n - 2.0) / n, half) +
                       (4.0 / 3.0) * std::pow((n + 1.0) / n, half) / (n - 2.0);
  if (!(inner > 0.0)) domain_error("norm_chain_bound: chain is not admissible");
  return 4.0 / (n * (n - 2.0)) + std::pow(inner, 2.0 / n);
}

double norm_quadrature(const TestFnParams& params, const QuadratureSpec& spec, bool adaptive_middle) {
  require_admissible(params);
  spec.validate();
  const double dn = params.n;
  const double half = 0.5 * dn;
  const double lam = params.lambda;
  const double base = std::pow((dn - 2.0) / dn, half);

  const double first = base * dn / (dn - 2.0);
  const double last = (2.0 / 3.0) * std::pow((dn + 1.0) / dn, half) / (lam - 1.0);

  double middle = 0.0;
  if (params.n % 2 == 0 && !adaptive_middle) {
    // |L|^{n/2} = base * u^{-1} (1 + c/u)^{n/2}, u = t - 1, c = 2/(n-2).
    const int N = params.n / 2;
    const double u1 = half - 1.0;
    const double u2 = lam - 1.0;
    const double c = 2.0 / (dn - 2.0);
    double sum = std::log(u2 / u1);
    double binom = 1.0;
    for (int j = 1; j <= N; ++j) {
      binom *= static_cast<double>(N - j + 1) / j;
      sum += binom * std::pow(c / u1, j) * -std::expm1(j * std::log(u1 / u2)) / j;
    }
    middle = base * sum;
  } else {
    const auto L = l_operator(params);
    middle = integrate([&](double t) { return std::pow(std::abs(L.value(t)), half); }, half, lam,
                       spec)
                 .value;
  }
  return std::pow(first + middle + last, 2.0 / dn);
}

double functional_lower_bound(const TestFnParams& params) {
  require_admissible(params);
  return 1.0 + (0.5 * params.n - 1.0) * std::exp(params.b - params.s - 1.0);
}

double functional_quadrature(const TestFnParams& params, const QuadratureSpec& spec) {
  const double dn = params.n;
  return moser1d::cc_functional_unchecked(test_function(params), dn / (dn - 2.0), spec);
}

double level(int n) { return concentration_level(AdamsParams{2, n}, 1.0); }

double eta_function(double t) {
  if (!(t >= 2.0)) domain_error("eta_function: t must be >= 2");
  const double sigma = 1.0 + 2.0 / std::sqrt(3.0);
  const double power = std::exp(t * std::log1p(1.0 / (t - 1.0)));
  return specfun::digamma(t) + specfun::kEulerGamma + power * (sigma / (t - 1.0) - 1.0) +
         t / (t - 1.0) + 1.0 - std::log(t - 1.0);
}

int eta_first_negative() {
  for (int k = 1; k < 100000; ++k) {
    if (eta_function(k + 1.0) < 0.0) return k;
  }
  throw Error(ErrorCode::kDegenerate, "eta_first_negative: no sign change found");
}

VerdictRow verdict(int n, const QuadratureSpec& spec, bool extended) {
  if (n < 16) domain_error("verdict: n must be >= 16");
  const TestFnParams params = make_params(n, extended);
  VerdictRow row;
  row.n = n;
  row.norm_chain_bound = norm_chain_bound(params);
  row.norm_quadrature = norm_quadrature(params, spec);
  row.functional_lower = functional_lower_bound(params);
  row.functional_quadrature = functional_quadrature(params, spec);
  row.level = level(n);
  row.gap_analytic = row.functional_lower > row.level;
  row.gap_numeric = row.functional_quadrature > row.level && row.norm_quadrature <= 1.0;
  return row;
}

}  // namespace adams::extremal
