#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "error.hpp"
#include "quadrature.hpp"
#include "specfun.hpp"

using namespace adams;
using Catch::Matchers::WithinRel;
using Catch::Matchers::WithinAbs;

namespace {

// H_n - ln n at n = n0 * 2^k, Richardson-extrapolated in powers of 1/n.
double richardson_euler_gamma() {
  constexpr int kLevels = 6;
  std::vector<std::vector<double>> table(kLevels);
  for (int k = 0; k < kLevels; ++k) {
    const long long n = 64LL << k;
    long double h = 0.0L;
    for (long long j = n; j >= 1; --j) h += 1.0L / static_cast<long double>(j);
    table[0].push_back(static_cast<double>(h - std::log(static_cast<long double>(n))));
  }
  for (int level = 1; level < kLevels; ++level) {
    const double factor = std::pow(2.0, level);
    for (std::size_t i = 0; i + 1 < table[level - 1].size(); ++i) {
      table[level].push_back((factor * table[level - 1][i + 1] - table[level - 1][i]) /
                             (factor - 1.0));
    }
  }
  return table[kLevels - 1][0];
}

}  // namespace

TEST_CASE("gamma matches integers, half-integers and the reflection-free recurrence") {
  CHECK_THAT(specfun::gamma(1.0), WithinRel(1.0, 1e-15));
  CHECK_THAT(specfun::gamma(5.0), WithinRel(24.0, 1e-14));
  CHECK_THAT(specfun::gamma(0.5), WithinRel(std::sqrt(std::numbers::pi), 1e-14));
  CHECK_THAT(specfun::gamma(2.5), WithinRel(0.75 * std::sqrt(std::numbers::pi), 1e-14));
  for (double x = 0.3; x < 160.0; x *= 1.37) {
    CHECK_THAT(specfun::gamma(x + 1.0), WithinRel(x * specfun::gamma(x), 1e-13));
  }
}

TEST_CASE("gamma agrees with the C library across its range") {
  for (double x = 0.5; x <= 171.0; x += 0.731) {
    INFO("x = " << x);
    CHECK_THAT(specfun::gamma(x), WithinRel(std::tgamma(x), 1e-13));
    CHECK_THAT(specfun::log_gamma(x), WithinAbs(std::lgamma(x), 1e-12 * std::max(1.0, std::abs(std::lgamma(x)))));
  }
}

TEST_CASE("gamma(1/2) from its defining integral") {
  // Gamma(1/2) = 2 int_0^inf exp(-u^2) du after t = u^2.
  const auto r = integrate([](double u) { return 2.0 * std::exp(-u * u); }, 0.0,
                           std::numeric_limits<double>::infinity(), {});
  CHECK_THAT(specfun::gamma(0.5), WithinRel(r.value, 1e-12));
}

TEST_CASE("gamma domain and overflow") {
  CHECK_THROWS_AS(specfun::gamma(0.0), Error);
  CHECK_THROWS_AS(specfun::gamma(-1.5), Error);
  try {
    specfun::gamma(172.0);
    FAIL("expected overflow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kOverflow);
  }
  CHECK(std::isfinite(specfun::log_gamma(1e6)));
}

TEST_CASE("euler_gamma matches an extrapolated harmonic limit") {
  CHECK_THAT(specfun::euler_gamma(), WithinAbs(richardson_euler_gamma(), 1e-12));
  CHECK(specfun::euler_gamma() == specfun::kEulerGamma);
}

TEST_CASE("digamma against the partial-sum series with its tail bound") {
  // psi(x) + gamma = sum_{k>=0} (1/(k+1) - 1/(k+x)); the tail after K terms
  // lies between (x-1)/(K+x) and (x-1)/(K+1) in magnitude for x > 1.
  constexpr long long kTerms = 2000000;
  for (double x : {1.5, 2.0, 3.7, 10.0}) {
    long double s = 0.0L;
    for (long long k = kTerms - 1; k >= 0; --k) {
      s += 1.0L / (k + 1) - 1.0L / (k + x);
    }
    const double lo = static_cast<double>(s) + (x - 1.0) / (kTerms + x);
    const double hi = static_cast<double>(s) + (x - 1.0) / kTerms;
    const double psi = specfun::digamma(x) + specfun::kEulerGamma;
    INFO("x = " << x);
    CHECK(psi >= lo - 1e-12);
    CHECK(psi <= hi + 1e-12);
  }
  CHECK_THAT(specfun::digamma(1.0), WithinAbs(-specfun::kEulerGamma, 1e-15));
  CHECK_THAT(specfun::digamma(2.0) + specfun::kEulerGamma, WithinAbs(1.0, 1e-14));
  CHECK_THAT(specfun::digamma(0.5), WithinAbs(-specfun::kEulerGamma - 2.0 * std::log(2.0), 1e-14));
}

TEST_CASE("digamma recurrence and small arguments") {
  for (double x = 0.01; x < 300.0; x *= 1.9) {
    CHECK_THAT(specfun::digamma(x + 1.0), WithinAbs(specfun::digamma(x) + 1.0 / x, 1e-12 * (1.0 + 1.0 / x)));
  }
  CHECK_THROWS_AS(specfun::digamma(0.0), Error);
}

TEST_CASE("trigamma against the series with its tail bound") {
  constexpr long long kTerms = 1000000;
  for (double x : {0.5, 1.0, 2.5, 7.0}) {
    long double s = 0.0L;
    for (long long k = kTerms - 1; k >= 0; --k) s += 1.0L / ((k + x) * (k + x));
    const double lo = static_cast<double>(s) + 1.0 / (kTerms + x);
    const double hi = static_cast<double>(s) + 1.0 / (kTerms + x - 1.0);
    const double v = specfun::trigamma(x);
    CHECK(v >= lo - 1e-12);
    CHECK(v <= hi + 1e-12);
  }
  CHECK_THAT(specfun::trigamma(1.0), WithinRel(std::numbers::pi * std::numbers::pi / 6.0, 1e-14));
  CHECK_THAT(specfun::trigamma(0.5), WithinRel(std::numbers::pi * std::numbers::pi / 2.0, 1e-14));
}

TEST_CASE("harmonic numbers") {
  CHECK(specfun::harmonic(1) == 1.0);
  CHECK_THAT(specfun::harmonic(10), WithinRel(7381.0 / 2520.0, 1e-15));
  for (int k = 1; k <= 200; ++k) {
    CHECK_THAT(specfun::digamma(k + 1.0) + specfun::kEulerGamma,
               WithinAbs(specfun::harmonic(k), 1e-12));
  }
  CHECK_THROWS_AS(specfun::harmonic(0), Error);
}
