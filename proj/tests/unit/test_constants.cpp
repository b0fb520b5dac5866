#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "constants.hpp"
#include "error.hpp"
#include "hardy.hpp"
#include "specfun.hpp"

using namespace adams;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

constexpr double kPi = std::numbers::pi;

// Straight evaluation with the C library gamma; fine for n <= 64.
double omega_sphere_direct(int n) { return 2.0 * std::pow(kPi, 0.5 * n) / std::tgamma(0.5 * n); }

double beta0_direct(int m, int n) {
  const double ratio = (m % 2 == 1) ? std::tgamma(0.5 * (m + 1)) / std::tgamma(0.5 * (n - m + 1))
                                    : std::tgamma(0.5 * m) / std::tgamma(0.5 * (n - m));
  const double bracket = std::pow(kPi, 0.5 * n) * std::pow(2.0, m) * ratio;
  return n / omega_sphere_direct(n) * std::pow(bracket, static_cast<double>(n) / (n - m));
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(AdamsParams{1, 2}.validate());
  CHECK_THROWS_AS((AdamsParams{2, 2}.validate()), Error);
  CHECK_THROWS_AS((AdamsParams{0, 3}.validate()), Error);
  CHECK_THROWS_AS((AdamsParams{1, 1}.validate()), Error);
  CHECK_THROWS_AS(beta0({3, 3}), Error);
}

TEST_CASE("sphere constants") {
  CHECK_THAT(sphere_constants(2).omega_sphere, WithinRel(2.0 * kPi, 1e-15));
  CHECK_THAT(sphere_constants(2).omega_ball, WithinRel(kPi, 1e-15));
  CHECK_THAT(sphere_constants(3).omega_sphere, WithinRel(4.0 * kPi, 1e-15));
  CHECK_THAT(sphere_constants(3).omega_ball, WithinRel(4.0 * kPi / 3.0, 1e-15));
  for (int n = 2; n <= 64; ++n) {
    const auto c = sphere_constants(n);
    CHECK_THAT(c.omega_sphere, WithinRel(omega_sphere_direct(n), 1e-13));
    CHECK_THAT(c.omega_sphere, WithinRel(n * c.omega_ball, 1e-15));
  }
}

TEST_CASE("classical sharp exponents") {
  CHECK_THAT(beta0({1, 2}), WithinRel(4.0 * kPi, 1e-12));
  CHECK_THAT(beta0({2, 4}), WithinRel(32.0 * kPi * kPi, 1e-12));
  // Moser: n omega_{n-1}^{1/(n-1)} for m = 1.
  for (int n = 2; n <= 20; ++n) {
    CHECK_THAT(beta0({1, n}), WithinRel(n * std::pow(omega_sphere_direct(n), 1.0 / (n - 1)), 1e-12));
  }
}

TEST_CASE("beta0 agrees with a direct gamma evaluation") {
  for (int m = 1; m <= 6; ++m) {
    for (int n = m + 1; n <= 64; ++n) {
      INFO("m = " << m << ", n = " << n);
      CHECK_THAT(beta0({m, n}), WithinRel(beta0_direct(m, n), 1e-11));
    }
  }
}

TEST_CASE("second-order exponent identity") {
  for (int n = 3; n <= 64; ++n) {
    const double w = omega_sphere_direct(n);
    const double dn = n;
    const double expected = std::pow(
        std::pow(w, 2.0 / dn) * std::pow(dn, (dn - 2.0) / dn) * (dn - 2.0), dn / (dn - 2.0));
    INFO("n = " << n);
    CHECK_THAT(beta0({2, n}), WithinRel(expected, 1e-12));
  }
}

TEST_CASE("integer product forms match the gamma form") {
  for (int m = 1; m <= 6; ++m) {
    for (int n = m + 1; n <= 64; ++n) {
      INFO("m = " << m << ", n = " << n);
      CHECK_THAT(beta0_product_form({m, n}), WithinRel(beta0({m, n}), 1e-10));
    }
  }
}

TEST_CASE("iterated constants reconstruct the product form") {
  CHECK(hardy::iterated_constant({2, 6}) == 1.0);
  CHECK_THAT(hardy::iterated_constant({4, 8}), WithinRel(1.0 / 8.0, 1e-15));
  for (int m : {2, 4, 6}) {
    for (int n = m + 1; n <= 32; ++n) {
      const double dn = n;
      const double dm = m;
      const double w = sphere_constants(n).omega_sphere;
      const double bracket = std::pow(dn, (dn - dm) / dn) * std::pow(w, dm / dn) * (dn - 2.0) /
                             hardy::iterated_constant({m, n});
      INFO("m = " << m << ", n = " << n);
      CHECK_THAT(std::pow(bracket, dn / (dn - dm)), WithinRel(beta0_product_form({m, n}), 1e-12));
    }
  }
}

TEST_CASE("concentration level") {
  CHECK_THAT(concentration_level({1, 2}, 1.0), WithinAbs(1.0 + std::exp(1.0), 1e-12));
  CHECK_THAT(concentration_level({2, 4}, 1.0), WithinAbs(1.0 + std::exp(1.0), 1e-12));
  CHECK_THAT(concentration_level({3, 6}, 2.5), WithinRel(2.5 * (1.0 + std::exp(1.0)), 1e-12));
  // n/m = 3: psi(3) + gamma = H_2 = 3/2.
  CHECK_THAT(concentration_level({1, 3}, 1.0), WithinRel(1.0 + std::exp(1.5), 1e-13));
  CHECK_THROWS_AS(concentration_level({1, 2}, 0.0), Error);
}

TEST_CASE("eta exponent") {
  CHECK(eta_exponent(0.0, 2.0) == 1.0);
  CHECK_THAT(eta_exponent(0.5, 2.0), WithinRel(4.0 / 3.0, 1e-15));
  CHECK_THAT(eta_exponent(0.5, 3.0), WithinRel(std::pow(1.0 - 0.125, -0.5), 1e-15));
  CHECK(eta_exponent(0.9, 2.0) > eta_exponent(0.8, 2.0));
  CHECK_THROWS_AS(eta_exponent(1.0, 2.0), Error);
  CHECK_THROWS_AS(eta_exponent(0.5, 1.0), Error);
}

TEST_CASE("dimension threshold") {
  const auto t = t_zero();
  CHECK_THAT(t.raw, WithinAbs(51.9233, 5e-4));
  CHECK(t.integer == 52);
  CHECK(t.n_threshold == 104);
  CHECK_THAT(t.sigma, WithinRel(1.0 + 2.0 / std::sqrt(3.0), 1e-15));
}
