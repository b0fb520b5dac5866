#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <numbers>

#include "error.hpp"
#include "quadrature.hpp"

using namespace adams;
using Catch::Matchers::WithinRel;
using Catch::Matchers::WithinAbs;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("polynomials are integrated exactly") {
  const auto r = integrate([](double x) { return 3.0 * x * x - 2.0 * x + 1.0; }, -1.0, 2.0, {});
  CHECK_THAT(r.value, WithinRel(9.0 - 3.0 + 3.0, 1e-15));
}

TEST_CASE("endpoint singularities converge") {
  const auto r = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, {});
  CHECK_THAT(r.value, WithinRel(2.0, 1e-10));
  const auto l = integrate([](double x) { return std::log(x); }, 0.0, 1.0, {});
  CHECK_THAT(l.value, WithinRel(-1.0, 1e-10));
}

TEST_CASE("infinite ranges") {
  const auto e = integrate([](double t) { return std::exp(-t); }, 0.0, kInf, {});
  CHECK_THAT(e.value, WithinRel(1.0, 1e-12));
  const auto g = integrate([](double t) { return std::exp(-t * t); }, -kInf, kInf, {});
  CHECK_THAT(g.value, WithinRel(std::sqrt(std::numbers::pi), 1e-12));
  const auto left = integrate([](double t) { return std::exp(t); }, -kInf, 0.0, {});
  CHECK_THAT(left.value, WithinRel(1.0, 1e-12));
  const auto c = integrate([](double t) { return 1.0 / (1.0 + t * t); }, 0.0, kInf, {});
  CHECK_THAT(c.value, WithinRel(std::numbers::pi / 2.0, 1e-12));
}

TEST_CASE("orientation and empty ranges") {
  const auto f = [](double x) { return std::sin(x); };
  const auto fwd = integrate(f, 0.0, 2.0, {});
  const auto back = integrate(f, 2.0, 0.0, {});
  CHECK(back.value == -fwd.value);
  CHECK(integrate(f, 1.0, 1.0, {}).value == 0.0);
  CHECK_THROWS_AS(integrate(f, std::nan(""), 1.0, {}), Error);
}

TEST_CASE("oscillatory integrand with many panels") {
  const auto r = integrate([](double x) { return std::cos(200.0 * x); }, 0.0, 1.0, {});
  CHECK_THAT(r.value, WithinAbs(std::sin(200.0) / 200.0, 1e-12));
}

TEST_CASE("nonconvergence is reported with the achieved error") {
  QuadratureSpec spec;
  spec.max_subdivisions = 8;
  try {
    integrate([](double x) { return std::sin(1.0 / x) / x; }, 1e-6, 1.0, spec);
    FAIL("expected nonconvergence");
  } catch (const QuadratureError& e) {
    CHECK(e.code() == ErrorCode::kQuadrature);
    CHECK(e.achieved_error() > 0.0);
  }
}

TEST_CASE("non-finite integrals fail") {
  CHECK_THROWS_AS(integrate([](double) { return std::nan(""); }, 0.0, 1.0, {}), QuadratureError);
}

TEST_CASE("spec validation") {
  QuadratureSpec spec;
  CHECK_NOTHROW(spec.validate());
  spec.rel_tol = 0.0;
  CHECK_THROWS_AS(spec.validate(), Error);
  spec = {};
  spec.truncation_epsilon = 1.0;
  CHECK_THROWS_AS(spec.validate(), Error);
  spec = {};
  spec.max_subdivisions = 7;
  CHECK_THROWS_AS(spec.validate(), Error);
}
