#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "constants.hpp"
#include "error.hpp"
#include "moser1d.hpp"
#include "quadrature.hpp"
#include "rearrange.hpp"

using namespace adams;
using namespace adams::rearrange;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

bool same_cells(const SampledFunction& a, const std::vector<Cell>& b) {
  if (a.cells.size() != b.size()) return false;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (a.cells[i].measure != b[i].measure || a.cells[i].value != b[i].value) return false;
  }
  return true;
}

// u^#(s) from the infimum definition, by bisection over t.
double sharp_by_definition(const SampledFunction& f, double s) {
  double lo = 0.0;
  double hi = 0.0;
  for (const auto& c : f.cells) hi = std::max(hi, std::abs(c.value));
  const auto level_measure = [&](double t) {
    double m = 0.0;
    for (const auto& c : f.cells) if (std::abs(c.value) > t) m += c.measure;
    return m;
  };
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (level_measure(mid) < s ? hi : lo) = mid;
  }
  return hi;
}

// Backward RK4 for y1 = v, y2 = r^{n-1} v' from r = R, with the flux at R
// from Simpson's rule. The requested radii are grid breakpoints, so v is
// recorded exactly there.
std::vector<double> talenti_ode(const SampledFunction& f, int n, double R,
                                const std::vector<double>& at) {
  const double omega = sphere_constants(n).omega_ball;
  std::vector<double> radii{0.0};
  std::vector<double> data;
  double volume = 0.0;
  for (const auto& c : f.cells) {
    volume += c.measure;
    radii.push_back(std::min(std::pow(volume / omega, 1.0 / n), R));
    data.push_back(c.value);
  }
  if (radii.back() < R) {
    radii.push_back(R);
    data.push_back(0.0);
  }
  const auto data_at = [&](double r) {
    for (std::size_t k = 0; k + 1 < radii.size(); ++k) if (r < radii[k + 1]) return data[k];
    return data.back();
  };
  std::vector<double> breaks = radii;
  breaks.insert(breaks.end(), at.begin(), at.end());
  std::sort(breaks.begin(), breaks.end());
  const int steps = 4000;
  double flux = 0.0;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    const double c = data_at(0.5 * (breaks[k] + breaks[k + 1]));
    const double h = (breaks[k + 1] - breaks[k]) / steps;
    for (int i = 0; i < steps; ++i) {
      const double r = breaks[k] + i * h;
      const auto g = [&](double x) { return -std::pow(x, n - 1) * c; };
      flux += h / 6.0 * (g(r) + 4.0 * g(r + 0.5 * h) + g(r + h));
    }
  }
  std::vector<double> out(at.size(), std::nan(""));
  double v = 0.0;
  double y2 = flux;
  for (std::size_t k = breaks.size() - 1; k-- > 0;) {
    const double c = data_at(0.5 * (breaks[k] + breaks[k + 1]));
    const double h = (breaks[k + 1] - breaks[k]) / steps;
    const auto d1 = [&](double x, double flux_x) { return flux_x * std::pow(x, 1 - n); };
    const auto d2 = [&](double x) { return -std::pow(x, n - 1) * c; };
    for (int i = 0; i < steps; ++i) {
      const double r = breaks[k + 1] - i * h;
      const double a1 = d1(r, y2), b1 = d2(r);
      const double a2 = d1(r - 0.5 * h, y2 - 0.5 * h * b1), b2 = d2(r - 0.5 * h);
      const double a3 = d1(r - 0.5 * h, y2 - 0.5 * h * b2), b3 = b2;
      const double a4 = d1(r - h, y2 - h * b3), b4 = d2(r - h);
      v -= h / 6.0 * (a1 + 2 * a2 + 2 * a3 + a4);
      y2 -= h / 6.0 * (b1 + 2 * b2 + 2 * b3 + b4);
    }
    for (std::size_t j = 0; j < at.size(); ++j) if (at[j] == breaks[k]) out[j] = v;
  }
  return out;
}

}  // namespace

TEST_CASE("decreasing rearrangement examples") {
  CHECK(same_cells(decreasing_rearrangement({{{1, 1}, {1, 3}, {1, 2}}}), {{1, 3}, {1, 2}, {1, 1}}));
  CHECK(same_cells(decreasing_rearrangement({{{2, -1}, {1, 5}}}), {{1, 5}, {2, 1}}));
  const SampledFunction sorted{{{0.5, 4}, {2, 3}, {1, 0}}};
  CHECK(same_cells(decreasing_rearrangement(sorted), sorted.cells));
  CHECK_THROWS_AS(decreasing_rearrangement({}), Error);
  CHECK_THROWS_AS(decreasing_rearrangement({{{0.0, 1.0}}}), Error);
}

TEST_CASE("rearrangement agrees with the infimum definition") {
  const SampledFunction f{{{2, -1}, {1, 5}, {0.5, 2.5}, {1.5, -5}}};
  const auto sharp = decreasing_rearrangement(f);
  double start = 0.0;
  for (const auto& c : sharp.cells) {
    for (double frac : {0.1, 0.5, 0.9}) {
      CHECK_THAT(sharp_by_definition(f, start + frac * c.measure), WithinAbs(c.value, 1e-12));
    }
    start += c.measure;
  }
}

TEST_CASE("rearrangement is idempotent and norm preserving") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> measure(0.01, 2.0);
  std::uniform_real_distribution<double> value(-3.0, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    SampledFunction f;
    const int cells = 1 + trial % 17;
    for (int i = 0; i < cells; ++i) f.cells.push_back({measure(rng), value(rng)});
    const auto once = decreasing_rearrangement(f);
    const auto twice = decreasing_rearrangement(once);
    CHECK(same_cells(twice, once.cells));
    std::vector<double> before;
    std::vector<double> after;
    for (const auto& c : f.cells) before.push_back(c.measure * c.value * c.value);
    for (const auto& c : once.cells) after.push_back(c.measure * c.value * c.value);
    std::sort(before.begin(), before.end());
    std::sort(after.begin(), after.end());
    CHECK(before == after);
  }
}

TEST_CASE("symmetrization plateaus and level sets") {
  const auto c = symmetrize({{{3.0, 2.0}}}, 3);
  CHECK(c.profile.piece_count() == 1);
  CHECK(c.profile.value(0.3 * c.R) == 2.0);
  CHECK_THAT(sphere_constants(3).omega_ball * std::pow(c.R, 3), WithinRel(3.0, 1e-14));

  const SampledFunction two{{{1.0, 1.0}, {0.5, 4.0}}};
  const auto u = symmetrize(two, 2);
  const double omega = sphere_constants(2).omega_ball;
  CHECK_THAT(u.profile.knots()[1], WithinRel(std::sqrt(0.5 / omega), 1e-15));
  CHECK_THAT(u.R, WithinRel(std::sqrt(1.5 / omega), 1e-15));
  for (double t : {0.0, 0.5, 1.0, 2.0, 3.9}) {
    double original = 0.0;
    for (const auto& cell : two.cells) if (std::abs(cell.value) > t) original += cell.measure;
    double symmetric = 0.0;
    const auto& k = u.profile.knots();
    for (std::size_t i = 0; i + 1 < k.size(); ++i) {
      if (u.profile.value(0.5 * (k[i] + k[i + 1])) > t) {
        symmetric += omega * (k[i + 1] * k[i + 1] - k[i] * k[i]);
      }
    }
    CHECK_THAT(symmetric, WithinAbs(original, 1e-14));
  }
}

TEST_CASE("Talenti solution for constant data") {
  for (int n : {2, 3, 5}) {
    const double R = 1.7;
    const double c = 2.5;
    const double ball = sphere_constants(n).omega_ball * std::pow(R, n);
    const auto v = talenti_radial_solution({{{ball, c}}}, n, R);
    for (double r = 0.0; r <= R; r += 0.17) {
      CHECK_THAT(v.profile.value(r), WithinAbs(c * (R * R - r * r) / (2.0 * n), 1e-12));
    }
    const auto lap = radial_laplacian(v);
    for (double r = 0.05; r < R; r += 0.13) CHECK_THAT(lap.value(r), WithinAbs(-c, 1e-12));
  }
  const auto zero = talenti_radial_solution({{{1.0, 0.0}}}, 3, 2.0);
  CHECK(zero.profile.value(0.5) == 0.0);
}

TEST_CASE("Talenti solution against an ODE solve") {
  for (int n : {2, 4}) {
    const double R = 1.0;
    const double ball = sphere_constants(n).omega_ball;
    const SampledFunction f{{{0.2 * ball, 3.0}, {0.5 * ball, 1.0}}};
    const auto v = talenti_radial_solution(f, n, R);
    std::vector<double> at;
    for (double r = 0.1; r < R; r += 0.1) at.push_back(r);
    const auto oracle = talenti_ode(f, n, R, at);
    for (std::size_t j = 0; j < at.size(); ++j) {
      INFO("n = " << n << ", r = " << at[j]);
      CHECK_THAT(v.profile.value(at[j]), WithinAbs(oracle[j], 1e-8));
    }
    CHECK(std::abs(v.profile.value(R)) < 1e-14);
    CHECK(v.profile.max_continuity_gap() < 1e-13);
    for (double r = 0.0; r + 0.01 <= R; r += 0.01) {
      CHECK(v.profile.value(r + 0.01) <= v.profile.value(r));
    }
    const auto lap = radial_laplacian(v);
    const double omega = sphere_constants(n).omega_ball;
    for (double r = 0.03; r < R; r += 0.07) {
      double expected = 0.0;
      const double s = omega * std::pow(r, n);
      if (s < 0.2 * ball) expected = -3.0;
      else if (s < 0.7 * ball) expected = -1.0;
      CHECK_THAT(lap.value(r), WithinAbs(expected, 1e-8));
    }
  }
}

TEST_CASE("Talenti preconditions") {
  CHECK_THROWS_AS(talenti_radial_solution({{{0.1, 1.0}, {0.1, 2.0}}}, 3, 1.0), Error);
  try {
    talenti_radial_solution({{{0.1, 1.0}, {0.1, 2.0}}}, 3, 1.0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kMonotonicity);
  }
  CHECK_THROWS_AS(talenti_radial_solution({{{100.0, 1.0}}}, 3, 1.0), Error);
  CHECK_THROWS_AS(symmetrize({{{1.0, 1.0}}}, 1), Error);
}

TEST_CASE("radial Laplacian of polynomials") {
  const PiecewiseProfile quad({0.0, 2.0}, {PowerSumPiece{0.0, {{4.0, 0.0}, {-1.0, 2.0}}, 0.0}});
  for (int n : {2, 3, 6}) {
    const auto lap = radial_laplacian({2.0, n, quad});
    CHECK_THAT(lap.value(0.7), WithinAbs(-2.0 * n, 1e-13));
  }
  const PiecewiseProfile sq({0.0, 1.0}, {PowerSumPiece{0.0, {{1.0, 2.0}}, 0.0}});
  CHECK_THAT(radial_laplacian({1.0, 4, sq}).value(0.4), WithinAbs(8.0, 1e-13));
  // Shifted pieces go through the generic path.
  const PiecewiseProfile shifted({0.0, 1.0}, {PowerSumPiece{-1.0, {{1.0, 2.0}}, 0.0}});
  CHECK_THAT(radial_laplacian({1.0, 3, shifted}).value(0.5), WithinAbs(2.0 + 2.0 * 2.0 * 1.5 / 0.5, 1e-13));
}

TEST_CASE("change of variables") {
  const PiecewiseProfile constant({0.0, 1.0}, {constant_piece(2.0)});
  const auto g = energy_change_of_variables({1.0, 4, constant}, 2);
  const double scale = std::pow(beta0({2, 4}), 0.5);
  CHECK_THAT(g.value(3.0), WithinRel(2.0 * scale, 1e-15));
  CHECK(g.derivative(3.0) == 0.0);
  CHECK(g.unbounded());
  CHECK_THROWS_AS(energy_change_of_variables({1.0, 4, constant}, 4), Error);

  // Energy identity for w(r) = (1 - r^2)^2 expanded, n = 6.
  const int n = 6;
  const PiecewiseProfile w({0.0, 1.0}, {PowerSumPiece{0.0, {{1.0, 0.0}, {-2.0, 2.0}, {1.0, 4.0}}, 0.0}});
  const auto gw = energy_change_of_variables({1.0, n, w}, 2);
  const double lhs = moser1d::energy(gw, n / 2.0, 0.0, std::numeric_limits<double>::infinity());
  QuadratureSpec spec;
  spec.rel_tol = 1e-12;
  const double radial = integrate([&](double r) {
    return std::pow(std::abs(w.derivative(r)), n / 2.0) * std::pow(r, n / 2.0 - 1.0);
  }, 0.0, 1.0, spec).value;
  const double rhs = std::pow(n - 2.0, n / 2.0) * sphere_constants(n).omega_sphere * radial;
  CHECK_THAT(lhs, WithinRel(rhs, 1e-8));
}
