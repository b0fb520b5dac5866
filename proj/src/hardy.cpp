#include "hardy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "error.hpp"
#include "quadrature.hpp"

namespace adams::hardy {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_exponents(double p, double q) {
  if (!(p > 1.0) || !(q > 1.0)) domain_error("hardy: need p > 1 and q > 1");
}

// ln of int_a^b r^gamma dr for 0 <= a < b; +inf when divergent at 0.
double log_power_integral(double gamma, double a, double b) {
  const double c = gamma + 1.0;
  if (a == 0.0) {
    if (c <= 0.0) return kInf;
    return c * std::log(b) - std::log(c);
  }
  if (c == 0.0) return std::log(std::log(b / a));
  if (c > 0.0) {
    return c * std::log(b) + std::log1p(-std::pow(a / b, c)) - std::log(c);
  }
  return c * std::log(a) + std::log1p(-std::pow(b / a, c)) - std::log(-c);
}

double power_integral(double gamma, double a, double b) {
  return std::exp(log_power_integral(gamma, a, b));
}

bool close(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

// Exponent of F(x) = A(x)^{1/q} V(x)^{(p-1)/p} as x -> 0.
double small_x_exponent(const HardySetup& s) {
  return (s.theta + 1.0) / s.q + (s.p - 1.0 - s.alpha) / s.p;
}

double log_sup_function(const HardySetup& s, double x) {
  const double v_power = -s.alpha / (s.p - 1.0);
  double log_a = 0.0;
  double log_v = 0.0;
  if (s.side == Side::kLeftVanishing) {
    log_a = log_power_integral(s.theta, x, s.R);
    log_v = log_power_integral(v_power, 0.0, x);
  } else {
    log_a = log_power_integral(s.theta, 0.0, x);
    log_v = log_power_integral(v_power, x, s.R);
  }
  return log_a / s.q + (s.p - 1.0) / s.p * log_v;
}

struct Rng {
  explicit Rng(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index),
                      static_cast<std::uint32_t>(index >> 32)};
    engine.seed(seq);
  }
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine);
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine); }
  std::mt19937_64 engine;
};

std::vector<double> random_knots(Rng& rng, double R, int pieces) {
  std::vector<double> knots{0.0};
  std::vector<double> interior;
  for (int i = 0; i + 1 < pieces; ++i) interior.push_back(R * std::exp(-6.0 * rng.uniform(0.0, 1.0)));
  std::sort(interior.begin(), interior.end());
  interior.erase(std::unique(interior.begin(), interior.end()), interior.end());
  for (double x : interior) {
    if (x > knots.back() && x < R) knots.push_back(x);
  }
  knots.push_back(R);
  return knots;
}

PieceKind linear_through(double x0, double v0, double x1, double v1) {
  return PowerSumPiece{x0, {{v0, 0.0}, {(v1 - v0) / (x1 - x0), 1.0}}, 0.0};
}

const PowerSumPiece& require_power_sum(const PieceKind& kind) {
  const auto* p = std::get_if<PowerSumPiece>(&kind);
  if (p == nullptr) {
    throw Error(ErrorCode::kInvalidArgument, "rayleigh_ratio: trial pieces must be power_sum");
  }
  return *p;
}

}  // namespace

double k_factor(double q, double p) {
  check_exponents(p, q);
  return std::pow(1.0 + q * (p - 1.0) / p, 1.0 / q) *
         std::pow(1.0 + p / (q * (p - 1.0)), (p - 1.0) / p);
}

bool feasible(const HardySetup& s) {
  if (!(s.p > 1.0) || !(s.q >= s.p) || !(s.R > 0.0)) return false;
  const double lead = s.alpha - s.p + 1.0;
  const bool growth = s.q * lead <= s.p * (s.theta + 1.0);
  return s.side == Side::kLeftVanishing ? (lead < 0.0 && growth) : (lead > 0.0 && growth);
}

double b_constant_numeric(const HardySetup& s) {
  check_exponents(s.p, s.q);
  if (!feasible(s)) throw Error(ErrorCode::kInfeasible, "b_constant: B is infinite for this setup");

  // Analytic limit of F as x -> 0.
  double limit = 0.0;
  const double e0 = small_x_exponent(s);
  if (std::abs(e0) <= 1e-12) {
    const double v_power = -s.alpha / (s.p - 1.0);
    if (s.side == Side::kLeftVanishing) {
      limit = std::pow(-s.theta - 1.0, -1.0 / s.q) *
              std::pow(v_power + 1.0, -(s.p - 1.0) / s.p);
    } else {
      limit = std::pow(s.theta + 1.0, -1.0 / s.q) *
              std::pow(-v_power - 1.0, -(s.p - 1.0) / s.p);
    }
  } else if (e0 < 0.0) {
    throw Error(ErrorCode::kInfeasible, "b_constant: supremum diverges at 0");
  }

  // Scan u = ln(x / R) on [-80, 0), then refine by golden section.
  constexpr int kGrid = 800;
  constexpr double kSpan = 80.0;
  const auto f = [&](double u) { return log_sup_function(s, s.R * std::exp(u)); };
  int best = 0;
  double best_val = -kInf;
  for (int i = 0; i < kGrid; ++i) {
    const double u = -kSpan + kSpan * i / kGrid;
    const double v = f(u);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  double lo = -kSpan + kSpan * std::max(best - 1, 0) / kGrid;
  double hi = -kSpan + kSpan * std::min(best + 1, kGrid - 1) / kGrid;
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - ratio * (hi - lo);
  double x2 = lo + ratio * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > 1e-12) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = f(x1);
    }
  }
  const double interior = std::exp(std::max({best_val, f1, f2}));
  return std::max(interior, limit);
}

double b_constant(const HardySetup& s) {
  check_exponents(s.p, s.q);
  if (!feasible(s)) throw Error(ErrorCode::kInfeasible, "b_constant: B is infinite for this setup");
  if (close(s.p, s.q) && close(s.alpha - s.theta, s.p)) {
    const double head = std::pow(s.p - 1.0, (s.p - 1.0) / s.p);
    return s.side == Side::kLeftVanishing ? head / (s.p - 1.0 - s.alpha)
                                          : head / (s.alpha - s.p + 1.0);
  }
  return b_constant_numeric(s);
}

Sandwich sandwich(const HardySetup& s) {
  const double b = b_constant(s);
  const double k = k_factor(s.q, s.p);
  return {b, k * b, b, k};
}

double rayleigh_ratio(const HardySetup& s, const PiecewiseProfile& trial) {
  check_exponents(s.p, s.q);
  QuadratureSpec spec;
  spec.rel_tol = 1e-12;
  double num = 0.0;
  double den = 0.0;
  const auto& knots = trial.knots();
  for (std::size_t i = 0; i < trial.piece_count(); ++i) {
    const double a = knots[i];
    const double b = knots[i + 1];
    const auto& piece = require_power_sum(trial.piece(i));
    if (piece.shift == 0.0 && piece.terms.size() == 1 && piece.log_coef == 0.0) {
      const double c = piece.terms[0].coef;
      const double beta = piece.terms[0].exponent;
      if (c != 0.0) {
        num += std::pow(std::abs(c), s.q) * power_integral(beta * s.q + s.theta, a, b);
        if (beta != 0.0) {
          den += std::pow(std::abs(c * beta), s.p) *
                 power_integral((beta - 1.0) * s.p + s.alpha, a, b);
        }
      }
      continue;
    }
    if (a == 0.0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "rayleigh_ratio: a piece touching r = 0 must be a pure power");
    }
    num += integrate(
               [&](double r) {
                 return std::pow(std::abs(piece_value(piece, r)), s.q) * std::pow(r, s.theta);
               },
               a, b, spec)
               .value;
    den += integrate(
               [&](double r) {
                 return std::pow(std::abs(piece_first(piece, r)), s.p) * std::pow(r, s.alpha);
               },
               a, b, spec)
               .value;
  }
  if (!(den > 0.0)) throw Error(ErrorCode::kDegenerate, "rayleigh_ratio: zero derivative norm");
  return std::pow(num, 1.0 / s.q) / std::pow(den, 1.0 / s.p);
}

PiecewiseProfile random_trial(const HardySetup& s, std::uint64_t seed, std::uint64_t index) {
  Rng rng(seed, index);
  const auto knots = random_knots(rng, s.R, rng.integer(2, 8));
  const std::size_t pieces = knots.size() - 1;
  std::vector<PieceKind> out;
  if (s.side == Side::kLeftVanishing) {
    const double beta = std::max({(s.p - 1.0 - s.alpha) / s.p, (-1.0 - s.theta) / s.q, 0.0}) +
                        rng.uniform(0.05, 2.0);
    const double v1 = rng.uniform(0.1, 1.0);
    out.push_back(PowerSumPiece{0.0, {{v1 / std::pow(knots[1], beta), beta}}, 0.0});
    double prev = v1;
    for (std::size_t i = 1; i < pieces; ++i) {
      const double next = rng.uniform(-1.0, 1.0);
      out.push_back(linear_through(knots[i], prev, knots[i + 1], next));
      prev = next;
    }
  } else {
    double prev = rng.uniform(0.1, 1.0);
    out.push_back(constant_piece(prev));
    for (std::size_t i = 1; i < pieces; ++i) {
      const double next = (i + 1 == pieces) ? 0.0 : rng.uniform(-1.0, 1.0);
      out.push_back(linear_through(knots[i], prev, knots[i + 1], next));
      prev = next;
    }
    if (pieces == 1) {
      // A single constant piece cannot vanish at R; replace with a ramp.
      out.back() = PowerSumPiece{0.0, {{prev, 0.0}, {-prev / s.R, 1.0}}, 0.0};
      return PiecewiseProfile({0.0, s.R}, std::move(out));
    }
  }
  return PiecewiseProfile(knots, std::move(out));
}

ProbeResult rayleigh_probe(const HardySetup& s, std::span<const PiecewiseProfile> trials) {
  b_constant(s);  // feasibility
  ProbeResult best;
  bool any = false;
  for (const auto& trial : trials) {
    double ratio = 0.0;
    try {
      ratio = rayleigh_ratio(s, trial);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kDegenerate) continue;
      throw;
    }
    if (!any || ratio > best.max_ratio) {
      best.max_ratio = ratio;
      best.witness = trial;
      any = true;
    }
  }
  if (!any) throw Error(ErrorCode::kDegenerate, "rayleigh_probe: every trial is degenerate");
  return best;
}

ProbeResult rayleigh_probe(const HardySetup& s, int trial_count, std::uint64_t seed) {
  if (trial_count < 1) throw Error(ErrorCode::kInvalidArgument, "rayleigh_probe: trial_count < 1");
  std::vector<PiecewiseProfile> trials;
  trials.reserve(static_cast<std::size_t>(trial_count));
  for (int i = 0; i < trial_count; ++i) {
    trials.push_back(random_trial(s, seed, static_cast<std::uint64_t>(i)));
  }
  return rayleigh_probe(s, std::span<const PiecewiseProfile>(trials));
}

PiecewiseProfile power_trial(double beta, double R) {
  return PiecewiseProfile({0.0, R}, {PowerSumPiece{0.0, {{1.0, beta}}, 0.0}});
}

double second_order_constant(int n, double q) {
  if (!(q > 1.0)) domain_error("second_order_constant: q must be > 1");
  if (!(n - 2.0 * q > 0.0)) domain_error("second_order_constant: need n - 2q > 0");
  return q * q / ((q - 1.0) * n * (n - 2.0 * q));
}

SecondOrderTrial SecondOrderTrial::from_polynomial(std::vector<double> coeffs, double R) {
  if (!(R > 0.0) || coeffs.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "SecondOrderTrial: need R > 0 and coefficients");
  }
  SecondOrderTrial t(std::move(coeffs), R);
  double scale = 0.0;
  for (std::size_t i = 0; i < t.coeffs_.size(); ++i) {
    scale += std::abs(t.coeffs_[i]) * std::pow(R, static_cast<double>(i));
  }
  const double tol = 1e-10 * std::max(scale, 1e-300);
  if (std::abs(t.value(R)) > tol || std::abs(t.first(R)) * R > tol) {
    throw Error(ErrorCode::kInvalidArgument,
                "SecondOrderTrial: boundary conditions u(R) = 0, u'(R) = 0 violated");
  }
  return t;
}

SecondOrderTrial SecondOrderTrial::from_factor(const std::vector<double>& factor, double R) {
  const std::vector<double> square{R * R, -2.0 * R, 1.0};
  std::vector<double> out(factor.size() + 2, 0.0);
  for (std::size_t i = 0; i < factor.size(); ++i) {
    for (std::size_t j = 0; j < square.size(); ++j) out[i + j] += factor[i] * square[j];
  }
  return from_polynomial(std::move(out), R);
}

double SecondOrderTrial::value(double r) const {
  double v = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * r + *it;
  return v;
}

double SecondOrderTrial::first(double r) const {
  double v = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 1;) v = v * r + static_cast<double>(i) * coeffs_[i];
  return v;
}

double SecondOrderTrial::second(double r) const {
  double v = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 2;) {
    v = v * r + static_cast<double>(i * (i - 1)) * coeffs_[i];
  }
  return v;
}

double second_order_ratio(int n, double p, double q, const SecondOrderTrial& trial) {
  second_order_constant(n, q);
  if (!(p > 1.0)) domain_error("second_order_ratio: p must be > 1");
  const double w_left = p * (n - 2.0 * q) / q - 1.0;
  const double w_right = n * p / q - 1.0;
  QuadratureSpec spec;
  spec.rel_tol = 1e-12;
  const double lhs = integrate(
                         [&](double r) {
                           return std::pow(std::abs(trial.value(r)), p) * std::pow(r, w_left);
                         },
                         0.0, trial.R(), spec)
                         .value;
  const double rhs = integrate(
                         [&](double r) {
                           const double lap = trial.second(r) + (n - 1.0) * trial.first(r) / r;
                           return std::pow(std::abs(lap), p) * std::pow(r, w_right);
                         },
                         0.0, trial.R(), spec)
                         .value;
  if (!(rhs > 0.0)) throw Error(ErrorCode::kDegenerate, "second_order_ratio: zero Laplacian norm");
  return std::pow(lhs / rhs, 1.0 / p);
}

double second_order_probe(int n, double p, double q, double R, int trial_count,
                          std::uint64_t seed) {
  second_order_constant(n, q);
  if (trial_count < 1) throw Error(ErrorCode::kInvalidArgument, "second_order_probe: trial_count < 1");
  double best = 0.0;
  for (int i = 0; i < trial_count; ++i) {
    Rng rng(seed, static_cast<std::uint64_t>(i));
    const int degree = rng.integer(0, 3);
    std::vector<double> factor;
    for (int d = 0; d <= degree; ++d) {
      factor.push_back(rng.uniform(-1.0, 1.0) / std::pow(R, d));
    }
    if (degree == 0 && factor[0] == 0.0) factor[0] = 1.0;
    best = std::max(best, second_order_ratio(n, p, q, SecondOrderTrial::from_factor(factor, R)));
  }
  return best;
}

double iterated_constant(const AdamsParams& params) {
  params.validate();
  const int m = params.m;
  const int n = params.n;
  if (m < 2) domain_error("iterated_constant: m must be >= 2");
  double out = 1.0;
  if (params.odd()) {
    const int k = (m - 1) / 2;
    for (int j = 0; j <= k - 2; ++j) {
      out /= static_cast<double>(n - m + 2 * j + 1) * static_cast<double>(m - 2 * j - 3);
    }
    out /= static_cast<double>(m - 1);
  } else {
    const int k = m / 2;
    for (int j = 0; j <= k - 2; ++j) {
      out /= static_cast<double>(n - m + 2 * j) * static_cast<double>(m - 2 * j - 2);
    }
  }
  return out;
}

}  // namespace adams::hardy
