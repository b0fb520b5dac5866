#include "moser1d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "error.hpp"
#include "specfun.hpp"

namespace adams::moser1d {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kChunk = 4.0;
constexpr int kMaxChunks = 4096;

void check_p(double p) {
  if (!(p > 1.0)) domain_error("moser1d: exponent must be > 1");
}

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

double uniform(std::mt19937_64& engine, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine);
}

// Closed-form int_lo^hi |g'|^p when the piece allows it.
std::optional<double> closed_energy(const PieceKind& kind, double p, double lo, double hi) {
  if (const auto* ps = std::get_if<PowerSumPiece>(&kind)) {
    if (ps->log_coef != 0.0) return std::nullopt;
    double slope = 0.0;
    for (const auto& t : ps->terms) {
      if (t.exponent == 1.0) {
        slope += t.coef;
      } else if (t.exponent != 0.0) {
        return std::nullopt;
      }
    }
    if (slope == 0.0) return 0.0;
    return std::pow(std::abs(slope), p) * (hi - lo);
  }
  if (const auto* es = std::get_if<ExpSaturationPiece>(&kind)) {
    if (es->exponent != 1.0 || !(es->rate > 0.0)) return std::nullopt;
    const double k = std::abs(es->coef) * es->rate;
    const double pr = p * es->rate;
    return std::pow(k, p) / pr * std::exp(-pr * (lo - es->start)) * -std::expm1(-pr * (hi - lo));
  }
  if (const auto* ex = std::get_if<ExponentialPiece>(&kind)) {
    if (ex->rate == 0.0 || ex->coef == 0.0) return 0.0;
    if (ex->rate > 0.0) return std::nullopt;
    const double k = std::pow(std::abs(ex->coef * ex->rate), p);
    const double pr = p * ex->rate;
    return k / -pr * std::exp(pr * lo) * -std::expm1(pr * (hi - lo));
  }
  return std::nullopt;
}

double integrate_chunked(const std::function<double(double)>& f, double lo, double hi,
                         const QuadratureSpec& spec) {
  if (!(hi > lo)) return 0.0;
  const int chunks =
      std::clamp(static_cast<int>(std::ceil((hi - lo) / kChunk)), 1, kMaxChunks);
  const double width = (hi - lo) / chunks;
  double total = 0.0;
  for (int i = 0; i < chunks; ++i) {
    const double a = lo + i * width;
    const double b = (i + 1 == chunks) ? hi : lo + (i + 1) * width;
    total += integrate(f, a, b, spec).value;
  }
  return total;
}

// Truncation point for int_lo^inf of the tail piece.
double tail_cutoff(const PiecewiseProfile& g, double q, double lo, const QuadratureSpec& spec) {
  const double eps = spec.truncation_epsilon;
  if (const auto sup = g.tail_sup()) {
    return std::max(lo, std::pow(*sup, q) - std::log(eps));
  }
  // g(lo + s) <= G + delta^{1/p} s^{1/q}; f is concave with slope -> delta^{q/p} - 1.
  const double p = q / (q - 1.0);
  const double delta = energy(g, p, lo, kInf, spec);
  if (!(delta < 1.0)) {
    throw QuadratureError("cc_functional: tail energy >= 1, truncation not certifiable", kInf);
  }
  const double G = std::abs(g.value(lo));
  const double d = std::pow(delta, 1.0 / p);
  const auto f = [&](double s) { return std::pow(G + d * std::pow(s, 1.0 / q), q) - lo - s; };
  const auto df = [&](double s) {
    return std::pow(G + d * std::pow(s, 1.0 / q), q - 1.0) * d * std::pow(s, 1.0 / q - 1.0) - 1.0;
  };
  for (double s = 1.0; s < 1e9; s *= 2.0) {
    const double slope = df(s);
    if (slope < 0.0 && std::exp(f(s)) / -slope < eps) return lo + s;
  }
  throw QuadratureError("cc_functional: tail majorant does not decay", kInf);
}

}  // namespace

double energy(const PiecewiseProfile& g, double p, double a, double b, const QuadratureSpec& spec) {
  check_p(p);
  spec.validate();
  if (!(b > a)) return 0.0;
  const auto& knots = g.knots();
  double total = 0.0;
  for (std::size_t i = 0; i < g.piece_count(); ++i) {
    const double lo = std::max(a, knots[i]);
    const double hi = std::min(b, knots[i + 1]);
    if (!(hi > lo)) continue;
    const PieceKind& kind = g.piece(i);
    if (const auto closed = closed_energy(kind, p, lo, hi)) {
      total += *closed;
      continue;
    }
    total += integrate([&](double t) { return std::pow(std::abs(piece_first(kind, t)), p); }, lo,
                       hi, spec)
                 .value;
  }
  return total;
}

double exp_tail_integral(const PiecewiseProfile& g, double q, double a, const QuadratureSpec& spec) {
  check_p(q);
  spec.validate();
  if (a < g.begin()) domain_error("cc_functional: integration start precedes the profile");
  const auto& knots = g.knots();
  double total = 0.0;
  for (std::size_t i = 0; i < g.piece_count(); ++i) {
    double lo = std::max(a, knots[i]);
    double hi = knots[i + 1];
    if (!(hi > lo)) continue;
    const PieceKind& kind = g.piece(i);
    if (std::isinf(hi)) hi = tail_cutoff(g, q, lo, spec);
    total += integrate_chunked(
        [&](double t) { return std::exp(std::pow(std::abs(piece_value(kind, t)), q) - t); }, lo,
        hi, spec);
  }
  if (!g.unbounded()) {
    // Constant extension beyond the last knot.
    const double end = g.end();
    const double start = std::max(a, end);
    total += std::exp(std::pow(std::abs(g.value(end)), q) - start);
  }
  if (!std::isfinite(total)) throw QuadratureError("cc_functional: non-finite value", kInf);
  return total;
}

double cc_functional_unchecked(const PiecewiseProfile& g, double q, const QuadratureSpec& spec) {
  return exp_tail_integral(g, q, g.begin(), spec);
}

double cc_functional(const PiecewiseProfile& g, double q, const QuadratureSpec& spec) {
  check_p(q);
  const double p = q / (q - 1.0);
  const double e = energy(g, p, g.begin(), g.end(), spec);
  if (e > 1.0 + 1e-9) {
    throw Error(ErrorCode::kEnergyViolation,
                "cc_functional: energy " + std::to_string(e) + " exceeds 1");
  }
  return cc_functional_unchecked(g, q, spec);
}

LemmaBound cc_lemma_bound(const PiecewiseProfile& w, double p, double a, const QuadratureSpec& spec) {
  if (!(p >= 2.0)) domain_error("cc_lemma_bound: p must be >= 2");
  const double q = p / (p - 1.0);
  const double delta = energy(w, p, a, w.end(), spec);
  if (!(delta < 1.0)) domain_error("cc_lemma_bound: tail energy must be < 1");
  const double wa = std::abs(w.value(a));
  const double root = std::pow(delta, 1.0 / (p - 1.0));
  const double gamma_p = delta * std::pow(1.0 - root, 1.0 - p);
  const double c = q * std::pow(wa, q - 1.0);
  const double log_rhs = std::pow(wa, q) - a - std::log1p(-root) +
                         std::pow((p - 1.0) / p, p - 1.0) * std::pow(c, p) * gamma_p / p +
                         specfun::digamma(p) + specfun::kEulerGamma;
  return {exp_tail_integral(w, q, a, spec), std::exp(log_rhs), delta};
}

LemmaTrial random_lemma_trial(double p, std::uint64_t seed, std::uint64_t index) {
  check_p(p);
  auto engine = make_engine(seed, index);
  const double a = uniform(engine, 0.5, 6.0);
  const double wa = uniform(engine, 0.0, 1.5);
  const int segments = std::uniform_int_distribution<int>(1, 5)(engine);
  std::vector<double> knots{0.0, a};
  std::vector<double> slopes;
  double raw = 0.0;
  for (int i = 0; i < segments; ++i) {
    const double len = uniform(engine, 0.2, 4.0);
    const double slope = uniform(engine, 0.0, 1.0) < 0.2 ? 0.0 : uniform(engine, 0.05, 1.0);
    knots.push_back(knots.back() + len);
    slopes.push_back(slope);
    raw += std::pow(slope, p) * len;
  }
  if (raw == 0.0) {
    slopes.back() = 1.0;
    raw = knots.back() - knots[knots.size() - 2];
  }
  const double delta = uniform(engine, 0.01, 0.89);
  const double scale = std::pow(delta / raw, 1.0 / p);

  std::vector<PieceKind> pieces{linear_piece(0.0, wa / a)};
  double value = wa;
  for (int i = 0; i < segments; ++i) {
    const double slope = slopes[static_cast<std::size_t>(i)] * scale;
    pieces.push_back(PowerSumPiece{knots[static_cast<std::size_t>(i) + 1],
                                   {{value, 0.0}, {slope, 1.0}}, 0.0});
    value += slope * (knots[static_cast<std::size_t>(i) + 2] - knots[static_cast<std::size_t>(i) + 1]);
  }
  pieces.push_back(constant_piece(value));
  knots.push_back(kInf);
  PiecewiseProfile w(std::move(knots), std::move(pieces));
  const double achieved = energy(w, p, a, kInf);
  return {std::move(w), a, achieved};
}

PiecewiseProfile moser_family(double a, double p) {
  check_p(p);
  if (!(a > 0.0)) domain_error("moser_family: a must be positive");
  const double q = p / (p - 1.0);
  return PiecewiseProfile({0.0, a, kInf},
                          {linear_piece(0.0, std::pow(a, -1.0 / p)),
                           constant_piece(std::pow(a, 1.0 / q))});
}

namespace {

struct Layout {
  double p;
  double A;
  double h_max;
  std::vector<double> knots;  // 0, A, ..., T_max
};

PiecewiseProfile build_profile(const Layout& L, const std::vector<double>& x) {
  std::vector<double> knots = L.knots;
  std::vector<PieceKind> pieces{linear_piece(0.0, x[0] / L.A)};
  double value = x[0];
  for (std::size_t j = 1; j < x.size(); ++j) {
    const double len = knots[j + 1] - knots[j];
    pieces.push_back(PowerSumPiece{knots[j], {{value, 0.0}, {x[j] / len, 1.0}}, 0.0});
    value += x[j];
  }
  pieces.push_back(constant_piece(value));
  knots.push_back(kInf);
  return PiecewiseProfile(std::move(knots), std::move(pieces));
}

// x[0] = g(A) within the concentration cap, x[j] >= 0 increments rescaled so
// the total energy is exactly 1.
void project(const Layout& L, std::vector<double>& x) {
  x[0] = std::clamp(x[0], 0.0, L.h_max);
  const double head = std::pow(x[0], L.p) / std::pow(L.A, L.p - 1.0);
  double tail = 0.0;
  for (std::size_t j = 1; j < x.size(); ++j) {
    x[j] = std::max(x[j], 0.0);
    tail += std::pow(x[j], L.p) / std::pow(L.knots[j + 1] - L.knots[j], L.p - 1.0);
  }
  if (tail == 0.0) {
    for (std::size_t j = 1; j < x.size(); ++j) x[j] = L.knots[j + 1] - L.knots[j];
    project(L, x);
    return;
  }
  const double factor = std::pow((1.0 - head) / tail, 1.0 / L.p);
  for (std::size_t j = 1; j < x.size(); ++j) x[j] *= factor;
}

}  // namespace

MaximizerResult concentration_maximizer(double p, double A, double epsilon, int knot_count,
                                        std::uint64_t seed, const QuadratureSpec& spec,
                                        const MaximizerOptions& options) {
  if (!(p >= 2.0)) domain_error("concentration_maximizer: p must be >= 2");
  if (!(A > 0.0)) domain_error("concentration_maximizer: A must be positive");
  if (!(epsilon > 0.0 && epsilon < 0.5)) domain_error("concentration_maximizer: epsilon must lie in (0, 0.5)");
  if (knot_count < 8) domain_error("concentration_maximizer: knot_count must be >= 8");
  if (options.starts < 1 || options.iterations < 0) {
    throw Error(ErrorCode::kInvalidArgument, "concentration_maximizer: bad options");
  }
  const double q = p / (p - 1.0);
  Layout L{p, A, std::pow(epsilon * std::pow(A, p - 1.0), 1.0 / p), {0.0}};
  const double t_max = std::max(10.0 * A, 60.0);
  for (int j = 1; j < knot_count; ++j) {
    L.knots.push_back(A * std::pow(t_max / A, static_cast<double>(j - 1) / (knot_count - 2)));
  }
  const std::size_t dim = L.knots.size() - 1;

  const auto objective = [&](const std::vector<double>& x) {
    return cc_functional_unchecked(build_profile(L, x), q, spec);
  };

  MaximizerResult best;
  best.J = -kInf;
  for (int s = 0; s < options.starts; ++s) {
    auto engine = make_engine(seed, static_cast<std::uint64_t>(s));
    std::vector<double> x(dim);
    x[0] = uniform(engine, 0.0, 1.0) * L.h_max;
    for (std::size_t j = 1; j < dim; ++j) x[j] = uniform(engine, 0.0, 1.0) * (L.knots[j + 1] - L.knots[j]);
    project(L, x);
    double J = objective(x);
    double step = 0.5;
    for (int it = 0; it < options.iterations && step > 1e-8; ++it) {
      std::vector<double> grad(dim);
      double norm = 0.0;
      for (std::size_t i = 0; i < dim; ++i) {
        auto y = x;
        const double h = 1e-6 * std::max(1.0, std::abs(x[i]));
        y[i] += h;
        grad[i] = (objective(y) - J) / h;
        norm += grad[i] * grad[i];
      }
      norm = std::sqrt(norm);
      if (norm == 0.0) break;
      while (step > 1e-8) {
        auto y = x;
        for (std::size_t i = 0; i < dim; ++i) y[i] += step * grad[i] / norm;
        project(L, y);
        const double Jy = objective(y);
        if (Jy > J) {
          x = std::move(y);
          J = Jy;
          step *= 1.5;
          break;
        }
        step *= 0.5;
      }
    }
    if (J >= best.J) {
      best.J = J;
      best.best = build_profile(L, x);
      best.start = s;
    }
  }
  return best;
}

}  // namespace adams::moser1d
