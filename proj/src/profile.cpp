#include "profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "error.hpp"

namespace adams {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

struct Derivs {
  double v;
  double d1;
  double d2;
};

Derivs eval_power_sum(const PowerSumPiece& p, double t) {
  const double x = t - p.shift;
  Derivs out{0.0, 0.0, 0.0};
  for (const auto& term : p.terms) {
    const double e = term.exponent;
    if (e == 0.0) {
      out.v += term.coef;
      continue;
    }
    out.v += term.coef * std::pow(x, e);
    out.d1 += (e == 1.0) ? term.coef : term.coef * e * std::pow(x, e - 1.0);
    if (e != 1.0) {
      out.d2 += (e == 2.0) ? 2.0 * term.coef
                           : term.coef * e * (e - 1.0) * std::pow(x, e - 2.0);
    }
  }
  if (p.log_coef != 0.0) {
    out.v += p.log_coef * std::log(x);
    out.d1 += p.log_coef / x;
    out.d2 -= p.log_coef / (x * x);
  }
  return out;
}

Derivs eval_exp_saturation(const ExpSaturationPiece& p, double t) {
  const double decay = std::exp(-p.rate * (t - p.start));
  const double y = -std::expm1(-p.rate * (t - p.start));
  const double dy = p.rate * decay;
  const double ddy = -p.rate * dy;
  const double k = p.exponent;
  if (k == 1.0) {
    return {p.offset + p.coef * y, p.coef * dy, p.coef * ddy};
  }
  return {p.offset + p.coef * std::pow(y, k),
          p.coef * k * std::pow(y, k - 1.0) * dy,
          p.coef * k *
              ((k - 1.0) * std::pow(y, k - 2.0) * dy * dy +
               std::pow(y, k - 1.0) * ddy)};
}

Derivs eval_exponential(const ExponentialPiece& p, double t) {
  const double e = p.coef * std::exp(p.rate * t);
  return {p.offset + e, p.rate * e, p.rate * p.rate * e};
}

Derivs eval_spline(const SplinePiece& p, double t) {
  const auto& x = p.nodes;
  std::size_t i = static_cast<std::size_t>(
      std::upper_bound(x.begin(), x.end(), t) - x.begin());
  i = std::clamp<std::size_t>(i, 1, x.size() - 1) - 1;
  const double h = x[i + 1] - x[i];
  const double s = (t - x[i]) / h;
  const double y0 = p.values[i];
  const double y1 = p.values[i + 1];
  const double m0 = p.slopes[i] * h;
  const double m1 = p.slopes[i + 1] * h;
  const double s2 = s * s;
  const double s3 = s2 * s;
  const double v = (2 * s3 - 3 * s2 + 1) * y0 + (s3 - 2 * s2 + s) * m0 +
                   (-2 * s3 + 3 * s2) * y1 + (s3 - s2) * m1;
  const double dv = (6 * s2 - 6 * s) * y0 + (3 * s2 - 4 * s + 1) * m0 +
                    (-6 * s2 + 6 * s) * y1 + (3 * s2 - 2 * s) * m1;
  const double ddv = (12 * s - 6) * y0 + (6 * s - 4) * m0 +
                     (-12 * s + 6) * y1 + (6 * s - 2) * m1;
  return {v, dv / h, ddv / (h * h)};
}

Derivs eval_all(const PieceKind& kind, double t) {
  return std::visit(
      Overloaded{
          [t](const PowerSumPiece& p) { return eval_power_sum(p, t); },
          [t](const ExpSaturationPiece& p) { return eval_exp_saturation(p, t); },
          [t](const ExponentialPiece& p) { return eval_exponential(p, t); },
          [t](const SplinePiece& p) { return eval_spline(p, t); },
          [t](const MappedPiece& p) {
            return Derivs{p.value(t), p.first ? p.first(t) : NAN,
                          p.second ? p.second(t) : NAN};
          },
      },
      kind);
}

void validate_spline(const SplinePiece& p) {
  if (p.nodes.size() < 2 || p.values.size() != p.nodes.size() ||
      p.slopes.size() != p.nodes.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "spline piece needs >= 2 nodes with matching values/slopes");
  }
  if (!std::is_sorted(p.nodes.begin(), p.nodes.end()) ||
      std::adjacent_find(p.nodes.begin(), p.nodes.end()) != p.nodes.end()) {
    throw Error(ErrorCode::kInvalidArgument,
                "spline nodes must be strictly increasing");
  }
}

}  // namespace

std::string piece_kind_name(const PieceKind& kind) {
  return std::visit(Overloaded{
                        [](const PowerSumPiece&) { return "power_sum"; },
                        [](const ExpSaturationPiece&) { return "exp_saturation"; },
                        [](const ExponentialPiece&) { return "exponential"; },
                        [](const SplinePiece&) { return "spline"; },
                        [](const MappedPiece&) { return "mapped"; },
                    },
                    kind);
}

double piece_value(const PieceKind& kind, double t) { return eval_all(kind, t).v; }
double piece_first(const PieceKind& kind, double t) { return eval_all(kind, t).d1; }
double piece_second(const PieceKind& kind, double t) { return eval_all(kind, t).d2; }

PieceKind linear_piece(double intercept, double slope) {
  return PowerSumPiece{0.0, {{intercept, 0.0}, {slope, 1.0}}, 0.0};
}

PieceKind constant_piece(double c) { return PowerSumPiece{0.0, {{c, 0.0}}, 0.0}; }

PiecewiseProfile::PiecewiseProfile(std::vector<double> knots,
                                   std::vector<PieceKind> pieces)
    : knots_(std::move(knots)), pieces_(std::move(pieces)) {
  if (pieces_.empty() || knots_.size() != pieces_.size() + 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "profile: need n pieces and n + 1 knots");
  }
  for (std::size_t i = 0; i + 1 < knots_.size(); ++i) {
    if (!(knots_[i] < knots_[i + 1]) || !std::isfinite(knots_[i])) {
      throw Error(ErrorCode::kInvalidArgument,
                  "profile: knots must be finite and strictly increasing "
                  "(only the last may be +inf)");
    }
  }
  for (const auto& piece : pieces_) {
    if (const auto* s = std::get_if<SplinePiece>(&piece)) validate_spline(*s);
  }
}

bool PiecewiseProfile::unbounded() const {
  return std::isinf(knots_.back());
}

std::size_t PiecewiseProfile::locate(double t) const {
  if (t < knots_.front() || t > knots_.back() || std::isnan(t)) {
    throw Error(ErrorCode::kDomain, "profile: evaluation point " +
                                        std::to_string(t) + " outside domain");
  }
  const auto it = std::upper_bound(knots_.begin(), knots_.end(), t);
  const auto idx = static_cast<std::size_t>(it - knots_.begin());
  return std::min(idx == 0 ? 0 : idx - 1, pieces_.size() - 1);
}

double PiecewiseProfile::value(double t) const {
  return piece_value(pieces_[locate(t)], t);
}

double PiecewiseProfile::derivative(double t) const {
  return piece_first(pieces_[locate(t)], t);
}

double PiecewiseProfile::second_derivative(double t) const {
  return piece_second(pieces_[locate(t)], t);
}

double PiecewiseProfile::max_continuity_gap() const {
  double gap = 0.0;
  for (std::size_t i = 1; i < pieces_.size(); ++i) {
    const double left = piece_value(pieces_[i - 1], knots_[i]);
    const double right = piece_value(pieces_[i], knots_[i]);
    gap = std::max(gap, std::abs(left - right));
  }
  return gap;
}

std::optional<double> PiecewiseProfile::tail_sup() const {
  if (!unbounded()) return std::nullopt;
  const double start = knots_[knots_.size() - 2];
  const auto& tail = pieces_.back();
  return std::visit(
      Overloaded{
          [&](const PowerSumPiece& p) -> std::optional<double> {
            if (p.log_coef != 0.0) return std::nullopt;
            double bound = 0.0;
            for (const auto& term : p.terms) {
              if (term.exponent > 0.0) return std::nullopt;
              bound += std::abs(term.coef) *
                       (term.exponent == 0.0 ? 1.0
                                             : std::pow(start - p.shift, term.exponent));
            }
            return bound;
          },
          [&](const ExpSaturationPiece& p) -> std::optional<double> {
            if (p.rate <= 0.0 || p.exponent < 0.0) return std::nullopt;
            return std::abs(p.offset) + std::abs(p.coef);
          },
          [&](const ExponentialPiece& p) -> std::optional<double> {
            if (p.rate > 0.0) return std::nullopt;
            return std::abs(p.offset) + std::abs(p.coef) * std::exp(p.rate * start);
          },
          [](const SplinePiece&) -> std::optional<double> { return std::nullopt; },
          [](const MappedPiece&) -> std::optional<double> { return std::nullopt; },
      },
      tail);
}

PiecewiseProfile PiecewiseProfile::scaled(double factor) const {
  std::vector<PieceKind> out;
  out.reserve(pieces_.size());
  for (const auto& piece : pieces_) {
    out.push_back(std::visit(
        Overloaded{
            [&](PowerSumPiece p) -> PieceKind {
              for (auto& term : p.terms) term.coef *= factor;
              p.log_coef *= factor;
              return p;
            },
            [&](ExpSaturationPiece p) -> PieceKind {
              p.offset *= factor;
              p.coef *= factor;
              return p;
            },
            [&](ExponentialPiece p) -> PieceKind {
              p.offset *= factor;
              p.coef *= factor;
              return p;
            },
            [&](SplinePiece p) -> PieceKind {
              for (auto& v : p.values) v *= factor;
              for (auto& s : p.slopes) s *= factor;
              return p;
            },
            [&](const MappedPiece& p) -> PieceKind {
              MappedPiece m;
              m.label = p.label;
              m.value = [f = p.value, factor](double t) { return factor * f(t); };
              if (p.first) m.first = [f = p.first, factor](double t) { return factor * f(t); };
              if (p.second) m.second = [f = p.second, factor](double t) { return factor * f(t); };
              return m;
            },
        },
        piece));
  }
  return PiecewiseProfile(knots_, std::move(out));
}

}  // namespace adams
