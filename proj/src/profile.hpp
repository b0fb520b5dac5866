#pragma once

// One-dimensional piecewise-analytic functions on [t0, T] or [t0, inf).

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace adams {

struct PowerTerm {
  double coef = 0.0;
  double exponent = 0.0;
};

/// sum_i coef_i (t - shift)^exponent_i + log_coef * ln(t - shift)
struct PowerSumPiece {
  double shift = 0.0;
  std::vector<PowerTerm> terms;
  double log_coef = 0.0;
};

/// offset + coef * (1 - exp(-rate (t - start)))^exponent
struct ExpSaturationPiece {
  double offset = 0.0;
  double coef = 0.0;
  double rate = 1.0;
  double start = 0.0;
  double exponent = 1.0;
};

/// offset + coef * exp(rate t)
struct ExponentialPiece {
  double offset = 0.0;
  double coef = 0.0;
  double rate = 0.0;
};

/// Cubic Hermite interpolant through (nodes, values) with node slopes.
struct SplinePiece {
  std::vector<double> nodes;
  std::vector<double> values;
  std::vector<double> slopes;
};

/// Arbitrary callable piece (e.g. a composition). Not serializable.
struct MappedPiece {
  std::function<double(double)> value;
  std::function<double(double)> first;
  std::function<double(double)> second;
  std::string label;
};

using PieceKind = std::variant<PowerSumPiece, ExpSaturationPiece,
                               ExponentialPiece, SplinePiece, MappedPiece>;

std::string piece_kind_name(const PieceKind& kind);

class PiecewiseProfile {
 public:
  PiecewiseProfile() = default;

  /// `knots` has one more entry than `pieces`; the final knot may be +inf.
  /// Throws InvalidArgument on non-increasing knots or size mismatch.
  PiecewiseProfile(std::vector<double> knots, std::vector<PieceKind> pieces);

  double value(double t) const;
  double derivative(double t) const;
  double second_derivative(double t) const;

  double begin() const { return knots_.front(); }
  double end() const { return knots_.back(); }
  bool unbounded() const;
  std::size_t piece_count() const { return pieces_.size(); }
  const std::vector<double>& knots() const { return knots_; }
  const PieceKind& piece(std::size_t i) const { return pieces_.at(i); }

  /// Index of the piece containing t; pieces are closed on the left, the
  /// last one also on the right.
  std::size_t locate(double t) const;

  /// Largest jump |left - right| over interior knots.
  double max_continuity_gap() const;

  /// An upper bound for sup |g| on [last finite knot, inf) when the tail
  /// piece is provably bounded; nullopt otherwise or for bounded domains.
  std::optional<double> tail_sup() const;

  /// Returns a copy with every piece's value multiplied by `factor`.
  PiecewiseProfile scaled(double factor) const;

 private:
  std::vector<double> knots_;
  std::vector<PieceKind> pieces_;
};

// Per-piece evaluation, usable directly on a PieceKind.
double piece_value(const PieceKind& kind, double t);
double piece_first(const PieceKind& kind, double t);
double piece_second(const PieceKind& kind, double t);

/// Convenience constructors.
PieceKind linear_piece(double intercept, double slope);
PieceKind constant_piece(double c);

}  // namespace adams
