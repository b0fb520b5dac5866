#include "rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "constants.hpp"
#include "error.hpp"

namespace adams::rearrange {
namespace {

void check_dimension(int n) {
  if (n < 2) domain_error("rearrange: dimension n must be >= 2");
}

// Cumulative measures V_i / omega_n.
std::vector<double> scaled_volumes_of(const SampledFunction& f, double omega) {
  std::vector<double> radii;
  double volume = 0.0;
  for (const auto& c : f.cells) {
    volume += c.measure;
    radii.push_back(volume / omega);
  }
  return radii;
}

}  // namespace

void SampledFunction::validate() const {
  if (cells.empty()) throw Error(ErrorCode::kInvalidArgument, "sampled function has no cells");
  for (const auto& c : cells) {
    if (!(c.measure > 0.0) || !std::isfinite(c.measure) || !std::isfinite(c.value)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "sampled function cells need finite values and positive measure");
    }
  }
}

double SampledFunction::total_measure() const {
  return std::accumulate(cells.begin(), cells.end(), 0.0,
                         [](double acc, const Cell& c) { return acc + c.measure; });
}

SampledFunction decreasing_rearrangement(const SampledFunction& f) {
  f.validate();
  SampledFunction out = f;
  for (auto& c : out.cells) c.value = std::abs(c.value);
  std::stable_sort(out.cells.begin(), out.cells.end(),
                   [](const Cell& a, const Cell& b) { return a.value > b.value; });
  return out;
}

RadialProfile symmetrize(const SampledFunction& f, int n) {
  check_dimension(n);
  const SampledFunction sharp = decreasing_rearrangement(f);
  const double omega = sphere_constants(n).omega_ball;
  std::vector<double> knots{0.0};
  std::vector<PieceKind> pieces;
  const auto scaled_volumes = scaled_volumes_of(sharp, omega);
  for (std::size_t i = 0; i < sharp.cells.size(); ++i) {
    const double r = std::pow(scaled_volumes[i], 1.0 / n);
    if (!(r > knots.back())) continue;  // absorbed by rounding; measure is negligible
    knots.push_back(r);
    pieces.push_back(constant_piece(sharp.cells[i].value));
  }
  return {knots.back(), n, PiecewiseProfile(std::move(knots), std::move(pieces))};
}

RadialProfile talenti_radial_solution(const SampledFunction& f_sharp, int n, double R) {
  check_dimension(n);
  f_sharp.validate();
  if (!(R > 0.0)) domain_error("talenti_radial_solution: R must be positive");
  for (std::size_t i = 1; i < f_sharp.cells.size(); ++i) {
    if (f_sharp.cells[i].value > f_sharp.cells[i - 1].value) {
      throw Error(ErrorCode::kMonotonicity,
                  "talenti_radial_solution: data must be nonincreasing");
    }
  }
  const double omega = sphere_constants(n).omega_ball;
  const double ball = omega * std::pow(R, n);
  if (f_sharp.total_measure() > ball * (1.0 + 1e-12)) {
    domain_error("talenti_radial_solution: total measure exceeds |B_R|");
  }

  // Plateaus in radius: [r_i, r_{i+1}] carries value c_i, S_i = omega r_i^n,
  // F_i = int_0^{S_i} f^#. There v(r) = C_i - A_i P(r) - c_i r^2 / (2n) with
  // A_i = (F_i - c_i S_i) / (n omega) and P the primitive of r^{1-n}.
  struct Plateau {
    double r0, r1, c, S, F;
  };
  std::vector<Plateau> plateaus;
  double S = 0.0;
  double F = 0.0;
  double r0 = 0.0;
  for (const auto& cell : f_sharp.cells) {
    const double S1 = std::min(S + cell.measure, ball);
    const double r1 = (S1 >= ball) ? R : std::min(std::pow(S1 / omega, 1.0 / n), R);
    if (r1 > r0) plateaus.push_back({r0, r1, cell.value, S, F});
    F += cell.value * (S1 - S);
    S = S1;
    r0 = r1;
    if (r0 >= R) break;
  }
  if (r0 < R) plateaus.push_back({r0, R, 0.0, S, F});

  const double dn = n;
  const auto make_piece = [&](const Plateau& pl, double constant) {
    PowerSumPiece piece{0.0, {{constant, 0.0}}, 0.0};
    const double A = (pl.F - pl.c * pl.S) / (dn * omega);
    if (A != 0.0) {
      if (n == 2) {
        piece.log_coef = -A;
      } else {
        piece.terms.push_back({-A / (2.0 - dn), 2.0 - dn});
      }
    }
    if (pl.c != 0.0) piece.terms.push_back({-pl.c / (2.0 * dn), 2.0});
    return piece;
  };

  std::vector<PieceKind> pieces(plateaus.size());
  double outer_value = 0.0;
  for (std::size_t k = plateaus.size(); k-- > 0;) {
    const auto& pl = plateaus[k];
    PowerSumPiece probe = make_piece(pl, 0.0);
    const double constant = outer_value - piece_value(probe, pl.r1);
    PowerSumPiece piece = make_piece(pl, constant);
    outer_value = piece_value(piece, pl.r0 > 0.0 ? pl.r0 : 0.0);
    pieces[k] = std::move(piece);
  }
  std::vector<double> knots{0.0};
  for (const auto& pl : plateaus) knots.push_back(pl.r1);
  return {R, n, PiecewiseProfile(std::move(knots), std::move(pieces))};
}

PiecewiseProfile radial_laplacian(const RadialProfile& u) {
  check_dimension(u.n);
  const double dn = u.n;
  std::vector<PieceKind> out;
  for (std::size_t i = 0; i < u.profile.piece_count(); ++i) {
    const PieceKind& kind = u.profile.piece(i);
    const auto* ps = std::get_if<PowerSumPiece>(&kind);
    if (ps != nullptr && ps->shift == 0.0) {
      PowerSumPiece lap{0.0, {}, 0.0};
      for (const auto& t : ps->terms) {
        const double factor = t.exponent * (t.exponent + dn - 2.0);
        if (factor != 0.0 && t.coef != 0.0) lap.terms.push_back({t.coef * factor, t.exponent - 2.0});
      }
      if (ps->log_coef != 0.0 && u.n != 2) {
        lap.terms.push_back({ps->log_coef * (dn - 2.0), -2.0});
      }
      if (lap.terms.empty()) lap.terms.push_back({0.0, 0.0});
      out.push_back(std::move(lap));
      continue;
    }
    MappedPiece mapped;
    mapped.label = "radial_laplacian";
    mapped.value = [kind, dn](double r) {
      return piece_second(kind, r) + (dn - 1.0) * piece_first(kind, r) / r;
    };
    out.push_back(std::move(mapped));
  }
  return PiecewiseProfile(u.profile.knots(), std::move(out));
}

PiecewiseProfile energy_change_of_variables(const RadialProfile& w, int m) {
  const AdamsParams params{m, w.n};
  params.validate();
  const double dn = w.n;
  const double scale = std::pow(beta0(params), (dn - m) / dn);
  const double R = w.R;
  const auto& rk = w.profile.knots();
  if (!(std::abs(rk.back() - R) <= 1e-12 * R) || rk.front() != 0.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "energy_change_of_variables: profile must span [0, R]");
  }

  // t-knots run from r = R (t = 0) inward to r = 0 (t = inf).
  std::vector<double> knots{0.0};
  std::vector<PieceKind> pieces;
  for (std::size_t k = w.profile.piece_count(); k-- > 0;) {
    const PieceKind kind = w.profile.piece(k);
    knots.push_back(rk[k] > 0.0 ? dn * std::log(R / rk[k])
                                : std::numeric_limits<double>::infinity());
    MappedPiece mapped;
    mapped.label = "change_of_variables";
    mapped.value = [kind, scale, R, dn](double t) {
      return scale * piece_value(kind, R * std::exp(-t / dn));
    };
    mapped.first = [kind, scale, R, dn](double t) {
      const double r = R * std::exp(-t / dn);
      return -scale * piece_first(kind, r) * r / dn;
    };
    mapped.second = [kind, scale, R, dn](double t) {
      const double r = R * std::exp(-t / dn);
      return scale * (piece_second(kind, r) * r * r + piece_first(kind, r) * r) / (dn * dn);
    };
    pieces.push_back(std::move(mapped));
  }
  return PiecewiseProfile(std::move(knots), std::move(pieces));
}

}  // namespace adams::rearrange
