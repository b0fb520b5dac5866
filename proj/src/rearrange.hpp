#pragma once

// Rearrangements of simple functions and radial Poisson utilities.

#include <vector>

#include "profile.hpp"

namespace adams::rearrange {

struct Cell {
  double measure = 0.0;
  double value = 0.0;
};

/// Simple function: finitely many cells of positive measure.
struct SampledFunction {
  std::vector<Cell> cells;

  /// Throws InvalidArgument when empty or a measure is not positive/finite.
  void validate() const;
  double total_measure() const;
};

/// Radial function of |x| on the ball of radius R in R^n.
struct RadialProfile {
  double R = 1.0;
  int n = 2;
  PiecewiseProfile profile;
};

/// Cells of |f| sorted by value descending; ties keep input order.
SampledFunction decreasing_rearrangement(const SampledFunction& f);

/// u*(r) = u^#(omega_n r^n) as a radial step profile on the ball whose volume
/// equals the total measure. Plateau i ends at (V_i / omega_n)^{1/n}.
RadialProfile symmetrize(const SampledFunction& f, int n);

/// Radial solution of -Lap v = f^#(omega_n |x|^n) in B_R with v = 0 on the
/// boundary, by exact piecewise integration. Data beyond the total measure
/// of `f_sharp` is zero. Throws Monotonicity if values increase.
RadialProfile talenti_radial_solution(const SampledFunction& f_sharp, int n, double R);

/// r -> u'' + (n - 1) u' / r, piece by piece. Power-sum pieces with zero
/// shift map to power-sum pieces; others become mapped pieces.
PiecewiseProfile radial_laplacian(const RadialProfile& u);

/// g(t) = beta0(m, n)^{(n-m)/n} w(R e^{-t/n}) on [0, inf).
PiecewiseProfile energy_change_of_variables(const RadialProfile& w, int m);

}  // namespace adams::rearrange
