#pragma once

// Weighted Hardy inequalities with power weights on (0, R):
//
//   (int_0^R |u|^q r^theta dr)^{1/q} <= C (int_0^R |u'|^p r^alpha dr)^{1/p}
//
// for u vanishing at the left (u(0+) = 0) or right (u(R-) = 0) endpoint.

#include <cstdint>
#include <span>
#include <vector>

#include "constants.hpp"
#include "profile.hpp"

namespace adams::hardy {

enum class Side { kLeftVanishing, kRightVanishing };

struct HardySetup {
  double p = 2.0;
  double q = 2.0;
  double alpha = 0.0;
  double theta = 0.0;
  double R = 1.0;
  Side side = Side::kLeftVanishing;
};

/// Bracket B <= C <= k(q,p) B on the best constant C.
struct Sandwich {
  double lower = 0.0;
  double upper = 0.0;
  double b_value = 0.0;
  double k_factor = 0.0;
};

double k_factor(double q, double p);

/// True when 1 < p <= q, R > 0 and the side's finiteness conditions hold.
bool feasible(const HardySetup& setup);

/// B_L or B_R. Uses the closed form when p = q = alpha - theta, otherwise
/// b_constant_numeric. Throws Infeasible when B = inf.
double b_constant(const HardySetup& setup);

/// The supremum located numerically: log-grid scan then golden section, plus
/// the analytic x -> 0 limit. Never uses the p = q = alpha - theta shortcut.
double b_constant_numeric(const HardySetup& setup);

Sandwich sandwich(const HardySetup& setup);

struct ProbeResult {
  double max_ratio = 0.0;
  PiecewiseProfile witness;
};

/// (int |u|^q r^theta)^{1/q} / (int |u'|^p r^alpha)^{1/p} for a trial built
/// from power_sum pieces. A first piece starting at 0 must be a single pure
/// power c r^beta. Throws Degenerate if the derivative integral vanishes.
double rayleigh_ratio(const HardySetup& setup, const PiecewiseProfile& trial);

/// Random piecewise trial in the setup's vanishing class: c (r/x1)^beta on
/// [0, x1] (left) or a constant on [0, x1] (right), then linear pieces.
PiecewiseProfile random_trial(const HardySetup& setup, std::uint64_t seed,
                              std::uint64_t index);

/// Maximum ratio over `trial_count` random trials, deterministic in `seed`.
ProbeResult rayleigh_probe(const HardySetup& setup, int trial_count,
                           std::uint64_t seed);

/// Maximum ratio over caller-supplied trials. Degenerate trials are skipped;
/// throws Degenerate when every trial is degenerate.
ProbeResult rayleigh_probe(const HardySetup& setup,
                           std::span<const PiecewiseProfile> trials);

/// Single-power trial u = r^beta on (0, R), used for near-extremal families.
PiecewiseProfile power_trial(double beta, double R);

/// q^2 / ((q - 1) n (n - 2q)).
double second_order_constant(int n, double q);

/// u(r) = sum_i coeffs[i] r^i on [0, R] with u(R) = 0 and u'(R) = 0.
class SecondOrderTrial {
 public:
  /// Throws InvalidArgument if the boundary conditions fail.
  static SecondOrderTrial from_polynomial(std::vector<double> coeffs, double R);
  /// (R - r)^2 * sum_i factor[i] r^i.
  static SecondOrderTrial from_factor(const std::vector<double>& factor, double R);

  double value(double r) const;
  double first(double r) const;
  double second(double r) const;
  double R() const { return R_; }
  const std::vector<double>& coeffs() const { return coeffs_; }

 private:
  SecondOrderTrial(std::vector<double> coeffs, double R)
      : coeffs_(std::move(coeffs)), R_(R) {}
  std::vector<double> coeffs_;
  double R_;
};

/// LHS/RHS of the second-order radial inequality with weights
/// r^{p(n-2q)/q - 1} and r^{np/q - 1}.
double second_order_ratio(int n, double p, double q, const SecondOrderTrial& trial);

double second_order_probe(int n, double p, double q, double R, int trial_count,
                          std::uint64_t seed);

/// Even m = 2k: prod_{j=0}^{k-2} 1/((n-m+2j)(m-2j-2)).
/// Odd m = 2k+1: prod_{j=0}^{k-2} 1/((n-m+2j+1)(m-2j-3)) * 1/(m-1).
double iterated_constant(const AdamsParams& params);

}  // namespace adams::hardy
