#pragma once

// One-dimensional exponential functional J(g) = int_0^inf e^{g^q(t) - t} dt
// on profiles with p-energy int |g'|^p <= 1, q = p / (p - 1).

#include <cstdint>

#include "profile.hpp"
#include "quadrature.hpp"

namespace adams::moser1d {

/// int_a^b |g'|^p dt; b may be +inf. Linear and exponential pieces are
/// integrated in closed form.
double energy(const PiecewiseProfile& g, double p, double a, double b,
              const QuadratureSpec& spec = {});

/// J(g). Throws EnergyViolation when the (0, inf) energy with p = q/(q-1)
/// exceeds 1 + 1e-9.
double cc_functional(const PiecewiseProfile& g, double q, const QuadratureSpec& spec = {});

/// J(g) without the energy check.
double cc_functional_unchecked(const PiecewiseProfile& g, double q,
                               const QuadratureSpec& spec = {});

/// int_a^inf e^{g^q - t} dt with the same tail certification as J.
double exp_tail_integral(const PiecewiseProfile& g, double q, double a,
                         const QuadratureSpec& spec = {});

struct LemmaBound {
  double lhs = 0.0;
  double rhs = 0.0;
  double delta = 0.0;
};

/// lhs = int_a^inf e^{w^q - t}; rhs is the certificate built from
/// delta = energy(w, p, (a, inf)) < 1. Requires p >= 2.
LemmaBound cc_lemma_bound(const PiecewiseProfile& w, double p, double a,
                          const QuadratureSpec& spec = {});

struct LemmaTrial {
  PiecewiseProfile w;
  double a = 0.0;
  double delta = 0.0;
};

/// Nonnegative nondecreasing piecewise-linear w with constant tail and
/// energy on (a, inf) equal to a delta drawn from (0, 0.9).
LemmaTrial random_lemma_trial(double p, std::uint64_t seed, std::uint64_t index);

/// g_a(t) = t a^{-1/p} on [0, a], a^{1/q} afterwards. Unit energy.
PiecewiseProfile moser_family(double a, double p);

struct MaximizerResult {
  PiecewiseProfile best;
  double J = 0.0;
  int start = 0;  // winning multi-start index
};

struct MaximizerOptions {
  int starts = 4;
  int iterations = 60;
};

/// Projected gradient ascent of J over piecewise-linear g with g(0) = 0,
/// unit energy and energy on (0, A) at most epsilon.
MaximizerResult concentration_maximizer(double p, double A, double epsilon, int knot_count,
                                        std::uint64_t seed, const QuadratureSpec& spec = {},
                                        const MaximizerOptions& options = {});

}  // namespace adams::moser1d
