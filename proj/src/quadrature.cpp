#include "quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include "error.hpp"

namespace adams {
namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 61>;
using Gauss = boost::math::quadrature::gauss<double, 30>;

struct Panel {
  double a;
  double b;
  double value;
  double error;
  double l1;
  bool operator<(const Panel& other) const { return error < other.error; }
};

// One 61-point Kronrod panel with its embedded 30-point Gauss estimate.
Panel panel(const std::function<double(double)>& f, double a, double b) {
  const auto& x = Kronrod::abscissa();
  const auto& wk = Kronrod::weights();
  const auto& wg = Gauss::weights();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double kronrod = 0.0;
  double gauss = 0.0;
  double l1 = 0.0;
  const double f0 = f(mid);
  kronrod += f0 * wk[0];
  l1 += std::abs(f0) * wk[0];
  for (std::size_t i = 1; i < x.size(); ++i) {
    const double fp = f(mid + half * x[i]);
    const double fm = f(mid - half * x[i]);
    kronrod += (fp + fm) * wk[i];
    l1 += (std::abs(fp) + std::abs(fm)) * wk[i];
    if (i % 2 == 1) gauss += (fp + fm) * wg[i / 2];
  }
  const double eps = std::numeric_limits<double>::epsilon();
  const double error = std::max(std::abs(kronrod - gauss) * half, 50.0 * eps * l1 * half);
  return {a, b, kronrod * half, error, l1 * half};
}

}  // namespace

void QuadratureSpec::validate() const {
  const auto in_unit = [](double v) { return v > 0.0 && v < 1.0; };
  if (!in_unit(rel_tol) || !in_unit(abs_tol) || !in_unit(truncation_epsilon)) {
    throw Error(ErrorCode::kInvalidArgument,
                "quadrature tolerances must lie in (0, 1)");
  }
  if (max_subdivisions < 8) {
    throw Error(ErrorCode::kInvalidArgument,
                "quadrature max_subdivisions must be >= 8");
  }
}

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureSpec& spec) {
  if (std::isnan(a) || std::isnan(b)) {
    throw Error(ErrorCode::kInvalidArgument, "integrate: NaN endpoint");
  }
  if (a == b) return {};
  if (a > b) {
    const auto r = integrate(f, b, a, spec);
    return {-r.value, r.error_estimate};
  }
  if (std::isinf(a) && std::isinf(b)) {
    const auto left = integrate(f, a, 0.0, spec);
    const auto right = integrate(f, 0.0, b, spec);
    return {left.value + right.value, left.error_estimate + right.error_estimate};
  }

  // Semi-infinite ranges map onto [0, 1) through t = a + x / (1 - x).
  std::function<double(double)> g = f;
  double lo = a;
  double hi = b;
  if (std::isinf(b)) {
    g = [&f, a](double x) {
      const double d = 1.0 - x;
      return f(a + x / d) / (d * d);
    };
    lo = 0.0;
    hi = 1.0;
  } else if (std::isinf(a)) {
    g = [&f, b](double x) {
      const double d = 1.0 - x;
      return f(b - x / d) / (d * d);
    };
    lo = 0.0;
    hi = 1.0;
  }

  std::priority_queue<Panel> panels;
  Panel first = panel(g, lo, hi);
  double value = first.value;
  double error = first.error;
  double l1 = first.l1;
  panels.push(first);
  const auto target = [&] { return std::max(spec.rel_tol * l1, spec.abs_tol); };
  while (error > target() && static_cast<int>(panels.size()) < spec.max_subdivisions) {
    const Panel worst = panels.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;
    panels.pop();
    const Panel left = panel(g, worst.a, mid);
    const Panel right = panel(g, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    l1 += left.l1 + right.l1 - worst.l1;
    panels.push(left);
    panels.push(right);
  }
  // Re-sum to shed the drift of the running totals.
  value = 0.0;
  error = 0.0;
  while (!panels.empty()) {
    value += panels.top().value;
    error += panels.top().error;
    panels.pop();
  }
  if (!std::isfinite(value)) {
    throw QuadratureError("integrate: non-finite integral", error);
  }
  // Error estimates up to 10x the requested tolerance are accepted.
  const double allowed = 10.0 * target();
  if (error > allowed) {
    std::ostringstream msg;
    msg << "integrate: no convergence on [" << a << ", " << b
        << "], error estimate " << error << " > " << allowed;
    throw QuadratureError(msg.str(), error);
  }
  return {value, error};
}

}  // namespace adams
