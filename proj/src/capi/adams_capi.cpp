#include "adams/adams.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "constants.hpp"
#include "error.hpp"
#include "extremal.hpp"
#include "hardy.hpp"
#include "json_io.hpp"
#include "moser1d.hpp"
#include "rearrange.hpp"

struct adams_profile {
  adams::PiecewiseProfile profile;
};

namespace {

thread_local std::string g_last_error;

adams_status to_status(adams::ErrorCode code) {
  switch (code) {
    case adams::ErrorCode::kDomain: return ADAMS_E_DOMAIN;
    case adams::ErrorCode::kOverflow: return ADAMS_E_OVERFLOW;
    case adams::ErrorCode::kQuadrature: return ADAMS_E_QUADRATURE;
    case adams::ErrorCode::kInfeasible: return ADAMS_E_INFEASIBLE;
    case adams::ErrorCode::kEnergyViolation: return ADAMS_E_ENERGY;
    case adams::ErrorCode::kDegenerate: return ADAMS_E_DEGENERATE;
    case adams::ErrorCode::kMonotonicity: return ADAMS_E_MONOTONICITY;
    case adams::ErrorCode::kInvalidArgument: return ADAMS_E_INVALID_ARGUMENT;
  }
  return ADAMS_E_INTERNAL;
}

template <class F>
adams_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return ADAMS_OK;
  } catch (const adams::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return ADAMS_E_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ADAMS_E_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw adams::Error(adams::ErrorCode::kInvalidArgument, what);
}

adams::QuadratureSpec to_spec(const adams_quad_spec* spec) {
  adams::QuadratureSpec out;
  if (spec != nullptr) {
    out.rel_tol = spec->rel_tol;
    out.abs_tol = spec->abs_tol;
    out.max_subdivisions = spec->max_subdivisions;
    out.truncation_epsilon = spec->truncation_epsilon;
  }
  out.validate();
  return out;
}

adams::hardy::HardySetup to_setup(const adams_hardy_setup* s) {
  require(s != nullptr, "null hardy setup");
  require(s->side == 0 || s->side == 1, "hardy side must be 0 or 1");
  return {s->p, s->q, s->alpha, s->theta, s->R,
          s->side == 0 ? adams::hardy::Side::kLeftVanishing : adams::hardy::Side::kRightVanishing};
}

adams::rearrange::SampledFunction to_sampled(const double* measures, const double* values,
                                             size_t count) {
  require(count == 0 || (measures != nullptr && values != nullptr), "null cell arrays");
  adams::rearrange::SampledFunction f;
  f.cells.reserve(count);
  for (size_t i = 0; i < count; ++i) f.cells.push_back({measures[i], values[i]});
  return f;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

adams_profile* wrap(adams::PiecewiseProfile p) { return new adams_profile{std::move(p)}; }

}  // namespace

extern "C" {

void adams_quad_spec_default(adams_quad_spec* spec) {
  if (spec == nullptr) return;
  const adams::QuadratureSpec d;
  *spec = {d.rel_tol, d.abs_tol, d.max_subdivisions, d.truncation_epsilon};
}

const char* adams_last_error(void) { return g_last_error.c_str(); }

const char* adams_status_name(adams_status status) {
  switch (status) {
    case ADAMS_OK: return "ok";
    case ADAMS_E_DOMAIN: return "domain";
    case ADAMS_E_OVERFLOW: return "overflow";
    case ADAMS_E_QUADRATURE: return "quadrature";
    case ADAMS_E_INFEASIBLE: return "infeasible";
    case ADAMS_E_ENERGY: return "energy_violation";
    case ADAMS_E_DEGENERATE: return "degenerate";
    case ADAMS_E_MONOTONICITY: return "monotonicity";
    case ADAMS_E_INVALID_ARGUMENT: return "invalid_argument";
    case ADAMS_E_INTERNAL: return "internal";
  }
  return "unknown";
}

void adams_string_free(char* s) { std::free(s); }

adams_status adams_beta0(int m, int n, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = adams::beta0({m, n});
  });
}

adams_status adams_beta0_product_form(int m, int n, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = adams::beta0_product_form({m, n});
  });
}

adams_status adams_sphere_constants(int n, double* omega_sphere, double* omega_ball) {
  return guarded([&] {
    require(omega_sphere != nullptr && omega_ball != nullptr, "null output");
    if (n < 1) adams::domain_error("sphere_constants: n must be >= 1");
    const auto c = adams::sphere_constants(n);
    *omega_sphere = c.omega_sphere;
    *omega_ball = c.omega_ball;
  });
}

adams_status adams_concentration_level(int m, int n, double measure, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = adams::concentration_level({m, n}, measure);
  });
}

adams_status adams_t_zero(double* raw, int* t0, int* n_threshold) {
  return guarded([&] {
    require(raw != nullptr && t0 != nullptr && n_threshold != nullptr, "null output");
    const auto z = adams::t_zero();
    *raw = z.raw;
    *t0 = z.integer;
    *n_threshold = z.n_threshold;
  });
}

adams_status adams_hardy_sandwich(const adams_hardy_setup* setup, double* lower, double* upper,
                                  double* k_factor) {
  return guarded([&] {
    require(lower != nullptr && upper != nullptr && k_factor != nullptr, "null output");
    const auto s = adams::hardy::sandwich(to_setup(setup));
    *lower = s.lower;
    *upper = s.upper;
    *k_factor = s.k_factor;
  });
}

adams_status adams_hardy_probe(const adams_hardy_setup* setup, int trials, uint64_t seed,
                               double* max_ratio) {
  return guarded([&] {
    require(max_ratio != nullptr, "null output");
    *max_ratio = adams::hardy::rayleigh_probe(to_setup(setup), trials, seed).max_ratio;
  });
}

adams_status adams_second_order_probe(int n, double p, double q, double R, int trials,
                                      uint64_t seed, double* max_ratio, double* constant) {
  return guarded([&] {
    require(max_ratio != nullptr && constant != nullptr, "null output");
    const double c = adams::hardy::second_order_constant(n, q);
    *max_ratio = adams::hardy::second_order_probe(n, p, q, R, trials, seed);
    *constant = c;
  });
}

adams_status adams_rearrange(const double* measures, const double* values, size_t count,
                             double* out_measures, double* out_values) {
  return guarded([&] {
    require(out_measures != nullptr && out_values != nullptr, "null output");
    const auto r = adams::rearrange::decreasing_rearrangement(to_sampled(measures, values, count));
    for (size_t i = 0; i < r.cells.size(); ++i) {
      out_measures[i] = r.cells[i].measure;
      out_values[i] = r.cells[i].value;
    }
  });
}

adams_status adams_symmetrize(const double* measures, const double* values, size_t count, int n,
                              double* out_radii, double* out_values) {
  return guarded([&] {
    require(out_radii != nullptr && out_values != nullptr, "null output");
    const auto f = to_sampled(measures, values, count);
    if (n < 2) adams::domain_error("symmetrize: dimension n must be >= 2");
    const auto sharp = adams::rearrange::decreasing_rearrangement(f);
    const auto omega = adams::sphere_constants(n).omega_ball;
    double volume = 0.0;
    for (size_t i = 0; i < sharp.cells.size(); ++i) {
      volume += sharp.cells[i].measure;
      out_radii[i] = std::pow(volume / omega, 1.0 / n);
      out_values[i] = sharp.cells[i].value;
    }
  });
}

adams_status adams_talenti(const double* measures, const double* values, size_t count, int n,
                           double R, adams_profile** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    auto v = adams::rearrange::talenti_radial_solution(to_sampled(measures, values, count), n, R);
    *out = wrap(std::move(v.profile));
  });
}

adams_status adams_profile_from_json(const char* json, adams_profile** out) {
  return guarded([&] {
    require(json != nullptr && out != nullptr, "null argument");
    adams::Json parsed;
    try {
      parsed = adams::Json::parse(json);
    } catch (const std::exception& e) {
      throw adams::Error(adams::ErrorCode::kInvalidArgument,
                         std::string("profile JSON: ") + e.what());
    }
    *out = wrap(adams::profile_from_json(parsed));
  });
}

adams_status adams_profile_to_json(const adams_profile* profile, char** out) {
  return guarded([&] {
    require(profile != nullptr && out != nullptr, "null argument");
    *out = copy_string(adams::dump_json(adams::profile_to_json(profile->profile)));
  });
}

adams_status adams_profile_eval(const adams_profile* profile, double t, double* value,
                                double* derivative) {
  return guarded([&] {
    require(profile != nullptr && value != nullptr, "null argument");
    const double v = profile->profile.value(t);
    if (derivative != nullptr) *derivative = profile->profile.derivative(t);
    *value = v;
  });
}

void adams_profile_free(adams_profile* profile) { delete profile; }

adams_status adams_moser_family(double a, double p, adams_profile** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = wrap(adams::moser1d::moser_family(a, p));
  });
}

adams_status adams_energy(const adams_profile* g, double p, double a, double b,
                          const adams_quad_spec* spec, double* out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    *out = adams::moser1d::energy(g->profile, p, a, b, to_spec(spec));
  });
}

adams_status adams_cc_functional(const adams_profile* g, double q, const adams_quad_spec* spec,
                                 int checked, double* out) {
  return guarded([&] {
    require(g != nullptr && out != nullptr, "null argument");
    const auto s = to_spec(spec);
    *out = checked ? adams::moser1d::cc_functional(g->profile, q, s)
                   : adams::moser1d::cc_functional_unchecked(g->profile, q, s);
  });
}

adams_status adams_cc_lemma_bound(const adams_profile* w, double p, double a,
                                  const adams_quad_spec* spec, double* lhs, double* rhs,
                                  double* delta) {
  return guarded([&] {
    require(w != nullptr && lhs != nullptr && rhs != nullptr, "null argument");
    const auto b = adams::moser1d::cc_lemma_bound(w->profile, p, a, to_spec(spec));
    *lhs = b.lhs;
    *rhs = b.rhs;
    if (delta != nullptr) *delta = b.delta;
  });
}

adams_status adams_concentration_maximizer(double p, double A, double epsilon, int knot_count,
                                           uint64_t seed, const adams_quad_spec* spec,
                                           adams_profile** best, double* J) {
  return guarded([&] {
    require(best != nullptr && J != nullptr, "null output");
    auto r = adams::moser1d::concentration_maximizer(p, A, epsilon, knot_count, seed, to_spec(spec));
    *J = r.J;
    *best = wrap(std::move(r.best));
  });
}

adams_status adams_extremal_params(int n, int extended, adams_testfn_params* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    const auto p = adams::extremal::make_params(n, extended != 0);
    *out = {p.n, p.b, p.s, p.lambda, p.sigma, p.admissible ? 1 : 0};
  });
}

adams_status adams_extremal_verdict(int n, int extended, const adams_quad_spec* spec,
                                    adams_verdict_row* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    const auto r = adams::extremal::verdict(n, to_spec(spec), extended != 0);
    *out = {r.n,     r.norm_chain_bound,          r.norm_quadrature,        r.functional_lower,
            r.functional_quadrature, r.level, r.gap_analytic ? 1 : 0, r.gap_numeric ? 1 : 0};
  });
}

adams_status adams_extremal_test_function(int n, int extended, adams_profile** out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = wrap(adams::extremal::test_function(adams::extremal::make_params(n, extended != 0)));
  });
}

adams_status adams_eta(double t, double* out) {
  return guarded([&] {
    require(out != nullptr, "null output");
    *out = adams::extremal::eta_function(t);
  });
}

}  // extern "C"
