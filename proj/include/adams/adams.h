#ifndef ADAMS_ADAMS_H
#define ADAMS_ADAMS_H

/*
 * C interface to the adams numerical library.
 *
 * Every function returns an adams_status. On failure the outputs are left
 * untouched and adams_last_error() describes the failure for the calling
 * thread. Strings returned through char** are owned by the caller and must
 * be released with adams_string_free().
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ADAMS_API __declspec(dllexport)
#else
#define ADAMS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum adams_status {
  ADAMS_OK = 0,
  ADAMS_E_DOMAIN = 1,
  ADAMS_E_OVERFLOW = 2,
  ADAMS_E_QUADRATURE = 3,
  ADAMS_E_INFEASIBLE = 4,
  ADAMS_E_ENERGY = 5,
  ADAMS_E_DEGENERATE = 6,
  ADAMS_E_MONOTONICITY = 7,
  ADAMS_E_INVALID_ARGUMENT = 8,
  ADAMS_E_INTERNAL = 99
} adams_status;

typedef struct adams_profile adams_profile;

typedef struct adams_quad_spec {
  double rel_tol;
  double abs_tol;
  int max_subdivisions;
  double truncation_epsilon;
} adams_quad_spec;

ADAMS_API void adams_quad_spec_default(adams_quad_spec* spec);
ADAMS_API const char* adams_last_error(void);
ADAMS_API const char* adams_status_name(adams_status status);
ADAMS_API void adams_string_free(char* s);

/* constants */
ADAMS_API adams_status adams_beta0(int m, int n, double* out);
ADAMS_API adams_status adams_beta0_product_form(int m, int n, double* out);
ADAMS_API adams_status adams_sphere_constants(int n, double* omega_sphere, double* omega_ball);
ADAMS_API adams_status adams_concentration_level(int m, int n, double measure, double* out);
ADAMS_API adams_status adams_t_zero(double* raw, int* t0, int* n_threshold);

/* hardy; side 0 = vanishing at 0, 1 = vanishing at R */
typedef struct adams_hardy_setup {
  double p;
  double q;
  double alpha;
  double theta;
  double R;
  int side;
} adams_hardy_setup;

ADAMS_API adams_status adams_hardy_sandwich(const adams_hardy_setup* setup, double* lower,
                                            double* upper, double* k_factor);
ADAMS_API adams_status adams_hardy_probe(const adams_hardy_setup* setup, int trials,
                                         uint64_t seed, double* max_ratio);
ADAMS_API adams_status adams_second_order_probe(int n, double p, double q, double R, int trials,
                                                uint64_t seed, double* max_ratio,
                                                double* constant);

/* rearrange; output arrays hold `count` entries */
ADAMS_API adams_status adams_rearrange(const double* measures, const double* values, size_t count,
                                       double* out_measures, double* out_values);
ADAMS_API adams_status adams_symmetrize(const double* measures, const double* values,
                                        size_t count, int n, double* out_radii,
                                        double* out_values);
ADAMS_API adams_status adams_talenti(const double* measures, const double* values, size_t count,
                                     int n, double R, adams_profile** out);

/* profiles */
ADAMS_API adams_status adams_profile_from_json(const char* json, adams_profile** out);
ADAMS_API adams_status adams_profile_to_json(const adams_profile* profile, char** out);
ADAMS_API adams_status adams_profile_eval(const adams_profile* profile, double t, double* value,
                                          double* derivative);
ADAMS_API void adams_profile_free(adams_profile* profile);

/* one-dimensional functional */
ADAMS_API adams_status adams_moser_family(double a, double p, adams_profile** out);
ADAMS_API adams_status adams_energy(const adams_profile* g, double p, double a, double b,
                                    const adams_quad_spec* spec, double* out);
ADAMS_API adams_status adams_cc_functional(const adams_profile* g, double q,
                                           const adams_quad_spec* spec, int checked,
                                           double* out);
ADAMS_API adams_status adams_cc_lemma_bound(const adams_profile* w, double p, double a,
                                            const adams_quad_spec* spec, double* lhs,
                                            double* rhs, double* delta);
ADAMS_API adams_status adams_concentration_maximizer(double p, double A, double epsilon,
                                                     int knot_count, uint64_t seed,
                                                     const adams_quad_spec* spec,
                                                     adams_profile** best, double* J);

/* extremal test function */
typedef struct adams_testfn_params {
  int n;
  double b;
  double s;
  double lambda;
  double sigma;
  int admissible;
} adams_testfn_params;

typedef struct adams_verdict_row {
  int n;
  double norm_chain_bound;
  double norm_quadrature;
  double functional_lower;
  double functional_quadrature;
  double level;
  int gap_analytic;
  int gap_numeric;
} adams_verdict_row;

ADAMS_API adams_status adams_extremal_params(int n, int extended, adams_testfn_params* out);
ADAMS_API adams_status adams_extremal_verdict(int n, int extended, const adams_quad_spec* spec,
                                              adams_verdict_row* out);
ADAMS_API adams_status adams_extremal_test_function(int n, int extended, adams_profile** out);
ADAMS_API adams_status adams_eta(double t, double* out);

#ifdef __cplusplus
}
#endif

#endif /* ADAMS_ADAMS_H */
