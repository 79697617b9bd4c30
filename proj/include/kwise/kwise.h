/*
 * kwise C API.
 *
 * Every function returns a kw_status. On failure the output arguments are
 * left untouched and kw_last_error() describes the problem (per thread).
 * Strings returned through char** are owned by the caller and released with
 * kw_string_free. Rationals cross the boundary as "num/den" strings; reals as
 * decimal strings; structured results as JSON text.
 */
#ifndef KWISE_KWISE_H
#define KWISE_KWISE_H

#include <stdint.h>

#if defined(_WIN32)
#define KW_API __declspec(dllexport)
#else
#define KW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kw_status {
  KW_OK = 0,
  KW_INVALID_ARGUMENT = 1,
  KW_DEGENERATE_INPUT = 2,
  KW_PARITY = 3,
  KW_OUT_OF_RANGE = 4,
  KW_PRECONDITION = 5,
  KW_DIMENSION_MISMATCH = 6,
  KW_PARSE = 7,
  KW_SINGULAR = 8,
  KW_INTERNAL = 99
} kw_status;

typedef enum kw_lp_status { KW_LP_OPTIMAL = 0, KW_LP_INFEASIBLE = 1, KW_LP_UNBOUNDED = 2 } kw_lp_status;

typedef enum kw_filter_kind { KW_FILTER_ALL = 0, KW_FILTER_MODULAR = 1, KW_FILTER_SLAB = 2 } kw_filter_kind;

/* Support filter for LP constructions. NULL means KW_FILTER_ALL. */
typedef struct kw_filter {
  kw_filter_kind kind;
  int modulus;  /* KW_FILTER_MODULAR: w == residue (mod modulus) */
  int residue;
  int radius;   /* KW_FILTER_SLAB: |w| <= radius */
} kw_filter;

typedef struct kw_pmf kw_pmf;
typedef struct kw_lp_solution kw_lp_solution;

KW_API const char* kw_version(void);
KW_API const char* kw_last_error(void);
KW_API void kw_string_free(char* s);

/* Weight PMFs */
KW_API kw_status kw_pmf_binomial(int n, kw_pmf** out);
KW_API kw_status kw_pmf_slice(int n, int t, kw_pmf** out);
KW_API kw_status kw_pmf_from_json(const char* json, kw_pmf** out);
KW_API kw_status kw_pmf_mixture(const kw_pmf* a, const kw_pmf* b, const char* lambda, kw_pmf** out);
KW_API kw_status kw_pmf_complement(const kw_pmf* p, kw_pmf** out);
KW_API kw_status kw_pmf_to_json(const kw_pmf* p, char** out);
KW_API kw_status kw_pmf_n(const kw_pmf* p, int* out);
KW_API kw_status kw_pmf_support_size(const kw_pmf* p, int* out);
KW_API void kw_pmf_free(kw_pmf* p);

/* JSON array of "num/den" for E[W^1..k]. */
KW_API kw_status kw_moments(const kw_pmf* p, int k, char** out);
KW_API kw_status kw_is_k_uniform(const kw_pmf* p, int k, int* out);
KW_API kw_status kw_tail_mass(const kw_pmf* p, int t, char** out);
KW_API kw_status kw_interval_mass(const kw_pmf* p, int a, int b, char** out);

/* Parity bias */
KW_API kw_status kw_slice_bias(int n, int t, int ell, char** out);
KW_API kw_status kw_bias_profile(const kw_pmf* p, char** out);
KW_API kw_status kw_lemma13_bound(int n, int t, int ell, char** out);

/* Linear programs. objective for construct: NULL or "none", "min_moment:J",
 * "max_moment:J". kind for extremal: "max_tail", "max_point", "signed_gap". */
KW_API kw_status kw_construct_k_uniform(int n, int k, const kw_filter* filter, const char* objective,
                                        kw_lp_solution** out);
KW_API kw_status kw_extremal_tail(int n, int k, int t, const char* kind, const kw_filter* filter,
                                  kw_lp_solution** out);
KW_API kw_status kw_lp_solution_status(const kw_lp_solution* s, kw_lp_status* out);
KW_API kw_status kw_lp_solution_value(const kw_lp_solution* s, char** out);
/* KW_PRECONDITION when the solution carries no primal PMF. */
KW_API kw_status kw_lp_solution_primal(const kw_lp_solution* s, kw_pmf** out);
KW_API kw_status kw_lp_solution_to_json(const kw_lp_solution* s, char** out);
KW_API void kw_lp_solution_free(kw_lp_solution* s);
KW_API kw_status kw_sparsify(const kw_pmf* p, int k, kw_pmf** out);

/* Noise and transforms */
KW_API kw_status kw_smooth(const kw_pmf* p, const char* rho, kw_pmf** out);
KW_API kw_status kw_replace_noise(const kw_pmf* p, int rounds, kw_pmf** out);
KW_API kw_status kw_noise_moments(int x_sign, const char* rho, char** out);
KW_API kw_status kw_bu_to_sb(const kw_pmf* p, int k, kw_pmf** out);
KW_API kw_status kw_certify_bias(const kw_pmf* q, int k, char** out);
KW_API kw_status kw_interval_property_check(const kw_pmf* p, const kw_pmf* q, int k, int* out);

/* Distinguishing */
KW_API kw_status kw_advantage(const kw_pmf* p, const kw_pmf* q, int t, char** out);
KW_API kw_status kw_best_threshold(const kw_pmf* p, const kw_pmf* q, char** out);
KW_API kw_status kw_best_interval(const kw_pmf* p, const kw_pmf* q, char** out);
/* scenario: "thm8", "thm9", "thm10". params: JSON object with optional keys
 * n, k, k_prime, t, t_prime, a, b (integers), rho (rational string), c, beta
 * (decimal strings or numbers). format: "json" or "csv" (one row, no header). */
KW_API kw_status kw_run_separation(const char* scenario, const char* params, const char* format, char** out);
KW_API kw_status kw_separation_csv_header(char** out);
/* name: "fact2", "stirling", "be", "petrov", "phi_tail", "bernstein_noise". */
KW_API kw_status kw_analytic(const char* name, const char* params, char** out);

/* Gaussian mixtures and certificates. op: "sup_distance",
 * "interval_advantage", "fit", "det_mk", "inverse_bound", "qbinomial",
 * "power_count", "quotient", "gapmiddle", "mixture_lower_bound", "erdelyi",
 * "coppersmith", "chebyshev", "series". params: JSON object. */
KW_API kw_status kw_gaussmix(const char* op, const char* params, char** out);

/* Verification suites */
typedef struct kw_criterion {
  int id;
  const char* name;
  int passed;
  const char* detail;
  double seconds;
  double limit_seconds;
} kw_criterion;

typedef void (*kw_criterion_callback)(const kw_criterion* result, void* user);

/* suite: "all", "poly", or comma-separated ids. *all_passed is 1 iff every
 * reported check passed. The callback (may be NULL) sees each result. */
KW_API kw_status kw_verify(const char* suite, int threads, uint64_t seed, kw_criterion_callback callback, void* user,
                           int* all_passed);

#ifdef __cplusplus
}
#endif

#endif
