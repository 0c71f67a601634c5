/* C interface to the hochcount library.
 *
 * Every fallible call returns an hc_status; on failure hc_last_error() holds a
 * message for the calling thread until its next failing call. Objects are
 * opaque handles released by the matching *_free function. Strings handed out
 * through char** parameters are owned by the caller and released with
 * hc_string_free.
 *
 * Permutations are passed as windows: n ints, window[i-1] = w(i).
 * Matrices over F_p are passed row-major as n*n uint32 values.
 */
#ifndef HOCHCOUNT_HOCHCOUNT_H
#define HOCHCOUNT_HOCHCOUNT_H

#include <stddef.h>
#include <stdint.h>

#if defined(HOCHCOUNT_BUILDING_LIBRARY)
#define HC_API __attribute__((visibility("default")))
#else
#define HC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hc_status {
  HC_OK = 0,
  HC_ERR_INVALID_INPUT = 1,
  HC_ERR_RESOURCE_LIMIT = 2,
  HC_ERR_NOT_INTEGRAL = 3,
  HC_ERR_INTERNAL = 4
} hc_status;

typedef enum hc_level { HC_LEVEL_FULL = 0, HC_LEVEL_ORBIT = 1 } hc_level;

/* Default enumeration cap for the brute-force counters. */
#define HC_DEFAULT_CAP 1000000u
/* Default per-degree cochain cap for hc_algebra_hh_dimensions. */
#define HC_DEFAULT_COCHAIN_CAP 100000u

HC_API const char* hc_version(void);
HC_API const char* hc_status_name(hc_status status);
HC_API const char* hc_last_error(void);
HC_API void hc_string_free(char* s);

/* ---- polynomials in q with integer coefficients ---- */

typedef struct hc_poly hc_poly;

/* Coefficients in ascending degree, as decimal strings. */
HC_API hc_status hc_poly_from_strings(const char* const* coefficients, size_t count, hc_poly** out);
HC_API void hc_poly_free(hc_poly* p);
/* -1 for the zero polynomial. */
HC_API int64_t hc_poly_degree(const hc_poly* p);
/* Decimal coefficient of q^k (0 beyond the degree). */
HC_API hc_status hc_poly_coefficient(const hc_poly* p, size_t k, char** out);
/* Decimal value at q. */
HC_API hc_status hc_poly_evaluate(const hc_poly* p, int64_t q, char** out);
/* "q^3 - q^2 + q" */
HC_API hc_status hc_poly_to_string(const hc_poly* p, char** out);
HC_API int hc_poly_equal(const hc_poly* a, const hc_poly* b);
HC_API hc_status hc_poly_sum(const hc_poly* const* terms, size_t count, hc_poly** out);

/* The unique polynomial of degree < count through (xs[i], ys[i]).
 * HC_ERR_NOT_INTEGRAL if it has non-integer coefficients. */
HC_API hc_status hc_interpolate(const int64_t* xs, const int64_t* ys, size_t count, hc_poly** out);

/* ---- symmetric group ---- */

/* n! for 1 <= n <= 8. */
HC_API hc_status hc_permutation_count(int n, size_t* out);
/* Element of lexicographic rank index, written to window[0..n). */
HC_API hc_status hc_permutation_at(int n, size_t index, int* window);
HC_API hc_status hc_permutation_length(int n, const int* window, int* out);

/* ---- Hecke algebra ---- */

typedef struct hc_hecke hc_hecke;

/* T_{w0}^2 in H(S_n), n <= 8. */
HC_API hc_status hc_hecke_square(int n, hc_hecke** out);
HC_API void hc_hecke_free(hc_hecke* h);
HC_API int hc_hecke_rank(const hc_hecke* h);
/* Coefficient of T_w. */
HC_API hc_status hc_hecke_coefficient(const hc_hecke* h, const int* w, hc_poly** out);
/* Coefficient of T_u T_v at T_w, all in S_n. */
HC_API hc_status hc_structure_coefficient(int n, const int* u, const int* v, const int* w, hc_poly** out);

/* ---- point counts of the Hochschild space ---- */

HC_API hc_status hc_stratum_polynomial(int n, const int* w, hc_poly** out);
/* out must have room for n! handles, ordered like hc_permutation_at. */
HC_API hc_status hc_all_stratum_polynomials(int n, unsigned threads, hc_poly** out);
HC_API hc_status hc_hoch_polynomial(int n, unsigned threads, hc_poly** out);
/* Decimal value of hc_hoch_polynomial at q = 1. */
HC_API hc_status hc_euler_characteristic(int n, unsigned threads, char** out);
/* *failures = number of sigma with N_sigma(1) != [sigma = e]. */
HC_API hc_status hc_verify_lemma42(int n, size_t* failures);

/* ---- flags over F_p ---- */

HC_API hc_status hc_relative_position(int n, uint32_t p, const uint32_t* first, const uint32_t* second, int* window);
HC_API hc_status hc_count_middle_flags(int n, uint32_t p, const uint32_t* x1, const uint32_t* x2, const int* u,
                                       const int* v, uint64_t cap, uint64_t* out);
HC_API hc_status hc_count_hoch_stratum(int n, uint32_t p, const int* w, hc_level level, unsigned threads,
                                       uint64_t cap, uint64_t* out);
/* Work units one stratum needs at the given level (saturating). */
HC_API uint64_t hc_bruteforce_budget(int n, uint32_t p, hc_level level);

/* ---- finite-dimensional algebras ---- */

typedef struct hc_algebra hc_algebra;

/* "ground-field", "semisimple-2" or "sl2-catO". */
HC_API hc_status hc_algebra_builtin(const char* name, hc_algebra** out);
/* Parses the JSON presentation format; the axioms are not checked here. */
HC_API hc_status hc_algebra_from_json(const char* text, hc_algebra** out);
HC_API void hc_algebra_free(hc_algebra* a);
HC_API size_t hc_algebra_dim(const hc_algebra* a);
/* HC_OK when valid. Otherwise HC_ERR_INVALID_INPUT, and *violations (if not
 * NULL) receives one violation per line. */
HC_API hc_status hc_algebra_validate(const hc_algebra* a, char** violations);
HC_API hc_status hc_algebra_to_json(const hc_algebra* a, char** out);
HC_API hc_status hc_algebra_center_dimension(const hc_algebra* a, size_t* out);
/* dims[0..max_degree] = dim HH^k. cochain_dims (nullable) receives dim C^k
 * for k = 0..max_degree. *complex_ok (nullable) is 1 when d^{k+1} d^k = 0 in
 * every computed degree. */
HC_API hc_status hc_algebra_hh_dimensions(const hc_algebra* a, int max_degree, size_t cap, size_t* dims,
                                          size_t* cochain_dims, int* complex_ok);

#ifdef __cplusplus
}
#endif

#endif
