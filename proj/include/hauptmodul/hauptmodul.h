/*
 * C interface to the hauptmodul library.
 *
 * Every function returns an hm_status; HM_OK is zero. On failure a message
 * for the calling thread is available from hm_last_error() until the next
 * call on that thread. Objects returned through out-parameters are owned by
 * the caller and released with the matching *_free function. Strings are
 * NUL-terminated UTF-8 allocated by the library; release them with
 * hm_string_free.
 */
#ifndef HAUPTMODUL_H
#define HAUPTMODUL_H

#include <stddef.h>

#if defined(_WIN32)
#define HM_API __declspec(dllexport)
#else
#define HM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hm_status {
    HM_OK = 0,
    HM_ERR_INVALID_ARGUMENT = 1,
    HM_ERR_INVALID_TRIANGLE = 2,
    HM_ERR_PARSE = 3,
    HM_ERR_ZERO_CONSTANT_TERM = 4,
    HM_ERR_NONZERO_CONSTANT_TERM = 5,
    HM_ERR_CONSTANT_TERM_NOT_ONE = 6,
    HM_ERR_NOT_INVERTIBLE = 7,
    HM_ERR_SINGULAR_SYSTEM = 8,
    HM_ERR_INCONSISTENT_ORDER_ONE = 9,
    HM_ERR_DEGENERATE_DENOMINATOR = 10,
    HM_ERR_PRIME_DIVIDES_DENOMINATOR = 11,
    HM_ERR_SHARED_FACTOR = 12,
    HM_ERR_ROUTE_MISMATCH = 13,
    HM_ERR_FORMULA_MISMATCH = 14,
    HM_ERR_VERIFICATION_FAILURE = 15,
    HM_ERR_INTERNAL = 100
} hm_status;

/* m2 == HM_INFINITY encodes m2 = infinity. */
#define HM_INFINITY 0u

typedef struct hm_triangle {
    unsigned m1;
    unsigned m2;
} hm_triangle;

typedef enum hm_verdict_kind {
    HM_VERDICT_INTEGRAL = 0,
    HM_VERDICT_NON_INTEGRAL = 1,
    HM_VERDICT_BELOW_THEOREM_RANGE = 2
} hm_verdict_kind;

typedef enum hm_branch { HM_BRANCH_NONE = 0, HM_BRANCH_PLAIN = 1, HM_BRANCH_SHIFTED = 2 } hm_branch;

typedef struct hm_verdict {
    hm_verdict_kind verdict;
    /* What the congruences say, also below the proven range. */
    int congruence_holds;
    /* Witness (epsilon, epsilon'); zeros and HM_BRANCH_NONE when the
       congruences fail. epsilon_prime is 0 for m2 = infinity. */
    int epsilon;
    int epsilon_prime;
    hm_branch branch;
} hm_verdict;

typedef struct hm_series hm_series;
typedef struct hm_report hm_report;

HM_API const char *hm_status_name(hm_status status);
HM_API const char *hm_last_error(void);
HM_API const char *hm_version(void);

HM_API void hm_string_free(char *s);

/* "m1,m2" with m2 possibly "inf". Validates hyperbolicity. */
HM_API hm_status hm_triangle_parse(const char *text, hm_triangle *out);
HM_API hm_status hm_triangle_validate(hm_triangle tri);

/*
 * Expands a named series to truncation order `order`:
 *   t1 t2 t3       Halphen solution
 *   J              Hauptmodul from the Halphen route
 *   Jhyp           Hauptmodul 1/z(kappa q) from the hypergeometric route
 *   E1_<2k> E2_<2k> automorphic forms E^{(1)}_{2k}, E^{(2)}_{2k}
 *   F G D          Frobenius basis and Schwarz map
 *   qmap (q)       mirror map q(a,b|z)
 *   zmap (zq)      its compositional inverse z(q)
 * For J and Jhyp the inputs are computed to order + 2 so the result is exact
 * to `order`.
 */
HM_API hm_status hm_expand(hm_triangle tri, const char *name, unsigned order, hm_series **out);
/* Nonzero when `name` is an E-series outside the listed generators. */
HM_API int hm_is_unlisted_generator(hm_triangle tri, const char *name);

HM_API long hm_series_lowest_exponent(const hm_series *s);
HM_API long hm_series_truncation(const hm_series *s);
/* Coefficient of q^exponent as "num/den". */
HM_API hm_status hm_series_coefficient(const hm_series *s, long exponent, char **out);
HM_API hm_status hm_series_to_json(const hm_series *s, char **out);
HM_API hm_status hm_series_valuations(const hm_series *s, unsigned long p, char **out_json);
HM_API void hm_series_free(hm_series *s);

HM_API hm_status hm_classify(hm_triangle tri, unsigned long p, hm_verdict *out);
HM_API hm_status hm_classify_json(hm_triangle tri, unsigned long p, char **out);
HM_API hm_status hm_hecke(unsigned n, unsigned long p, int *integral);
HM_API hm_status hm_almost_integral(hm_triangle tri, int *out);
/* Writes up to `capacity` types; *count receives the total number found. */
HM_API hm_status hm_takeuchi(unsigned bound, hm_triangle *out, size_t capacity, size_t *count);
HM_API hm_status hm_takeuchi_json(unsigned bound, char **out);
/* x is "num/den"; *image receives "num/den". */
HM_API hm_status hm_dwork_map(const char *x, unsigned long p, char **image, unsigned long *digit);

HM_API hm_status hm_empirical(hm_triangle tri, unsigned long p, unsigned order, hm_report **out);
/* Suite names as in hm_suite_names (comma-separated). p = 0 means unset;
   tri.m1 = 0 means unset. */
HM_API hm_status hm_verify(const char *suite, hm_triangle tri, unsigned long p, unsigned order, int long_tests,
                           hm_report **out);
HM_API const char *hm_suite_names(void);

HM_API int hm_report_passed(const hm_report *r);
HM_API hm_status hm_report_to_json(const hm_report *r, char **out);
/* Empirical reports only: one CSV row; hm_csv_header gives the columns. */
HM_API hm_status hm_report_to_csv(const hm_report *r, char **out);
HM_API const char *hm_csv_header(void);
HM_API void hm_report_free(hm_report *r);

#ifdef __cplusplus
}
#endif

#endif
