#ifndef DELTAVEC_DELTAVEC_H
#define DELTAVEC_DELTAVEC_H

/*
 * C interface to the deltavec library: exact Hermite normal forms,
 * delta-vectors (h*-vectors) of lattice simplices, brute-force lattice-point
 * counting, normal-form enumeration, classification and realizability.
 *
 * Conventions
 *   - Every fallible call returns dv_status; results go through out-params.
 *   - Objects are opaque and released with their matching *_free function
 *     (NULL is accepted). Strings returned through char** are released with
 *     dv_string_free.
 *   - After a failure, dv_last_error() describes it. The message is
 *     thread-local and valid until the next failing call on that thread.
 *   - Big integers cross the boundary as decimal strings.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define DV_API __declspec(dllexport)
#elif defined(__GNUC__)
#define DV_API __attribute__((visibility("default")))
#else
#define DV_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dv_status {
    DV_OK = 0,
    DV_ERR_INVALID_ARGUMENT = 1,
    DV_ERR_PARSE = 2,
    DV_ERR_SINGULAR_MATRIX = 3,
    DV_ERR_BUDGET_EXCEEDED = 4,
    DV_ERR_INDEX_OUT_OF_BOUNDS = 5,
    DV_ERR_INVALID_FORM = 6,
    DV_ERR_DET_MISMATCH = 7,
    DV_ERR_UNSUPPORTED_MASS = 8,
    DV_ERR_INTERNAL = 9
} dv_status;

typedef enum dv_form_filter {
    DV_FORM_ALL = 0,
    DV_FORM_ONE_ROW = 1, /* exactly one diagonal entry > 1 */
    DV_FORM_TWO_ROW = 2  /* exactly two diagonal entries > 1 */
} dv_form_filter;

typedef struct dv_matrix dv_matrix;
typedef struct dv_delta dv_delta;
typedef struct dv_svalues dv_svalues;
typedef struct dv_enumerator dv_enumerator;
typedef struct dv_classification dv_classification;
typedef struct dv_verdict dv_verdict;

typedef struct dv_symmetry_report {
    int64_t weighted_sum_minus_one; /* sum_j j*d_j - 1 */
    uint64_t weighted_gcd;          /* gcd(sum_j j*d_j - 1, D) */
    int coprime;                    /* weighted_gcd == 1 */
    int unit_support;               /* d_j == 0 whenever gcd(j, D) > 1 */
    int full_support;               /* sum_j d_j == d - 1 */
    int all;                        /* all three hold */
} dv_symmetry_report;

/* ---- errors and memory -------------------------------------------------- */

DV_API const char* dv_last_error(void);
DV_API const char* dv_status_name(dv_status status);
DV_API void dv_string_free(char* s);
DV_API const char* dv_version(void);

/* ---- matrices ------------------------------------------------------------ */

/* Text ("d" then d rows) or JSON ({"dim": d, "rows": [...]}) input. */
DV_API dv_status dv_matrix_parse(const char* text, dv_matrix** out);
/* entries: dim*dim values, row-major. */
DV_API dv_status dv_matrix_from_i64(size_t dim, const int64_t* entries, dv_matrix** out);
DV_API dv_status dv_matrix_clone(const dv_matrix* m, dv_matrix** out);
DV_API void dv_matrix_free(dv_matrix* m);
DV_API size_t dv_matrix_dim(const dv_matrix* m);
DV_API int dv_matrix_equal(const dv_matrix* a, const dv_matrix* b);
/* DV_ERR_INVALID_ARGUMENT if the entry does not fit in int64_t. */
DV_API dv_status dv_matrix_entry_i64(const dv_matrix* m, size_t row, size_t col, int64_t* out);
DV_API dv_status dv_matrix_entry_string(const dv_matrix* m, size_t row, size_t col, char** out);
DV_API dv_status dv_matrix_to_text(const dv_matrix* m, char** out);
DV_API dv_status dv_matrix_to_json(const dv_matrix* m, char** out);
/* Exact determinant as a decimal string. */
DV_API dv_status dv_matrix_determinant(const dv_matrix* m, char** out);
/* Lower-triangular normal form A and unimodular U with m * U = A.
 * transform may be NULL. */
DV_API dv_status dv_matrix_hnf(const dv_matrix* m, dv_matrix** hnf, dv_matrix** transform);
DV_API dv_status dv_matrix_equivalent(const dv_matrix* a, const dv_matrix* b, int* out);

/* ---- delta-vectors ------------------------------------------------------- */

/* "1,0,3,2,0" */
DV_API dv_status dv_delta_parse(const char* text, dv_delta** out);
DV_API dv_status dv_delta_from_coeffs(const uint64_t* coeffs, size_t len, dv_delta** out);
DV_API void dv_delta_free(dv_delta* v);
DV_API size_t dv_delta_dim(const dv_delta* v);
DV_API uint64_t dv_delta_coeff(const dv_delta* v, size_t i); /* 0 when i > dim */
DV_API uint64_t dv_delta_mass(const dv_delta* v);
DV_API int dv_delta_equal(const dv_delta* a, const dv_delta* b);
DV_API dv_status dv_delta_to_string(const dv_delta* v, char** out);
DV_API dv_status dv_delta_to_polynomial(const dv_delta* v, char** out);
DV_API int dv_delta_is_shifted_symmetric(const dv_delta* v);
DV_API int dv_delta_check_stanley(const dv_delta* v);
DV_API int dv_delta_check_hibi(const dv_delta* v);

/* Normal form first, then the congruence-class sum. */
DV_API dv_status dv_delta_of_matrix(const dv_matrix* m, dv_delta** out);
/* One-row form: multiplicities d_1..d_{D-1} (n_mult == D - 1);
 * row_position is 1-based, 0 selects the last row. */
DV_API dv_status dv_delta_one_row(size_t dim, uint64_t det, size_t row_position,
                                  const uint64_t* multiplicities, size_t n_mult, dv_delta** out);
DV_API dv_status dv_delta_all_dminus1(uint64_t det, size_t dim, dv_delta** out);
/* Two-row determinant-4 form from (d_1, d_1', d_1''). */
DV_API dv_status dv_delta_two_row(size_t dim, int bar, uint64_t d1, uint64_t d1p, uint64_t d1pp,
                                  dv_delta** out);
DV_API dv_status dv_one_row_symmetry(size_t dim, uint64_t det, const uint64_t* multiplicities,
                                     size_t n_mult, dv_symmetry_report* out);
/* Canonical matrix of a one-row form (last row, ascending entries). */
DV_API dv_status dv_one_row_matrix(size_t dim, uint64_t det, const uint64_t* multiplicities,
                                   size_t n_mult, dv_matrix** out);

/* ---- s-values ------------------------------------------------------------ */

/* All congruence indices of the normal form of m, lexicographic. */
DV_API dv_status dv_svalues_of_matrix(const dv_matrix* m, dv_svalues** out);
DV_API void dv_svalues_free(dv_svalues* t);
DV_API size_t dv_svalues_count(const dv_svalues* t);
DV_API size_t dv_svalues_dim(const dv_svalues* t);
/* index points at dim entries owned by the table. */
DV_API dv_status dv_svalues_entry(const dv_svalues* t, size_t i, const uint64_t** index,
                                  uint64_t* s);

/* ---- brute-force oracle -------------------------------------------------- */
/* budget caps the candidate points examined; 0 selects the default (10^8). */

DV_API dv_status dv_oracle_count(const dv_matrix* m, uint64_t n, int interior, uint64_t budget,
                                 uint64_t* out);
DV_API dv_status dv_oracle_delta(const dv_matrix* m, uint64_t budget, dv_delta** out);
DV_API dv_status dv_oracle_reciprocity(const dv_matrix* m, uint64_t n_max, uint64_t budget,
                                       int* out);

/* ---- enumeration --------------------------------------------------------- */

/* "all", "one-row", "two-row" */
DV_API dv_status dv_form_filter_parse(const char* name, dv_form_filter* out);
DV_API dv_status dv_enumerator_new(size_t dim, uint64_t det, dv_form_filter filter,
                                   dv_enumerator** out);
/* *out is NULL once the stream is exhausted. */
DV_API dv_status dv_enumerator_next(dv_enumerator* e, dv_matrix** out);
DV_API void dv_enumerator_free(dv_enumerator* e);

/* ---- classification ------------------------------------------------------ */

DV_API dv_status dv_classify(size_t dim, uint64_t det, dv_form_filter filter,
                             const dv_delta* target, dv_classification** out);
DV_API void dv_classification_free(dv_classification* c);
/* Complete set of matching normal forms. */
DV_API size_t dv_classification_matrix_count(const dv_classification* c);
DV_API dv_status dv_classification_matrix(const dv_classification* c, size_t i, dv_matrix** out);
DV_API size_t dv_classification_solution_count(const dv_classification* c);
/* expand_all = 0: one canonical matrix per parameter solution. */
DV_API dv_status dv_classification_to_json(const dv_classification* c, int expand_all, char** out);

/* ---- realizability ------------------------------------------------------- */

DV_API dv_status dv_realize(size_t dim, const dv_delta* target, dv_verdict** out);
DV_API void dv_verdict_free(dv_verdict* v);
DV_API int dv_verdict_realizable(const dv_verdict* v);
DV_API int dv_verdict_by_enumeration(const dv_verdict* v);
/* "none", "fails-necessary" or "fails-additional"; static storage. */
DV_API const char* dv_verdict_reason(const dv_verdict* v);
/* Owned by the verdict. */
DV_API const char* dv_verdict_detail(const dv_verdict* v);
/* *out is NULL when there is no witness. */
DV_API dv_status dv_verdict_witness(const dv_verdict* v, dv_matrix** out);
DV_API dv_status dv_verdict_to_json(const dv_verdict* v, char** out);

#ifdef __cplusplus
}
#endif

#endif
