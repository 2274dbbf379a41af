#include "deltavec/deltavec.h"

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

static int failures = 0;

#define CHECK(cond)                                                        \
    do {                                                                   \
        if (!(cond)) {                                                     \
            fprintf(stderr, "%s:%d: check failed: %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                    \
        }                                                                  \
    } while (0)

static int str_is(char* s, const char* expected) {
    int ok = s != NULL && strcmp(s, expected) == 0;
    if (!ok) fprintf(stderr, "  got \"%s\", expected \"%s\"\n", s ? s : "(null)", expected);
    dv_string_free(s);
    return ok;
}

static void test_matrix(void) {
    const int64_t e[] = {1, 2, 3, 4};
    dv_matrix *m = NULL, *h = NULL, *u = NULL;
    CHECK(dv_matrix_from_i64(2, e, &m) == DV_OK);
    CHECK(dv_matrix_dim(m) == 2);

    char* det = NULL;
    CHECK(dv_matrix_determinant(m, &det) == DV_OK);
    CHECK(str_is(det, "-2"));

    CHECK(dv_matrix_hnf(m, &h, &u) == DV_OK);
    int64_t x = -1;
    CHECK(dv_matrix_entry_i64(h, 0, 0, &x) == DV_OK && x == 1);
    CHECK(dv_matrix_entry_i64(h, 0, 1, &x) == DV_OK && x == 0);
    CHECK(dv_matrix_entry_i64(h, 1, 0, &x) == DV_OK && x == 1);
    CHECK(dv_matrix_entry_i64(h, 1, 1, &x) == DV_OK && x == 2);
    CHECK(dv_matrix_entry_i64(h, 2, 0, &x) == DV_ERR_INDEX_OUT_OF_BOUNDS);

    char* json = NULL;
    CHECK(dv_matrix_to_json(h, &json) == DV_OK);
    CHECK(str_is(json, "{\"dim\":2,\"rows\":[[1,0],[1,2]]}"));

    int eq = 0;
    CHECK(dv_matrix_equivalent(m, h, &eq) == DV_OK && eq == 1);

    dv_matrix* parsed = NULL;
    CHECK(dv_matrix_parse("2\n1 0\n1 2\n", &parsed) == DV_OK);
    CHECK(dv_matrix_equal(parsed, h));

    dv_matrix_free(parsed);
    dv_matrix_free(u);
    dv_matrix_free(h);
    dv_matrix_free(m);
}

static void test_errors(void) {
    dv_matrix *m = NULL, *h = NULL;
    CHECK(dv_matrix_parse("2\n1 2\n", &m) == DV_ERR_PARSE);
    CHECK(m == NULL);
    CHECK(strlen(dv_last_error()) > 0);

    const int64_t s[] = {1, 2, 2, 4};
    CHECK(dv_matrix_from_i64(2, s, &m) == DV_OK);
    CHECK(dv_matrix_hnf(m, &h, NULL) == DV_ERR_SINGULAR_MATRIX);
    CHECK(strstr(dv_last_error(), "singular matrix") != NULL);
    CHECK(strcmp(dv_status_name(DV_ERR_SINGULAR_MATRIX), "singular matrix") == 0 ||
          strlen(dv_status_name(DV_ERR_SINGULAR_MATRIX)) > 0);
    dv_matrix_free(m);

    dv_delta* v = NULL;
    CHECK(dv_delta_parse("2,1", &v) == DV_ERR_PARSE);
    CHECK(dv_delta_parse("1,3,1", &v) == DV_OK);
    dv_verdict* verdict = NULL;
    CHECK(dv_realize(2, v, &verdict) == DV_ERR_UNSUPPORTED_MASS);
    dv_classification* c = NULL;
    CHECK(dv_classify(2, 4, DV_FORM_ALL, v, &c) == DV_ERR_DET_MISMATCH);
    dv_delta_free(v);

    dv_enumerator* e = NULL;
    CHECK(dv_enumerator_new(0, 2, DV_FORM_ALL, &e) == DV_ERR_INVALID_ARGUMENT);
    dv_form_filter f;
    CHECK(dv_form_filter_parse("bogus", &f) == DV_ERR_INVALID_ARGUMENT);
    CHECK(dv_matrix_parse(NULL, &m) == DV_ERR_INVALID_ARGUMENT);

    /* a 10x10x10 box needs far more than 100 candidates */
    const int64_t big[] = {10, 0, 0, 0, 10, 0, 0, 0, 10};
    CHECK(dv_matrix_from_i64(3, big, &m) == DV_OK);
    CHECK(dv_oracle_delta(m, 100, &v) == DV_ERR_BUDGET_EXCEEDED);
    dv_matrix_free(m);

    uint64_t bad[] = {2, 1};
    CHECK(dv_delta_one_row(3, 3, 0, bad, 2, &v) == DV_ERR_INVALID_FORM);
}

static void test_delta(void) {
    const int64_t e[] = {1, 0, 0, 0, 0, 1, 0, 0, 1, 1, 2, 0, 1, 0, 1, 3};
    dv_matrix* m = NULL;
    CHECK(dv_matrix_from_i64(4, e, &m) == DV_OK);

    dv_delta *v = NULL, *w = NULL;
    CHECK(dv_delta_of_matrix(m, &v) == DV_OK);
    CHECK(dv_delta_dim(v) == 4);
    CHECK(dv_delta_mass(v) == 6);
    CHECK(dv_delta_coeff(v, 2) == 3);
    char* s = NULL;
    CHECK(dv_delta_to_string(v, &s) == DV_OK);
    CHECK(str_is(s, "1,0,3,2,0"));
    CHECK(dv_delta_to_polynomial(v, &s) == DV_OK);
    CHECK(str_is(s, "1 + 3t^2 + 2t^3"));

    CHECK(dv_oracle_delta(m, 0, &w) == DV_OK);
    CHECK(dv_delta_equal(v, w));
    dv_delta_free(w);

    uint64_t count = 0;
    CHECK(dv_oracle_count(m, 1, 0, 0, &count) == DV_OK && count == 5);
    CHECK(dv_oracle_count(m, 1, 1, 0, &count) == DV_OK && count == 0);
    int ok = 0;
    CHECK(dv_oracle_reciprocity(m, 6, 0, &ok) == DV_OK && ok == 1);

    dv_svalues* t = NULL;
    CHECK(dv_svalues_of_matrix(m, &t) == DV_OK);
    CHECK(dv_svalues_count(t) == 6);
    CHECK(dv_svalues_dim(t) == 4);
    const uint64_t* idx = NULL;
    uint64_t sv = 0;
    CHECK(dv_svalues_entry(t, 5, &idx, &sv) == DV_OK);
    CHECK(idx[2] == 2 && idx[3] == 3 && sv == 5);
    CHECK(dv_svalues_entry(t, 6, &idx, &sv) == DV_ERR_INDEX_OUT_OF_BOUNDS);
    dv_svalues_free(t);

    CHECK(dv_delta_check_stanley(v) == 1);
    CHECK(dv_delta_check_hibi(v) == 1);
    dv_delta_free(v);
    dv_matrix_free(m);

    CHECK(dv_delta_all_dminus1(6, 3, &v) == DV_OK);
    CHECK(dv_delta_to_string(v, &s) == DV_OK);
    CHECK(str_is(s, "1,2,2,1"));
    CHECK(dv_delta_is_shifted_symmetric(v) == 0);
    dv_delta_free(v);

    uint64_t mult[] = {2, 0, 0, 0};
    dv_symmetry_report r;
    CHECK(dv_one_row_symmetry(3, 5, mult, 4, &r) == DV_OK);
    CHECK(r.coprime && r.unit_support && r.full_support && r.all);
    CHECK(dv_delta_one_row(3, 5, 0, mult, 4, &v) == DV_OK);
    CHECK(dv_delta_is_shifted_symmetric(v) == 1);
    dv_delta_free(v);

    CHECK(dv_delta_two_row(6, 1, 4, 4, 0, &v) == DV_OK);
    CHECK(dv_delta_to_string(v, &s) == DV_OK);
    CHECK(str_is(s, "1,0,1,1,0,1,0"));
    dv_delta_free(v);
}

static void test_enumerate_classify_realize(void) {
    dv_enumerator* e = NULL;
    CHECK(dv_enumerator_new(2, 5, DV_FORM_ALL, &e) == DV_OK);
    size_t n = 0;
    dv_matrix* m = NULL;
    while (dv_enumerator_next(e, &m) == DV_OK && m != NULL) {
        ++n;
        dv_matrix_free(m);
    }
    CHECK(n == 6);
    dv_enumerator_free(e);

    dv_delta* v = NULL;
    CHECK(dv_delta_parse("1,0,1,1,0,1,0", &v) == DV_OK);
    dv_classification* c = NULL;
    CHECK(dv_classify(6, 4, DV_FORM_ONE_ROW, v, &c) == DV_OK);
    CHECK(dv_classification_solution_count(c) == 2);
    CHECK(dv_classification_matrix_count(c) > 0);
    char* json = NULL;
    CHECK(dv_classification_to_json(c, 0, &json) == DV_OK);
    CHECK(json != NULL && strstr(json, "\"closed-form\"") != NULL);
    dv_string_free(json);
    dv_classification_free(c);

    dv_verdict* verdict = NULL;
    CHECK(dv_realize(6, v, &verdict) == DV_OK);
    CHECK(dv_verdict_realizable(verdict) == 1);
    CHECK(dv_verdict_witness(verdict, &m) == DV_OK && m != NULL);
    dv_delta* w = NULL;
    CHECK(dv_delta_of_matrix(m, &w) == DV_OK && dv_delta_equal(v, w));
    dv_delta_free(w);
    dv_matrix_free(m);
    dv_verdict_free(verdict);
    dv_delta_free(v);

    CHECK(dv_delta_parse("1,0,1,0,1,1,0,0", &v) == DV_OK);
    CHECK(dv_realize(7, v, &verdict) == DV_OK);
    CHECK(dv_verdict_realizable(verdict) == 0);
    CHECK(strcmp(dv_verdict_reason(verdict), "fails-additional") == 0);
    CHECK(dv_verdict_witness(verdict, &m) == DV_OK && m == NULL);
    CHECK(dv_verdict_to_json(verdict, &json) == DV_OK);
    CHECK(json != NULL && strstr(json, "\"realizable\":false") != NULL);
    dv_string_free(json);
    dv_verdict_free(verdict);
    dv_delta_free(v);
}

int main(void) {
    CHECK(dv_version() != NULL);
    test_matrix();
    test_errors();
    test_delta();
    test_enumerate_classify_realize();
    if (failures) {
        fprintf(stderr, "%d check(s) failed\n", failures);
        return 1;
    }
    printf("capi: all checks passed\n");
    return 0;
}
