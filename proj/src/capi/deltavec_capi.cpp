#include "deltavec/deltavec.h"

#include "classify/classify.hpp"
#include "delta/engine.hpp"
#include "delta/forms.hpp"
#include "error.hpp"
#include "oracle/oracle.hpp"

#include "json.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>

using namespace deltavec;
using json = nlohmann::ordered_json;

struct dv_matrix {
    IntMatrix value;
};

struct dv_delta {
    DeltaVector value;
};

struct dv_svalues {
    std::size_t dim;
    std::vector<SValueEntry> entries;
};

struct dv_enumerator {
    HnfEnumerator value;
};

struct dv_classification {
    HnfEnumSpec spec;
    DeltaVector target;
    Classification value;
};

struct dv_verdict {
    std::size_t dim;
    DeltaVector target;
    RealizabilityVerdict value;
};

namespace {

thread_local std::string last_error;

dv_status to_status(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument: return DV_ERR_INVALID_ARGUMENT;
        case ErrorCode::Parse: return DV_ERR_PARSE;
        case ErrorCode::SingularMatrix: return DV_ERR_SINGULAR_MATRIX;
        case ErrorCode::BudgetExceeded: return DV_ERR_BUDGET_EXCEEDED;
        case ErrorCode::IndexOutOfBounds: return DV_ERR_INDEX_OUT_OF_BOUNDS;
        case ErrorCode::InvalidForm: return DV_ERR_INVALID_FORM;
        case ErrorCode::DetMismatch: return DV_ERR_DET_MISMATCH;
        case ErrorCode::UnsupportedMass: return DV_ERR_UNSUPPORTED_MASS;
        case ErrorCode::Internal: break;
    }
    return DV_ERR_INTERNAL;
}

dv_status set_error(dv_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

template <class F>
dv_status guarded(F&& body) {
    try {
        body();
        return DV_OK;
    } catch (const Error& e) {
        return set_error(to_status(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return set_error(DV_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return set_error(DV_ERR_INTERNAL, e.what());
    }
}

void require(const void* p, const char* name) {
    if (p == nullptr) fail(ErrorCode::InvalidArgument, std::string(name) + " must not be NULL");
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

oracle::Options oracle_options(std::uint64_t budget) {
    oracle::Options o;
    if (budget != 0) o.budget = budget;
    return o;
}

FormFilter to_filter(dv_form_filter f) {
    switch (f) {
        case DV_FORM_ALL: return FormFilter::All;
        case DV_FORM_ONE_ROW: return FormFilter::OneRow;
        case DV_FORM_TWO_ROW: return FormFilter::TwoRow;
    }
    fail(ErrorCode::InvalidArgument, "unknown form filter");
}

std::vector<std::uint64_t> copy_multiplicities(const std::uint64_t* mult, std::size_t n) {
    if (n > 0) require(mult, "multiplicities");
    return std::vector<std::uint64_t>(mult, mult + n);
}

OneRowForm one_row(std::size_t dim, std::uint64_t det, std::size_t row_position,
                   const std::uint64_t* mult, std::size_t n) {
    OneRowForm f;
    f.dim = dim;
    f.det = det;
    f.row_position = row_position;
    f.multiplicities = copy_multiplicities(mult, n);
    f.validate();
    return f;
}

json matrix_json(const IntMatrix& m) { return json::parse(format_matrix_json(m)); }

std::string family_tag(int family) { return "d(" + std::to_string(family) + ")"; }

json solution_json(const ClassifiedSolution& s, bool expand_all) {
    const SolutionFamily& f = s.family;
    json j;
    j["form"] = f.form() == FormKind::OneRow ? "one-row" : "two-row";
    if (f.form() == FormKind::TwoRow) j["bar"] = f.bar();
    j["params"] = f.params;
    json families = json::array();
    for (const auto& h : f.hits) families.push_back({{"family", family_tag(h.family)}, {"roles", h.roles}});
    j["families"] = families;
    json rows = json::array();
    for (bool b : f.rows_satisfied) rows.push_back(b);
    j["table_rows"] = rows;
    j["matrix_count"] = s.matrices.size();
    json ms = json::array();
    if (expand_all)
        for (const auto& m : s.matrices) ms.push_back(matrix_json(m));
    else
        ms.push_back(matrix_json(s.canonical));
    j["matrices"] = ms;
    return j;
}

}  // namespace

extern "C" {

const char* dv_last_error(void) { return last_error.c_str(); }

const char* dv_status_name(dv_status status) {
    switch (status) {
        case DV_OK: return "ok";
        case DV_ERR_INVALID_ARGUMENT: return "invalid argument";
        case DV_ERR_PARSE: return "parse error";
        case DV_ERR_SINGULAR_MATRIX: return "singular matrix";
        case DV_ERR_BUDGET_EXCEEDED: return "budget exceeded";
        case DV_ERR_INDEX_OUT_OF_BOUNDS: return "index out of bounds";
        case DV_ERR_INVALID_FORM: return "invalid form";
        case DV_ERR_DET_MISMATCH: return "determinant mismatch";
        case DV_ERR_UNSUPPORTED_MASS: return "unsupported mass";
        case DV_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void dv_string_free(char* s) { std::free(s); }

const char* dv_version(void) { return "1.0.0"; }

/* matrices */

dv_status dv_matrix_parse(const char* text, dv_matrix** out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = new dv_matrix{parse_matrix(text)};
    });
}

dv_status dv_matrix_from_i64(size_t dim, const int64_t* entries, dv_matrix** out) {
    return guarded([&] {
        require(entries, "entries");
        require(out, "out");
        if (dim < 1) fail(ErrorCode::InvalidArgument, "dimension must be at least 1");
        std::vector<Integer> values;
        values.reserve(dim * dim);
        for (std::size_t i = 0; i < dim * dim; ++i) values.push_back(to_integer(entries[i]));
        *out = new dv_matrix{IntMatrix(dim, std::move(values))};
    });
}

dv_status dv_matrix_clone(const dv_matrix* m, dv_matrix** out) {
    return guarded([&] {
        require(m, "matrix");
        require(out, "out");
        *out = new dv_matrix{m->value};
    });
}

void dv_matrix_free(dv_matrix* m) { delete m; }

size_t dv_matrix_dim(const dv_matrix* m) { return m ? m->value.dim() : 0; }

int dv_matrix_equal(const dv_matrix* a, const dv_matrix* b) {
    return a && b && a->value == b->value;
}

dv_status dv_matrix_entry_i64(const dv_matrix* m, size_t row, size_t col, int64_t* out) {
    return guarded([&] {
        require(m, "matrix");
        require(out, "out");
        if (row >= m->value.dim() || col >= m->value.dim())
            fail(ErrorCode::IndexOutOfBounds, "matrix entry out of range");
        const Integer& v = m->value(row, col);
        if (!fits_i64(v)) fail(ErrorCode::InvalidArgument, "entry does not fit in 64 bits");
        *out = v.get_si();
    });
}

dv_status dv_matrix_entry_string(const dv_matrix* m, size_t row, size_t col, char** out) {
    return guarded([&] {
        require(m, "matrix");
        require(out, "out");
        if (row >= m->value.dim() || col >= m->value.dim())
            fail(ErrorCode::IndexOutOfBounds, "matrix entry out of range");
        *out = dup_string(m->value(row, col).get_str());
    });
}

dv_status dv_matrix_to_text(const dv_matrix* m, char** out) {
    return guarded([&] {
        require(m, "matrix");
        require(out, "out");
        *out = dup_string(format_matrix_text(m->value));
    });
}

dv_status dv_matrix_to_json(const dv_matrix* m, char** out) {
    return guarded([&] {
        require(m, "matrix");
        require(out, "out");
        *out = dup_string(format_matrix_json(m->value));
    });
}

dv_status dv_matrix_determinant(const dv_matrix* m, char** out) {
    return guarded([&] {
        require(m, "matrix");
        require(out, "out");
        *out = dup_string(determinant(m->value).get_str());
    });
}

dv_status dv_matrix_hnf(const dv_matrix* m, dv_matrix** hnf, dv_matrix** transform) {
    return guarded([&] {
        require(m, "matrix");
        require(hnf, "hnf");
        auto h = hermite_normal_form(m->value);
        auto a = std::make_unique<dv_matrix>(dv_matrix{h.matrix()});
        if (transform != nullptr) *transform = new dv_matrix{h.transform()};
        *hnf = a.release();
    });
}

dv_status dv_matrix_equivalent(const dv_matrix* a, const dv_matrix* b, int* out) {
    return guarded([&] {
        require(a, "a");
        require(b, "b");
        require(out, "out");
        *out = unimodularly_equivalent(a->value, b->value) ? 1 : 0;
    });
}

/* delta-vectors */

dv_status dv_delta_parse(const char* text, dv_delta** out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = new dv_delta{DeltaVector::parse(text)};
    });
}

dv_status dv_delta_from_coeffs(const uint64_t* coeffs, size_t len, dv_delta** out) {
    return guarded([&] {
        require(coeffs, "coeffs");
        require(out, "out");
        *out = new dv_delta{DeltaVector(std::vector<std::uint64_t>(coeffs, coeffs + len))};
    });
}

void dv_delta_free(dv_delta* v) { delete v; }

size_t dv_delta_dim(const dv_delta* v) { return v ? v->value.dim() : 0; }

uint64_t dv_delta_coeff(const dv_delta* v, size_t i) {
    return v && i <= v->value.dim() ? v->value[i] : 0;
}

uint64_t dv_delta_mass(const dv_delta* v) { return v ? v->value.mass() : 0; }

int dv_delta_equal(const dv_delta* a, const dv_delta* b) { return a && b && a->value == b->value; }

dv_status dv_delta_to_string(const dv_delta* v, char** out) {
    return guarded([&] {
        require(v, "delta");
        require(out, "out");
        *out = dup_string(v->value.to_string());
    });
}

dv_status dv_delta_to_polynomial(const dv_delta* v, char** out) {
    return guarded([&] {
        require(v, "delta");
        require(out, "out");
        *out = dup_string(v->value.to_polynomial());
    });
}

int dv_delta_is_shifted_symmetric(const dv_delta* v) {
    return v && is_shifted_symmetric(v->value);
}

int dv_delta_check_stanley(const dv_delta* v) { return v && check_stanley(v->value); }

int dv_delta_check_hibi(const dv_delta* v) { return v && check_hibi(v->value); }

dv_status dv_delta_of_matrix(const dv_matrix* m, dv_delta** out) {
    return guarded([&] {
        require(m, "matrix");
        require(out, "out");
        *out = new dv_delta{delta_of_matrix(m->value)};
    });
}

dv_status dv_delta_one_row(size_t dim, uint64_t det, size_t row_position,
                           const uint64_t* multiplicities, size_t n_mult, dv_delta** out) {
    return guarded([&] {
        require(out, "out");
        *out = new dv_delta{delta_one_row(one_row(dim, det, row_position, multiplicities, n_mult))};
    });
}

dv_status dv_delta_all_dminus1(uint64_t det, size_t dim, dv_delta** out) {
    return guarded([&] {
        require(out, "out");
        *out = new dv_delta{delta_all_dminus1(det, dim)};
    });
}

dv_status dv_delta_two_row(size_t dim, int bar, uint64_t d1, uint64_t d1p, uint64_t d1pp,
                           dv_delta** out) {
    return guarded([&] {
        require(out, "out");
        *out = new dv_delta{delta_two_row(TwoRowForm::from_params(dim, bar, d1, d1p, d1pp))};
    });
}

dv_status dv_one_row_symmetry(size_t dim, uint64_t det, const uint64_t* multiplicities,
                              size_t n_mult, dv_symmetry_report* out) {
    return guarded([&] {
        require(out, "out");
        const auto r = one_row_symmetry(one_row(dim, det, 0, multiplicities, n_mult));
        out->weighted_sum_minus_one = r.weighted_sum_minus_one;
        out->weighted_gcd = r.weighted_gcd;
        out->coprime = r.coprime_condition;
        out->unit_support = r.unit_support_condition;
        out->full_support = r.full_support_condition;
        out->all = r.all();
    });
}

dv_status dv_one_row_matrix(size_t dim, uint64_t det, const uint64_t* multiplicities,
                            size_t n_mult, dv_matrix** out) {
    return guarded([&] {
        require(out, "out");
        *out = new dv_matrix{one_row(dim, det, 0, multiplicities, n_mult).canonical_matrix()};
    });
}

/* s-values */

dv_status dv_svalues_of_matrix(const dv_matrix* m, dv_svalues** out) {
    return guarded([&] {
        require(m, "matrix");
        require(out, "out");
        auto h = hermite_normal_form(m->value);
        *out = new dv_svalues{h.dim(), s_value_table(h)};
    });
}

void dv_svalues_free(dv_svalues* t) { delete t; }

size_t dv_svalues_count(const dv_svalues* t) { return t ? t->entries.size() : 0; }

size_t dv_svalues_dim(const dv_svalues* t) { return t ? t->dim : 0; }

dv_status dv_svalues_entry(const dv_svalues* t, size_t i, const uint64_t** index, uint64_t* s) {
    return guarded([&] {
        require(t, "table");
        if (i >= t->entries.size()) fail(ErrorCode::IndexOutOfBounds, "s-value entry out of range");
        if (index != nullptr) *index = t->entries[i].index.data();
        if (s != nullptr) *s = t->entries[i].s;
    });
}

/* oracle */

dv_status dv_oracle_count(const dv_matrix* m, uint64_t n, int interior, uint64_t budget,
                          uint64_t* out) {
    return guarded([&] {
        require(m, "matrix");
        require(out, "out");
        *out = oracle::count_points(Simplex(m->value), n, interior != 0, oracle_options(budget));
    });
}

dv_status dv_oracle_delta(const dv_matrix* m, uint64_t budget, dv_delta** out) {
    return guarded([&] {
        require(m, "matrix");
        require(out, "out");
        *out = new dv_delta{oracle::delta_bruteforce(Simplex(m->value), oracle_options(budget))};
    });
}

dv_status dv_oracle_reciprocity(const dv_matrix* m, uint64_t n_max, uint64_t budget, int* out) {
    return guarded([&] {
        require(m, "matrix");
        require(out, "out");
        *out = oracle::check_reciprocity(Simplex(m->value), n_max, oracle_options(budget)) ? 1 : 0;
    });
}

/* enumeration */

dv_status dv_form_filter_parse(const char* name, dv_form_filter* out) {
    return guarded([&] {
        require(name, "name");
        require(out, "out");
        switch (parse_form_filter(name)) {
            case FormFilter::All: *out = DV_FORM_ALL; break;
            case FormFilter::OneRow: *out = DV_FORM_ONE_ROW; break;
            case FormFilter::TwoRow: *out = DV_FORM_TWO_ROW; break;
        }
    });
}

dv_status dv_enumerator_new(size_t dim, uint64_t det, dv_form_filter filter, dv_enumerator** out) {
    return guarded([&] {
        require(out, "out");
        *out = new dv_enumerator{HnfEnumerator({dim, det, to_filter(filter)})};
    });
}

dv_status dv_enumerator_next(dv_enumerator* e, dv_matrix** out) {
    return guarded([&] {
        require(e, "enumerator");
        require(out, "out");
        auto m = e->value.next();
        *out = m ? new dv_matrix{std::move(*m)} : nullptr;
    });
}

void dv_enumerator_free(dv_enumerator* e) { delete e; }

/* classification */

dv_status dv_classify(size_t dim, uint64_t det, dv_form_filter filter, const dv_delta* target,
                      dv_classification** out) {
    return guarded([&] {
        require(target, "target");
        require(out, "out");
        HnfEnumSpec spec{dim, det, to_filter(filter)};
        *out = new dv_classification{spec, target->value, classify(spec, target->value)};
    });
}

void dv_classification_free(dv_classification* c) { delete c; }

size_t dv_classification_matrix_count(const dv_classification* c) {
    return c ? c->value.matrices.size() : 0;
}

size_t dv_classification_solution_count(const dv_classification* c) {
    return c ? c->value.solutions.size() : 0;
}

dv_status dv_classification_matrix(const dv_classification* c, size_t i, dv_matrix** out) {
    return guarded([&] {
        require(c, "classification");
        require(out, "out");
        if (i >= c->value.matrices.size())
            fail(ErrorCode::IndexOutOfBounds, "classification matrix out of range");
        *out = new dv_matrix{c->value.matrices[i]};
    });
}

dv_status dv_classification_to_json(const dv_classification* c, int expand_all, char** out) {
    return guarded([&] {
        require(c, "classification");
        require(out, "out");
        const Classification& cl = c->value;
        json j;
        j["dim"] = c->spec.dim;
        j["det"] = c->spec.det;
        j["form"] = std::string(form_filter_name(c->spec.filter));
        j["delta"] = c->target.to_string();
        j["method"] = cl.method == ClassifyMethod::ClosedForm ? "closed-form" : "enumeration";
        json solutions = json::array();
        for (const auto& s : cl.solutions) solutions.push_back(solution_json(s, expand_all != 0));
        j["solutions"] = solutions;
        j["matrix_count"] = cl.matrices.size();
        if (cl.method == ClassifyMethod::Enumeration || expand_all != 0) {
            json ms = json::array();
            for (const auto& m : cl.matrices) ms.push_back(matrix_json(m));
            j["matrices"] = ms;
        }
        *out = dup_string(j.dump());
    });
}

/* realizability */

dv_status dv_realize(size_t dim, const dv_delta* target, dv_verdict** out) {
    return guarded([&] {
        require(target, "target");
        require(out, "out");
        *out = new dv_verdict{dim, target->value, realizable(dim, target->value)};
    });
}

void dv_verdict_free(dv_verdict* v) { delete v; }

int dv_verdict_realizable(const dv_verdict* v) { return v && v->value.realizable; }

int dv_verdict_by_enumeration(const dv_verdict* v) {
    return v && v->value.decided_by_enumeration;
}

const char* dv_verdict_reason(const dv_verdict* v) {
    return v ? refutation_name(v->value.reason).data() : "none";
}

const char* dv_verdict_detail(const dv_verdict* v) { return v ? v->value.detail.c_str() : ""; }

dv_status dv_verdict_witness(const dv_verdict* v, dv_matrix** out) {
    return guarded([&] {
        require(v, "verdict");
        require(out, "out");
        *out = v->value.witness ? new dv_matrix{*v->value.witness} : nullptr;
    });
}

dv_status dv_verdict_to_json(const dv_verdict* v, char** out) {
    return guarded([&] {
        require(v, "verdict");
        require(out, "out");
        const auto& r = v->value;
        json j;
        j["dim"] = v->dim;
        j["delta"] = v->target.to_string();
        j["realizable"] = r.realizable;
        j["reason"] = std::string(refutation_name(r.reason));
        j["detail"] = r.detail;
        j["decided_by_enumeration"] = r.decided_by_enumeration;
        j["stanley"] = check_stanley(v->target);
        j["hibi"] = check_hibi(v->target);
        j["witness"] = r.witness ? matrix_json(*r.witness) : json(nullptr);
        *out = dup_string(j.dump());
    });
}

}  // extern "C"
