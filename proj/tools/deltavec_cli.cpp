// deltavec command-line front end. Talks to the library exclusively through
// the C interface in deltavec/deltavec.h.

#include "deltavec/deltavec.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kDisagree = 1, kUsage = 2, kSingular = 3, kBudget = 4, kInternal = 5 };

struct Failure {
    int code;
    std::string message;
};

int exit_code(dv_status s) {
    switch (s) {
        case DV_OK: return kOk;
        case DV_ERR_SINGULAR_MATRIX: return kSingular;
        case DV_ERR_BUDGET_EXCEEDED: return kBudget;
        case DV_ERR_INTERNAL: return kInternal;
        default: return kUsage;
    }
}

void check(dv_status s) {
    if (s != DV_OK) throw Failure{exit_code(s), dv_last_error()};
}

template <class T, void (*Free)(T*)>
struct Deleter {
    void operator()(T* p) const { Free(p); }
};
using Matrix = std::unique_ptr<dv_matrix, Deleter<dv_matrix, dv_matrix_free>>;
using Delta = std::unique_ptr<dv_delta, Deleter<dv_delta, dv_delta_free>>;
using SValues = std::unique_ptr<dv_svalues, Deleter<dv_svalues, dv_svalues_free>>;
using Enumerator = std::unique_ptr<dv_enumerator, Deleter<dv_enumerator, dv_enumerator_free>>;
using Classification =
    std::unique_ptr<dv_classification, Deleter<dv_classification, dv_classification_free>>;
using Verdict = std::unique_ptr<dv_verdict, Deleter<dv_verdict, dv_verdict_free>>;

std::string take(char* s) {
    std::string out(s);
    dv_string_free(s);
    return out;
}

template <class F>
std::string fetch(F&& call) {
    char* s = nullptr;
    check(call(&s));
    return take(s);
}

struct Globals {
    bool json = false;
    std::optional<std::uint64_t> budget;

    std::uint64_t oracle_budget() const {
        if (budget) return *budget;
        if (const char* env = std::getenv("DELTAVEC_ORACLE_BUDGET")) {
            try {
                std::size_t used = 0;
                const auto v = std::stoull(env, &used);
                if (used == std::string(env).size()) return v;
            } catch (const std::exception&) {
            }
            throw Failure{kUsage, "DELTAVEC_ORACLE_BUDGET must be a nonnegative integer"};
        }
        return 0;  // library default
    }
};

std::string read_input(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw Failure{kUsage, "cannot open matrix file '" + path + "'"};
        buf << in.rdbuf();
    }
    return buf.str();
}

Matrix load_matrix(const std::string& path) {
    const std::string text = read_input(path);
    dv_matrix* m = nullptr;
    check(dv_matrix_parse(text.c_str(), &m));
    return Matrix(m);
}

Delta parse_delta(const std::string& text) {
    dv_delta* v = nullptr;
    check(dv_delta_parse(text.c_str(), &v));
    return Delta(v);
}

std::size_t resolve_dim(const dv_delta* v, const std::optional<std::size_t>& dim) {
    const std::size_t inferred = dv_delta_dim(v);
    if (dim && *dim != inferred)
        throw Failure{kUsage, "--dim " + std::to_string(*dim) + " does not match the delta-vector length (dimension " +
                                  std::to_string(inferred) + ")"};
    return inferred;
}

json matrix_json(const dv_matrix* m) {
    return json::parse(fetch([&](char** s) { return dv_matrix_to_json(m, s); }));
}

// decimal string -> JSON number when it fits comfortably, string otherwise
json integer_json(const std::string& decimal) {
    if (decimal.size() <= 18) return std::stoll(decimal);
    return decimal;
}

std::string render_rows(const dv_matrix* m, const std::string& indent = "  ") {
    const std::size_t d = dv_matrix_dim(m);
    std::vector<std::string> cells(d * d);
    std::size_t width = 1;
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
            cells[r * d + c] = fetch([&](char** s) { return dv_matrix_entry_string(m, r, c, s); });
            width = std::max(width, cells[r * d + c].size());
        }
    std::string out;
    for (std::size_t r = 0; r < d; ++r) {
        out += indent;
        for (std::size_t c = 0; c < d; ++c) {
            const auto& cell = cells[r * d + c];
            out += std::string(width - cell.size() + (c ? 1 : 0), ' ') + cell;
        }
        out += '\n';
    }
    return out;
}

std::vector<std::uint64_t> coefficients(const dv_delta* v) {
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i <= dv_delta_dim(v); ++i) out.push_back(dv_delta_coeff(v, i));
    return out;
}

std::string delta_string(const dv_delta* v) {
    return fetch([&](char** s) { return dv_delta_to_string(v, s); });
}

std::string delta_polynomial(const dv_delta* v) {
    return fetch([&](char** s) { return dv_delta_to_polynomial(v, s); });
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

// ---- commands ------------------------------------------------------------

struct HnfArgs {
    std::string matrix;
};

int cmd_hnf(const Globals& g, const HnfArgs& a) {
    Matrix m = load_matrix(a.matrix);
    dv_matrix *h = nullptr, *u = nullptr;
    check(dv_matrix_hnf(m.get(), &h, &u));
    Matrix hnf(h), transform(u);
    const std::string det = fetch([&](char** s) { return dv_matrix_determinant(m.get(), s); });
    if (g.json) {
        json j;
        j["hnf"] = matrix_json(hnf.get());
        j["transform"] = matrix_json(transform.get());
        j["det"] = integer_json(det);
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "HNF:\n" << render_rows(hnf.get()) << "U:\n" << render_rows(transform.get())
                  << "det: " << det << '\n';
    }
    return kOk;
}

struct DeltaArgs {
    std::string matrix;
    bool oracle = false;
    bool s_values = false;
};

int cmd_delta(const Globals& g, const DeltaArgs& a) {
    Matrix m = load_matrix(a.matrix);
    dv_delta* raw = nullptr;
    check(dv_delta_of_matrix(m.get(), &raw));
    Delta v(raw);

    SValues table;
    if (a.s_values) {
        dv_svalues* t = nullptr;
        check(dv_svalues_of_matrix(m.get(), &t));
        table.reset(t);
    }
    Delta brute;
    if (a.oracle) {
        dv_delta* b = nullptr;
        check(dv_oracle_delta(m.get(), g.oracle_budget(), &b));
        brute.reset(b);
    }
    const bool agree = !brute || dv_delta_equal(v.get(), brute.get());

    if (g.json) {
        json j;
        j["delta"] = delta_string(v.get());
        j["coefficients"] = coefficients(v.get());
        j["polynomial"] = delta_polynomial(v.get());
        if (table) {
            json rows = json::array();
            for (std::size_t i = 0; i < dv_svalues_count(table.get()); ++i) {
                const std::uint64_t* idx = nullptr;
                std::uint64_t s = 0;
                check(dv_svalues_entry(table.get(), i, &idx, &s));
                rows.push_back({{"index", std::vector<std::uint64_t>(idx, idx + dv_svalues_dim(table.get()))},
                                {"s", s}});
            }
            j["s_values"] = rows;
        }
        if (brute) {
            j["oracle"] = {{"delta", delta_string(brute.get())},
                           {"verdict", agree ? "AGREE" : "DISAGREE"}};
        }
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "delta: " << delta_string(v.get()) << '\n'
                  << "polynomial: " << delta_polynomial(v.get()) << '\n';
        if (table) {
            std::cout << "s-values:\n";
            for (std::size_t i = 0; i < dv_svalues_count(table.get()); ++i) {
                const std::uint64_t* idx = nullptr;
                std::uint64_t s = 0;
                check(dv_svalues_entry(table.get(), i, &idx, &s));
                std::cout << "  (";
                for (std::size_t k = 0; k < dv_svalues_dim(table.get()); ++k)
                    std::cout << (k ? "," : "") << idx[k];
                std::cout << ") s=" << s << '\n';
            }
        }
        if (brute) {
            std::cout << "oracle: " << delta_string(brute.get()) << '\n'
                      << (agree ? "AGREE" : "DISAGREE") << '\n';
        }
    }
    return agree ? kOk : kDisagree;
}

struct EnumerateArgs {
    std::size_t dim = 1;
    std::uint64_t det = 1;
    std::string form = "all";
    bool with_delta = false;
};

int cmd_enumerate(const Globals&, const EnumerateArgs& a) {
    dv_form_filter filter;
    check(dv_form_filter_parse(a.form.c_str(), &filter));
    dv_enumerator* raw = nullptr;
    check(dv_enumerator_new(a.dim, a.det, filter, &raw));
    Enumerator e(raw);
    // one matrix object per line inside a JSON array, written as produced
    std::cout << "[";
    bool first = true;
    while (true) {
        dv_matrix* next = nullptr;
        check(dv_enumerator_next(e.get(), &next));
        if (next == nullptr) break;
        Matrix m(next);
        json j = matrix_json(m.get());
        if (a.with_delta) {
            dv_delta* v = nullptr;
            check(dv_delta_of_matrix(m.get(), &v));
            Delta dv(v);
            j["delta"] = delta_string(dv.get());
        }
        std::cout << (first ? "\n" : ",\n") << j.dump();
        first = false;
    }
    std::cout << (first ? "]\n" : "\n]\n");
    return kOk;
}

struct ClassifyArgs {
    std::optional<std::size_t> dim;
    std::uint64_t det = 1;
    std::string delta;
    std::string form = "all";
    bool expand_all = false;
};

int cmd_classify(const Globals& g, const ClassifyArgs& a) {
    Delta target = parse_delta(a.delta);
    const std::size_t dim = resolve_dim(target.get(), a.dim);
    dv_form_filter filter;
    check(dv_form_filter_parse(a.form.c_str(), &filter));
    dv_classification* raw = nullptr;
    check(dv_classify(dim, a.det, filter, target.get(), &raw));
    Classification c(raw);
    const std::string out =
        fetch([&](char** s) { return dv_classification_to_json(c.get(), a.expand_all, s); });
    std::cout << (g.json ? json::parse(out).dump() : json::parse(out).dump(2)) << '\n';
    return kOk;
}

struct RealizeArgs {
    std::optional<std::size_t> dim;
    std::string delta;
};

int cmd_realize(const Globals& g, const RealizeArgs& a) {
    Delta target = parse_delta(a.delta);
    const std::size_t dim = resolve_dim(target.get(), a.dim);
    dv_verdict* raw = nullptr;
    check(dv_realize(dim, target.get(), &raw));
    Verdict v(raw);
    if (g.json) {
        std::cout << fetch([&](char** s) { return dv_verdict_to_json(v.get(), s); }) << '\n';
        return kOk;
    }
    if (dv_verdict_realizable(v.get())) {
        dv_matrix* w = nullptr;
        check(dv_verdict_witness(v.get(), &w));
        Matrix witness(w);
        std::cout << "REALIZABLE\n" << "witness:\n" << render_rows(witness.get());
    } else {
        std::cout << "NOT REALIZABLE\n" << "reason: " << dv_verdict_reason(v.get()) << '\n';
    }
    std::cout << "detail: " << dv_verdict_detail(v.get()) << '\n'
              << "stanley: " << yes_no(dv_delta_check_stanley(target.get())) << '\n'
              << "hibi: " << yes_no(dv_delta_check_hibi(target.get())) << '\n';
    if (dv_verdict_by_enumeration(v.get()))
        std::cout << "decided by exhaustive enumeration (dimension below 3)\n";
    return kOk;
}

struct SymmetryArgs {
    std::size_t dim = 1;
    std::uint64_t det = 2;
    std::string multiplicities;
    bool all_dminus1 = false;
};

std::vector<std::uint64_t> parse_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            if (item.empty() || item[0] == '-') throw std::invalid_argument(item);
            out.push_back(std::stoull(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Failure{kUsage, "invalid multiplicity list '" + text + "'"};
        }
    }
    return out;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

int cmd_symmetry(const Globals& g, const SymmetryArgs& a) {
    if (a.all_dminus1 == !a.multiplicities.empty())
        throw Failure{kUsage, "give exactly one of --multiplicities and --all-dminus1"};
    if (a.det < 2) throw Failure{kUsage, "--det must be at least 2"};
    if (a.dim < 1) throw Failure{kUsage, "--dim must be at least 1"};
    std::vector<std::uint64_t> mult;
    if (a.all_dminus1) {
        mult.assign(a.det - 1, 0);
        mult.back() = a.dim - 1;
    } else {
        mult = parse_list(a.multiplicities);
    }
    dv_delta* raw = nullptr;
    if (a.all_dminus1)
        check(dv_delta_all_dminus1(a.det, a.dim, &raw));
    else
        check(dv_delta_one_row(a.dim, a.det, 0, mult.data(), mult.size(), &raw));
    Delta v(raw);
    dv_symmetry_report r{};
    check(dv_one_row_symmetry(a.dim, a.det, mult.data(), mult.size(), &r));
    const bool symmetric = dv_delta_is_shifted_symmetric(v.get());

    if (g.json) {
        json j;
        j["dim"] = a.dim;
        j["det"] = a.det;
        j["multiplicities"] = mult;
        j["delta"] = delta_string(v.get());
        j["polynomial"] = delta_polynomial(v.get());
        j["shifted_symmetric"] = symmetric;
        j["conditions"] = {{"weighted_sum_minus_one", r.weighted_sum_minus_one},
                           {"gcd", r.weighted_gcd},
                           {"coprime", static_cast<bool>(r.coprime)},
                           {"unit_support", static_cast<bool>(r.unit_support)},
                           {"full_support", static_cast<bool>(r.full_support)},
                           {"all", static_cast<bool>(r.all)}};
        if (a.all_dminus1) j["gcd_det_dim"] = gcd(a.det, a.dim);
        std::cout << j.dump() << '\n';
        return kOk;
    }
    std::cout << "delta: " << delta_string(v.get()) << '\n'
              << "polynomial: " << delta_polynomial(v.get()) << '\n'
              << "shifted symmetric: " << yes_no(symmetric) << '\n';
    if (a.all_dminus1) std::cout << "gcd(D, d) = " << gcd(a.det, a.dim) << '\n';
    std::cout << "condition (1) gcd(sum j*d_j - 1, D) = gcd(" << r.weighted_sum_minus_one << ", "
              << a.det << ") = " << r.weighted_gcd << ": " << yes_no(r.coprime) << '\n'
              << "condition (2) d_j = 0 whenever gcd(j, D) > 1: " << yes_no(r.unit_support) << '\n'
              << "condition (3) sum d_j = d - 1: " << yes_no(r.full_support) << '\n'
              << "all conditions: " << yes_no(r.all) << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hermite normal forms and delta-vectors of lattice simplices"};
    app.require_subcommand(1);
    Globals g;
    std::uint64_t budget = 0;
    app.add_flag("--json", g.json, "Machine-readable JSON output");
    auto* budget_opt = app.add_option(
        "--budget", budget,
        "Oracle budget in candidate points (default 1e8, or DELTAVEC_ORACLE_BUDGET)");

    HnfArgs hnf;
    auto* hnf_cmd = app.add_subcommand("hnf", "Hermite normal form, transform and determinant");
    hnf_cmd->add_option("--matrix", hnf.matrix, "Matrix file ('-' for stdin)")->required();

    DeltaArgs delta;
    auto* delta_cmd = app.add_subcommand("delta", "delta-vector of the simplex spanned by the rows");
    delta_cmd->add_option("--matrix", delta.matrix, "Matrix file ('-' for stdin)")->required();
    delta_cmd->add_flag("--oracle", delta.oracle, "Cross-check by brute-force lattice-point counting");
    delta_cmd->add_flag("--s-values", delta.s_values, "List every congruence index with its s-value");

    EnumerateArgs en;
    auto* en_cmd = app.add_subcommand("enumerate", "Stream all normal forms of a determinant");
    en_cmd->add_option("--dim", en.dim)->required()->check(CLI::PositiveNumber);
    en_cmd->add_option("--det", en.det)->required()->check(CLI::PositiveNumber);
    en_cmd->add_option("--form", en.form, "all | one-row | two-row");
    en_cmd->add_flag("--with-delta", en.with_delta, "Annotate each matrix with its delta-vector");

    ClassifyArgs cl;
    auto* cl_cmd = app.add_subcommand("classify", "All normal forms with a given delta-vector");
    cl_cmd->add_option("--dim", cl.dim, "Dimension (default: inferred from --delta)");
    cl_cmd->add_option("--det", cl.det)->required()->check(CLI::PositiveNumber);
    cl_cmd->add_option("--delta", cl.delta, "e.g. 1,0,1,1,0,1,0")->required();
    cl_cmd->add_option("--form", cl.form, "all | one-row | two-row");
    cl_cmd->add_flag("--expand-all", cl.expand_all, "List every matrix, not one per solution");

    RealizeArgs re;
    auto* re_cmd = app.add_subcommand("realize", "Decide realizability for total mass <= 4");
    re_cmd->add_option("--dim", re.dim, "Dimension (default: inferred from --delta)");
    re_cmd->add_option("--delta", re.delta)->required();

    SymmetryArgs sy;
    auto* sy_cmd = app.add_subcommand("symmetry", "Shifted symmetry of one-row forms");
    sy_cmd->add_option("--dim", sy.dim)->required()->check(CLI::PositiveNumber);
    sy_cmd->add_option("--det", sy.det)->required();
    auto* mult_opt = sy_cmd->add_option("--multiplicities", sy.multiplicities, "d_1,...,d_{D-1}");
    auto* all_opt = sy_cmd->add_flag("--all-dminus1", sy.all_dminus1, "Every entry equal to D-1");
    mult_opt->excludes(all_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    if (*budget_opt) g.budget = budget;

    try {
        if (*hnf_cmd) return cmd_hnf(g, hnf);
        if (*delta_cmd) return cmd_delta(g, delta);
        if (*en_cmd) return cmd_enumerate(g, en);
        if (*cl_cmd) return cmd_classify(g, cl);
        if (*re_cmd) return cmd_realize(g, re);
        if (*sy_cmd) return cmd_symmetry(g, sy);
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << '\n';
        return f.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInternal;
    }
    return kUsage;
}
