#include "classify/classify.hpp"

#include "delta/engine.hpp"
#include "error.hpp"

#include <algorithm>

namespace deltavec {

namespace {

void check_target(const HnfEnumSpec& spec, const DeltaVector& target) {
    if (target.dim() != spec.dim)
        fail(ErrorCode::InvalidArgument, "delta-vector has dimension " +
                                             std::to_string(target.dim()) + ", expected " +
                                             std::to_string(spec.dim));
    if (target.mass() != spec.det)
        fail(ErrorCode::DetMismatch, "delta-vector sums to " + std::to_string(target.mass()) +
                                         " but the determinant is " + std::to_string(spec.det));
}

std::vector<std::int64_t> signed_exponents(const DeltaVector& v) {
    std::vector<std::int64_t> out;
    for (auto e : v.exponents()) out.push_back(static_cast<std::int64_t>(e));
    return out;
}

std::vector<SolutionFamily> solve_all(std::size_t d, const DeltaVector& target) {
    const auto e = signed_exponents(target);
    switch (target.mass()) {
        case 2: return solve_table(SolverTable::Vol2, d, e);
        case 3: return solve_table(SolverTable::Vol3, d, e);
        case 4: {
            auto out = solve_table(SolverTable::Vol4OneRow, d, e);
            for (auto t : {SolverTable::Vol4TwoRowBar0, SolverTable::Vol4TwoRowBar1}) {
                auto more = solve_table(t, d, e);
                out.insert(out.end(), more.begin(), more.end());
            }
            return out;
        }
        default: return {};
    }
}

bool form_allowed(FormKind kind, FormFilter filter) {
    switch (filter) {
        case FormFilter::OneRow: return kind == FormKind::OneRow;
        case FormFilter::TwoRow: return kind == FormKind::TwoRow;
        case FormFilter::All: break;
    }
    return true;
}

void sort_unique(std::vector<IntMatrix>& ms) {
    std::sort(ms.begin(), ms.end(), enumeration_order_less);
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
}

}  // namespace

Classification classify_by_enumeration(const HnfEnumSpec& spec, const DeltaVector& target) {
    check_target(spec, target);
    Classification out;
    out.method = ClassifyMethod::Enumeration;
    HnfEnumerator e(spec);
    while (auto m = e.next())
        if (delta_from_hnf(HnfMatrix::from_normal_form(*m)) == target)
            out.matrices.push_back(std::move(*m));
    return out;
}

Classification classify(const HnfEnumSpec& spec, const DeltaVector& target) {
    check_target(spec, target);
    if (spec.det < 2 || spec.det > 4) return classify_by_enumeration(spec, target);
    Classification out;
    out.method = ClassifyMethod::ClosedForm;
    for (auto& s : solve_all(spec.dim, target)) {
        if (!form_allowed(s.form(), spec.filter)) continue;
        ClassifiedSolution c{s, s.canonical_matrix(), s.matrices()};
        out.matrices.insert(out.matrices.end(), c.matrices.begin(), c.matrices.end());
        out.solutions.push_back(std::move(c));
    }
    sort_unique(out.matrices);
    return out;
}

std::string_view refutation_name(Refutation r) {
    switch (r) {
        case Refutation::FailsNecessary: return "fails-necessary";
        case Refutation::FailsAdditional: return "fails-additional";
        case Refutation::None: break;
    }
    return "none";
}

namespace {

using I = std::int64_t;

IntMatrix verified(const IntMatrix& witness, const DeltaVector& target) {
    const auto got = delta_from_hnf(HnfMatrix::from_normal_form(witness));
    if (got != target)
        fail(ErrorCode::Internal, "witness has delta " + got.to_string() + " instead of " +
                                      target.to_string());
    return witness;
}

RealizabilityVerdict mass_four(std::size_t dim, const DeltaVector& target) {
    const auto e = signed_exponents(target);
    const I d = static_cast<I>(dim), i1 = e[0], i2 = e[1], i3 = e[2];
    RealizabilityVerdict v;
    std::string failed;
    if (i3 > i1 + i2) failed = "i3 > i1 + i2";
    else if (i1 + i3 > d + 1) failed = "i1 + i3 > d + 1";
    else if (i2 > (d + 1) / 2) failed = "i2 > floor((d+1)/2)";
    if (!failed.empty()) {
        v.reason = Refutation::FailsNecessary;
        v.detail = failed;
        return v;
    }
    if (2 * i2 > i1 + i3 && i2 + i3 > d + 1) {
        v.reason = Refutation::FailsAdditional;
        v.detail = "2*i2 > i1 + i3 and i2 + i3 > d + 1";
        return v;
    }
    int family;
    Roles roles;
    if (i1 == i2 && i2 == i3) {
        family = 1;
        roles = {i1, i1, i1};
    } else if (i1 < i2 && i2 == i3) {
        family = 1;
        roles = {i2, i1, i2};
    } else if (i1 == i2 && i2 < i3) {
        family = 4;
        roles = {i3, i1, i1};
    } else {
        family = 2;
        roles = 2 * i2 <= i1 + i3 ? Roles{i3, i2, i1} : Roles{i3, i1, i2};
    }
    if (!table_row_holds(SolverTable::Vol4OneRow, family, d, roles))
        fail(ErrorCode::Internal, "witness family constraints do not hold");
    const auto p = table_params(SolverTable::Vol4OneRow, family, roles);
    OneRowForm f;
    f.dim = dim;
    f.det = 4;
    f.multiplicities.assign(p.begin(), p.end());
    v.realizable = true;
    v.witness = verified(f.canonical_matrix(), target);
    v.detail = "one-row family " + std::to_string(family) + " with multiplicities (" +
               std::to_string(p[0]) + "," + std::to_string(p[1]) + "," + std::to_string(p[2]) +
               ")";
    return v;
}

RealizabilityVerdict small_mass_by_enumeration(std::size_t dim, const DeltaVector& target) {
    RealizabilityVerdict v;
    v.decided_by_enumeration = true;
    HnfEnumerator e({dim, target.mass(), FormFilter::All});
    while (auto m = e.next()) {
        if (delta_from_hnf(HnfMatrix::from_normal_form(*m)) == target) {
            v.realizable = true;
            v.witness = std::move(*m);
            v.detail = "found by exhaustive enumeration (dimension below 3)";
            return v;
        }
    }
    v.reason = Refutation::FailsNecessary;
    v.detail = "no normal form of this determinant attains it (exhaustive, dimension below 3)";
    return v;
}

RealizabilityVerdict small_mass(std::size_t dim, const DeltaVector& target) {
    if (dim < 3) return small_mass_by_enumeration(dim, target);
    RealizabilityVerdict v;
    std::string failed;
    if (!check_stanley(target)) failed = "the symmetric-sum inequalities";
    else if (!check_hibi(target)) failed = "the lower-bound inequalities";
    else if (target[1] < target[dim]) failed = "delta_1 >= delta_d";
    if (!failed.empty()) {
        v.reason = Refutation::FailsNecessary;
        v.detail = "violates " + failed;
        return v;
    }
    auto solutions = solve_all(dim, target);
    if (solutions.empty())
        fail(ErrorCode::Internal, "inequalities hold but no solution family applies");
    v.realizable = true;
    v.witness = verified(solutions.front().canonical_matrix(), target);
    v.detail = "satisfies the symmetric-sum and lower-bound inequalities and delta_1 >= delta_d";
    return v;
}

}  // namespace

RealizabilityVerdict realizable(std::size_t dim, const DeltaVector& target) {
    if (target.dim() != dim)
        fail(ErrorCode::InvalidArgument, "delta-vector has dimension " +
                                             std::to_string(target.dim()) + ", expected " +
                                             std::to_string(dim));
    const auto mass = target.mass();
    if (mass > 4)
        fail(ErrorCode::UnsupportedMass,
             "realizability is decided only for total mass <= 4, got " + std::to_string(mass));
    if (mass == 1) {
        RealizabilityVerdict v;
        v.realizable = true;
        v.witness = IntMatrix::identity(dim);
        v.detail = "unimodular simplex";
        return v;
    }
    if (mass == 4) return mass_four(dim, target);
    return small_mass(dim, target);
}

}  // namespace deltavec
