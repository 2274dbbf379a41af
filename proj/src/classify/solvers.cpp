#include "classify/solvers.hpp"

#include "error.hpp"

#include <algorithm>
#include <map>

namespace deltavec {

namespace {

using I = std::int64_t;

bool vol2_row(int family, I d, I i) {
    const I d1 = family == 1 ? 2 * i - 2 : 2 * i - 1;
    return d1 >= 0 && d1 <= d - 1;
}

bool vol3_row(int family, I d, I i, I j) {
    switch (family) {
        case 1: return 2 * j >= i && 2 * i >= j + 1 && i + j <= d;
        case 2: return 2 * j >= i + 1 && 2 * i >= j + 1 && i + j <= d + 1;
        case 3: return 2 * j >= i && 2 * i >= j + 2 && i + j <= d + 1;
        default: return false;
    }
}

bool vol4_one_row(int family, I d, I i, I j, I k) {
    switch (family) {
        case 1: return j + k >= i + 1 && 2 * j <= i + k && i + k <= d + 1 && i + j >= k + 1;
        case 2: return j + k >= i && 2 * j <= i + k && i + k <= d + 1 && i + j >= k + 2;
        case 3: return j + k >= i && 2 * j <= i + k && i + k <= d && i + j >= k + 1;
        case 4: return j + k >= i && 2 * j + 1 <= i + k && i + k <= d + 1 && i + j >= k + 1;
        default: return false;
    }
}

bool vol4_bar0(int family, I d, I i, I j, I k) {
    const I half = d / 2, half_down = (d - 1) / 2, half_up = (d + 1) / 2;
    switch (family) {
        case 1:
            return i <= half && j <= half_down && 2 <= k && k <= half_up && i + j + k <= d + 1 &&
                   k <= i + j && j + 2 <= i + k && i + 1 <= j + k;
        case 2:
            return i <= half_down && j <= half && 2 <= k && k <= half_up && i + j + k <= d + 1 &&
                   k <= i + j && j + 1 <= i + k && i + 2 <= j + k;
        case 3:
            return k <= half && i <= half_down && j <= half_down && i + j + k <= d &&
                   k <= i + j && j + 1 <= i + k && i + 1 <= j + k;
        case 4:
            return i <= half && j <= half && k <= half && i + j + k <= d + 1 &&
                   k + 1 <= i + j && j + 1 <= i + k && i + 1 <= j + k;
        default: return false;
    }
}

bool vol4_bar1(int family, I d, I i, I j, I k) {
    switch (family) {
        case 1:
            return j + 3 <= 2 * k && 2 * k <= d + j + 1 && j + 2 <= 2 * i && 2 * i <= d + j &&
                   2 * j <= d - 1 && 2 * j + 2 <= i + k && i + k <= d + 1 && i + 1 <= j + k &&
                   k <= i + j;
        case 2:
            return j + 2 <= 2 * k && 2 * k <= d + j && j + 1 <= 2 * i && 2 * i <= d + j - 1 &&
                   2 * j <= d - 1 && 2 * j + 1 <= i + k && i + k <= d && i + 1 <= j + k &&
                   k <= i + j;
        case 3:
            return j + 3 <= 2 * k && 2 * k <= d + j + 1 && j + 1 <= 2 * i &&
                   2 * i <= d + j - 1 && 2 * j <= d && 2 * j + 1 <= i + k && i + k <= d + 1 &&
                   i + 2 <= j + k && k <= i + j;
        case 4:
            return j + 2 <= 2 * k && 2 * k <= d + j && j + 2 <= 2 * i && 2 * i <= d + j &&
                   2 * j <= d && 2 * j + 1 <= i + k && i + k <= d + 1 && i + 1 <= j + k &&
                   k + 1 <= i + j;
        default: return false;
    }
}

void check_family(SolverTable t, int family) {
    if (family < 1 || static_cast<std::size_t>(family) > table_family_count(t))
        fail(ErrorCode::InvalidArgument, "no family " + std::to_string(family) + " in this table");
}

void check_roles(SolverTable t, const Roles& roles) {
    if (roles.size() != table_arity(t))
        fail(ErrorCode::InvalidArgument, "expected " + std::to_string(table_arity(t)) +
                                             " exponents, got " + std::to_string(roles.size()));
}

// Parameters must also describe an actual normal form of dimension d.
bool params_fit(SolverTable t, std::size_t d, const std::vector<I>& p) {
    if (std::any_of(p.begin(), p.end(), [](I x) { return x < 0; })) return false;
    if (t == SolverTable::Vol4TwoRowBar0 || t == SolverTable::Vol4TwoRowBar1) {
        const I a = p[0], b = p[1], c = p[2];
        if ((a + b + c) % 2 != 0) return false;
        if (a > b + c || b > a + c || c > a + b) return false;
        return d >= 2 && (a + b + c) / 2 <= static_cast<I>(d) - 2;
    }
    I total = 0;
    for (I x : p) total += x;
    return total <= static_cast<I>(d) - 1;
}

}  // namespace

std::size_t table_family_count(SolverTable t) {
    switch (t) {
        case SolverTable::Vol2: return 2;
        case SolverTable::Vol3: return 3;
        default: return 4;
    }
}

std::size_t table_arity(SolverTable t) {
    switch (t) {
        case SolverTable::Vol2: return 1;
        case SolverTable::Vol3: return 2;
        default: return 3;
    }
}

bool table_row_holds(SolverTable t, int family, std::int64_t d, const Roles& r) {
    check_family(t, family);
    check_roles(t, r);
    switch (t) {
        case SolverTable::Vol2: return vol2_row(family, d, r[0]);
        case SolverTable::Vol3: return vol3_row(family, d, r[0], r[1]);
        case SolverTable::Vol4OneRow: return vol4_one_row(family, d, r[0], r[1], r[2]);
        case SolverTable::Vol4TwoRowBar0: return vol4_bar0(family, d, r[0], r[1], r[2]);
        case SolverTable::Vol4TwoRowBar1: return vol4_bar1(family, d, r[0], r[1], r[2]);
    }
    return false;
}

std::vector<std::int64_t> table_params(SolverTable t, int family, const Roles& r) {
    check_family(t, family);
    check_roles(t, r);
    switch (t) {
        case SolverTable::Vol2: return {family == 1 ? 2 * r[0] - 2 : 2 * r[0] - 1};
        case SolverTable::Vol3: {
            const I i = r[0], j = r[1];
            if (family == 1) return {2 * j - i, 2 * i - j - 1};
            if (family == 2) return {2 * j - i - 1, 2 * i - j - 1};
            return {2 * j - i, 2 * i - j - 2};
        }
        case SolverTable::Vol4OneRow: {
            const I i = r[0], j = r[1], k = r[2];
            if (family == 1) return {-i + j + k - 1, i - 2 * j + k, i + j - k - 1};
            if (family == 2) return {-i + j + k, i - 2 * j + k, i + j - k - 2};
            if (family == 3) return {-i + j + k, i - 2 * j + k, i + j - k - 1};
            return {-i + j + k, i - 2 * j + k - 1, i + j - k - 1};
        }
        case SolverTable::Vol4TwoRowBar0: {
            const I i = r[0], j = r[1], k = r[2];
            if (family == 1) return {2 * i - 2, 2 * j - 1, 2 * k - 3};
            if (family == 2) return {2 * i - 1, 2 * j - 2, 2 * k - 3};
            if (family == 3) return {2 * i - 1, 2 * j - 1, 2 * k - 2};
            return {2 * i - 2, 2 * j - 2, 2 * k - 2};
        }
        case SolverTable::Vol4TwoRowBar1: {
            const I i = r[0], j = r[1], k = r[2];
            if (family == 1) return {2 * j - 1, 2 * k - j - 3, 2 * i - j - 2};
            if (family == 2) return {2 * j - 1, 2 * k - j - 2, 2 * i - j - 1};
            if (family == 3) return {2 * j - 2, 2 * k - j - 3, 2 * i - j - 1};
            return {2 * j - 2, 2 * k - j - 2, 2 * i - j - 2};
        }
    }
    return {};
}

std::uint64_t SolutionFamily::det() const noexcept {
    switch (table) {
        case SolverTable::Vol2: return 2;
        case SolverTable::Vol3: return 3;
        default: return 4;
    }
}

FormKind SolutionFamily::form() const noexcept {
    return table == SolverTable::Vol4TwoRowBar0 || table == SolverTable::Vol4TwoRowBar1
               ? FormKind::TwoRow
               : FormKind::OneRow;
}

int SolutionFamily::bar() const noexcept { return table == SolverTable::Vol4TwoRowBar1 ? 1 : 0; }

OneRowForm SolutionFamily::one_row_form() const {
    if (form() != FormKind::OneRow) fail(ErrorCode::InvalidForm, "not a one-row solution");
    OneRowForm f;
    f.dim = dim;
    f.det = det();
    f.multiplicities = params;
    f.validate();
    return f;
}

TwoRowForm SolutionFamily::two_row_form() const {
    if (form() != FormKind::TwoRow) fail(ErrorCode::InvalidForm, "not a two-row solution");
    return TwoRowForm::from_params(dim, bar(), params[0], params[1], params[2]);
}

std::vector<IntMatrix> SolutionFamily::matrices() const {
    return form() == FormKind::OneRow ? one_row_form().all_matrices()
                                      : two_row_form().all_matrices();
}

IntMatrix SolutionFamily::canonical_matrix() const {
    return form() == FormKind::OneRow ? one_row_form().canonical_matrix()
                                      : two_row_form().canonical_matrix();
}

std::vector<SolutionFamily> solve_table(SolverTable t, std::size_t d,
                                        const std::vector<std::int64_t>& exponents) {
    check_roles(t, exponents);
    const auto families = table_family_count(t);
    std::map<std::vector<std::uint64_t>, SolutionFamily> found;
    Roles roles = exponents;
    std::sort(roles.begin(), roles.end());
    do {
        for (int family = 1; family <= static_cast<int>(families); ++family) {
            if (!table_row_holds(t, family, static_cast<I>(d), roles)) continue;
            const auto p = table_params(t, family, roles);
            if (!params_fit(t, d, p)) continue;
            std::vector<std::uint64_t> key(p.begin(), p.end());
            auto [it, fresh] = found.try_emplace(key);
            SolutionFamily& s = it->second;
            if (fresh) {
                s.table = t;
                s.dim = d;
                s.params = key;
                s.rows_satisfied.assign(families, false);
            }
            s.rows_satisfied[static_cast<std::size_t>(family - 1)] = true;
            s.hits.push_back({family, roles});
        }
    } while (std::next_permutation(roles.begin(), roles.end()));
    std::vector<SolutionFamily> out;
    out.reserve(found.size());
    for (auto& [key, s] : found) {
        std::sort(s.hits.begin(), s.hits.end(), [](const FamilyHit& a, const FamilyHit& b) {
            return a.family != b.family ? a.family < b.family : a.roles < b.roles;
        });
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<SolutionFamily> solve_vol2(std::size_t d, std::int64_t i) {
    return solve_table(SolverTable::Vol2, d, {i});
}

std::vector<SolutionFamily> solve_vol3(std::size_t d, std::int64_t i, std::int64_t j) {
    return solve_table(SolverTable::Vol3, d, {i, j});
}

std::vector<SolutionFamily> solve_vol4_one_row(std::size_t d, std::int64_t i, std::int64_t j,
                                               std::int64_t k) {
    return solve_table(SolverTable::Vol4OneRow, d, {i, j, k});
}

std::vector<SolutionFamily> solve_vol4_two_row(std::size_t d, std::int64_t i, std::int64_t j,
                                               std::int64_t k, int bar) {
    if (bar != 0 && bar != 1) fail(ErrorCode::InvalidArgument, "bar entry must be 0 or 1");
    return solve_table(bar == 0 ? SolverTable::Vol4TwoRowBar0 : SolverTable::Vol4TwoRowBar1, d,
                       {i, j, k});
}

}  // namespace deltavec
