#pragma once

// Inverse problem for determinants 2, 3 and 4: given the exponents of a
// delta-polynomial 1 + t^i + t^j (+ t^k), list the multiplicity parameters of
// every one-row or two-row normal form producing it. Each solution family is
// a linear map from the exponents (in some role order) to the parameters,
// valid under the linear constraints of its table row.

#include "delta/forms.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace deltavec {

enum class SolverTable {
    Vol2,           // D = 2, one row, parameter d_1
    Vol3,           // D = 3, one row, (d_1, d_2)
    Vol4OneRow,     // D = 4, one row, (d_1, d_2, d_3)
    Vol4TwoRowBar0, // D = 4, two rows of 2's, bar entry 0, (d_1, d_1', d_1'')
    Vol4TwoRowBar1, // same with bar entry 1
};

enum class FormKind { OneRow, TwoRow };

/// Exponents in role order (i), (i, j) or (i, j, k).
using Roles = std::vector<std::int64_t>;

std::size_t table_family_count(SolverTable t);  // 2, 3, 4, 4, 4
std::size_t table_arity(SolverTable t);         // number of exponents: 1, 2, 3, 3, 3

/// The table row of `family` (1-based) holds for these roles in dimension d.
bool table_row_holds(SolverTable t, int family, std::int64_t d, const Roles& roles);
/// Parameters produced by `family` for these roles (may be negative when the
/// row does not hold).
std::vector<std::int64_t> table_params(SolverTable t, int family, const Roles& roles);

struct FamilyHit {
    int family = 0;  // 1-based
    Roles roles;     // the role assignment that produced the parameters
};

struct SolutionFamily {
    SolverTable table = SolverTable::Vol2;
    std::size_t dim = 1;
    std::vector<std::uint64_t> params;
    /// per family: some role assignment satisfies that row and yields params
    std::vector<bool> rows_satisfied;
    std::vector<FamilyHit> hits;

    std::uint64_t det() const noexcept;
    FormKind form() const noexcept;
    int bar() const noexcept;  // two-row only; 0 otherwise
    /// All normal forms with these parameters (sorted, no duplicates).
    std::vector<IntMatrix> matrices() const;
    /// The canonical representative (form in the last row).
    IntMatrix canonical_matrix() const;
    OneRowForm one_row_form() const;  // throws InvalidForm for two-row solutions
    TwoRowForm two_row_form() const;  // throws InvalidForm for one-row solutions
};

/// Every role permutation of the exponents is tried; the result holds one
/// entry per distinct parameter tuple, sorted by parameters.
std::vector<SolutionFamily> solve_table(SolverTable t, std::size_t d,
                                        const std::vector<std::int64_t>& exponents);

std::vector<SolutionFamily> solve_vol2(std::size_t d, std::int64_t i);
std::vector<SolutionFamily> solve_vol3(std::size_t d, std::int64_t i, std::int64_t j);
std::vector<SolutionFamily> solve_vol4_one_row(std::size_t d, std::int64_t i, std::int64_t j,
                                               std::int64_t k);
std::vector<SolutionFamily> solve_vol4_two_row(std::size_t d, std::int64_t i, std::int64_t j,
                                               std::int64_t k, int bar);

}  // namespace deltavec
