#pragma once

#include "delta/delta_vector.hpp"
#include "lattice/hnf.hpp"

#include <cstdint>
#include <vector>

namespace deltavec {

/// Normal form whose diagonal is all ones except a single entry D in row k,
/// with the entries a_1..a_{k-1} to its left taken from [0, D). Only the
/// multiplicities d_j = #{l : a_l = j}, j = 1..D-1, affect the delta-vector.
struct OneRowForm {
    std::size_t dim = 1;
    std::uint64_t det = 2;
    /// 1-based row holding D; 0 means the canonical choice (the last row).
    std::size_t row_position = 0;
    /// d_1, ..., d_{D-1}
    std::vector<std::uint64_t> multiplicities;

    std::size_t effective_row() const noexcept { return row_position == 0 ? dim : row_position; }
    std::uint64_t support() const noexcept;  // sum of the multiplicities

    /// Throws InvalidForm on D < 2, a wrong number of multiplicities,
    /// support > dim - 1, or support > row - 1.
    void validate() const;

    /// Entries placed leftmost-first in ascending value order, zeros last.
    IntMatrix canonical_matrix() const;
    /// Every normal form with these multiplicities: each admissible row
    /// position and each arrangement of the entries. Sorted, no duplicates.
    std::vector<IntMatrix> all_matrices() const;
};

/// Determinant-4 normal form with two diagonal 2's, in rows p < q. Row p has
/// d_1 ones left of its diagonal; row q has d_1' ones off its diagonal and
/// column p ("bar" entry) excluded; e_1 (resp. e_1') of those ones sit in
/// columns where the other row has a 0; d_1'' = e_1 + e_1'.
struct TwoRowForm {
    std::size_t dim = 2;
    std::uint64_t first_row_ones = 0;   // d_1
    std::uint64_t second_row_ones = 0;  // d_1'
    int bar = 0;                        // entry of row q in column p
    std::uint64_t first_only = 0;       // e_1
    std::uint64_t second_only = 0;      // e_1'

    std::uint64_t disjoint_ones() const noexcept { return first_only + second_only; }  // d_1''
    std::uint64_t overlap() const noexcept { return first_row_ones - first_only; }

    /// From (d_1, d_1', d_1''): requires an even sum and the triangle
    /// inequalities so the overlap is well defined. Throws InvalidForm.
    static TwoRowForm from_params(std::size_t dim, int bar, std::uint64_t d1, std::uint64_t d1p,
                                  std::uint64_t d1pp);

    /// Throws InvalidForm when the counts cannot be placed in a dim x dim form.
    void validate() const;

    /// q = last row, p right after the shared and first-only columns; the
    /// second-only ones sit between the two rows.
    IntMatrix canonical_matrix() const;
    std::vector<IntMatrix> all_matrices() const;
};

/// exponent_i = d + 1 - s_i with
/// s_i = floor(i/D - sum_j frac(i j / D) d_j) + d, for i = 1..D.
DeltaVector delta_one_row(const OneRowForm& f);

/// The one-row form with every entry equal to D - 1: s_i = floor(i d / D) + 1.
DeltaVector delta_all_dminus1(std::uint64_t det, std::size_t dim);

/// Closed-form exponents of the two determinant-4 families:
///   bar = 0: floor((d_1+2)/2), floor((d_1'+2)/2), floor((d_1''+3)/2)
///   bar = 1: 1 - floor((1-d_1-2d_1'')/4), 1 - floor((1-d_1)/2), 2 - floor((3-d_1-2d_1')/4)
DeltaVector delta_two_row(const TwoRowForm& f);

/// The three conditions characterizing s_i + s_{D-i} = d + 1 for one-row forms.
struct OneRowSymmetry {
    std::int64_t weighted_sum_minus_one = 0;  // sum_j j d_j - 1
    std::uint64_t weighted_gcd = 0;           // gcd(sum_j j d_j - 1, D)
    bool coprime_condition = false;           // weighted_gcd == 1
    bool unit_support_condition = false;      // d_j == 0 whenever gcd(j, D) > 1
    bool full_support_condition = false;      // sum_j d_j == d - 1

    bool all() const noexcept {
        return coprime_condition && unit_support_condition && full_support_condition;
    }
};

OneRowSymmetry one_row_symmetry(const OneRowForm& f);
bool one_row_symmetry_conditions(const OneRowForm& f);

}  // namespace deltavec
