#pragma once

#include "delta/delta_vector.hpp"
#include "lattice/hnf.hpp"

#include <cstdint>
#include <vector>

namespace deltavec {

/// (i_1, ..., i_d) with 1 <= i_k <= a_kk; one entry per congruence class of
/// barycentric coordinate vectors of a normal form.
using CongruenceIndex = std::vector<std::uint64_t>;

/// Smallest dilation n in which the class contributes an interior lattice
/// point: floor(lambda_1 + ... + lambda_d) + 1, with
///   lambda_d = i_d / a_dd,
///   lambda_k = (i_k - frac(sum_{h>k} a_hk lambda_h)) / a_kk.
/// Exact rational arithmetic. Throws IndexOutOfBounds.
std::uint64_t s_value(const HnfMatrix& a, const CongruenceIndex& idx);

struct SValueEntry {
    CongruenceIndex index;
    std::uint64_t s;
};

/// All congruence indices in lexicographic order with their s-values.
std::vector<SValueEntry> s_value_table(const HnfMatrix& a);

/// delta-polynomial = sum over congruence indices of t^{d+1-s}.
DeltaVector delta_from_hnf(const HnfMatrix& a);

/// Convenience: normal form first, then delta_from_hnf. Throws SingularMatrix.
DeltaVector delta_of_matrix(const IntMatrix& m);

}  // namespace deltavec
