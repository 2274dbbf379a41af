#pragma once

// Brute-force lattice-point counting. Nothing in here touches the normal form
// or congruence-class machinery: the only shared code is the matrix type and
// the Bareiss determinant used to reject singular input.

#include "delta/delta_vector.hpp"
#include "lattice/hnf.hpp"

#include <cstdint>
#include <vector>

namespace deltavec::oracle {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct Options {
    /// Upper bound on candidate lattice points examined by one scan.
    /// Exceeding it throws BudgetExceeded; the scan never samples.
    std::uint64_t budget = kDefaultBudget;
};

struct DilationCounts {
    std::vector<std::uint64_t> closed;    // closed[n] = |nP ∩ Z^d|, n = 0..n_max
    std::vector<std::uint64_t> interior;  // interior[n] = |n(P - ∂P) ∩ Z^d|
    std::uint64_t candidates = 0;         // candidate points examined
};

/// Counts for every dilation 0..n_max from a single scan of n_max * P.
DilationCounts count_dilations(const Simplex& s, std::uint64_t n_max, const Options& opts = {});

std::uint64_t count_points(const Simplex& s, std::uint64_t n, bool interior,
                           const Options& opts = {});

/// delta_j = sum_{n=0..j} (-1)^{j-n} C(d+1, j-n) i(P, n), j = 0..d.
DeltaVector delta_bruteforce(const Simplex& s, const Options& opts = {});

/// Fits i(P, .) through n = 0..d and checks i*(P, n) = (-1)^d i(P, -n)
/// against direct interior counts for n = 1..n_max.
bool check_reciprocity(const Simplex& s, std::uint64_t n_max, const Options& opts = {});

/// Degree-d polynomial through the values at 0..d, evaluated exactly at any
/// integer via Newton's forward-difference form.
class NewtonInterpolant {
public:
    explicit NewtonInterpolant(const std::vector<Integer>& values);
    Integer operator()(const Integer& x) const;

private:
    std::vector<Integer> differences_;
};

}  // namespace deltavec::oracle
