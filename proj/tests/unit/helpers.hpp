#pragma once

#include "lattice/hnf.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace testing {

using deltavec::IntMatrix;

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t d, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    IntMatrix m(d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) m(r, c) = dist(rng);
    return m;
}

inline IntMatrix random_nonsingular(std::mt19937_64& rng, std::size_t d, long lo, long hi) {
    while (true) {
        auto m = random_matrix(rng, d, lo, hi);
        if (deltavec::determinant(m) != 0) return m;
    }
}

/// Product of `steps` random elementary column operations (swaps, sign flips,
/// adding a multiple of one column to another).
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t d, int steps) {
    IntMatrix u = IntMatrix::identity(d);
    std::uniform_int_distribution<std::size_t> col(0, d - 1);
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<long> factor(-3, 3);
    for (int s = 0; s < steps; ++s) {
        const auto a = col(rng), b = col(rng);
        const int k = kind(rng);
        const long f = factor(rng);
        for (std::size_t r = 0; r < d; ++r) {
            if (k == 0) {
                std::swap(u(r, a), u(r, b));
            } else if (k == 1) {
                u(r, a) = -u(r, a);
            } else if (a != b) {
                u(r, a) += f * u(r, b);
            }
        }
    }
    return u;
}

/// Calls f on every vector of `parts` nonnegative integers summing to `total`.
inline void for_each_composition(std::size_t parts, std::uint64_t total,
                                 const std::function<void(const std::vector<std::uint64_t>&)>& f) {
    std::vector<std::uint64_t> v(parts, 0);
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t pos, std::uint64_t left) {
        if (pos + 1 == parts) {
            v[pos] = left;
            f(v);
            return;
        }
        for (std::uint64_t x = 0; x <= left; ++x) {
            v[pos] = x;
            rec(pos + 1, left - x);
        }
    };
    if (parts == 0) {
        if (total == 0) f(v);
        return;
    }
    rec(0, total);
}

/// Every delta-vector target of dimension d and mass D.
inline std::vector<std::vector<std::uint64_t>> targets(std::size_t d, std::uint64_t D) {
    std::vector<std::vector<std::uint64_t>> out;
    for_each_composition(d, D - 1, [&](const std::vector<std::uint64_t>& rest) {
        std::vector<std::uint64_t> t{1};
        t.insert(t.end(), rest.begin(), rest.end());
        out.push_back(t);
    });
    return out;
}

}  // namespace testing
