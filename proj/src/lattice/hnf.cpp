#include "lattice/hnf.hpp"

#include "error.hpp"

namespace deltavec {

bool satisfies_hnf_invariants(const IntMatrix& m) {
    if (!m.is_lower_triangular()) return false;
    for (std::size_t r = 0; r < m.dim(); ++r) {
        if (m(r, r) <= 0) return false;
        for (std::size_t c = 0; c < r; ++c)
            if (m(r, c) < 0 || m(r, c) >= m(r, r)) return false;
    }
    return true;
}

HnfMatrix HnfMatrix::from_normal_form(IntMatrix m) {
    if (!satisfies_hnf_invariants(m))
        fail(ErrorCode::InvalidArgument, "matrix is not in Hermite normal form");
    auto id = IntMatrix::identity(m.dim());
    return HnfMatrix(std::move(m), std::move(id));
}

Integer HnfMatrix::diagonal_product() const {
    Integer p = 1;
    for (std::size_t i = 0; i < matrix_.dim(); ++i) p *= matrix_(i, i);
    return p;
}

// Column operations on m are row operations on m^T, so the work happens on
// the transpose: the textbook upper-triangular row HNF with pivots reducing
// the entries above them. Transposing back gives the lower-triangular form
// whose rows are reduced modulo their own diagonal entry.
HnfMatrix hermite_normal_form(const IntMatrix& m) {
    const std::size_t n = m.dim();
    IntMatrix b = m.transposed();
    IntMatrix t = IntMatrix::identity(n);  // invariant: t * m^T == b

    Integer g, s, u, a_div, b_div;
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = c + 1; r < n; ++r) {
            if (b(r, c) == 0) continue;
            if (b(c, c) == 0) {
                b.swap_rows(c, r);
                t.swap_rows(c, r);
                continue;
            }
            // [s u; -b/g a/g] has determinant 1 and sends (a, b) to (g, 0).
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), b(c, c).get_mpz_t(),
                       b(r, c).get_mpz_t());
            mpz_divexact(a_div.get_mpz_t(), b(c, c).get_mpz_t(), g.get_mpz_t());
            mpz_divexact(b_div.get_mpz_t(), b(r, c).get_mpz_t(), g.get_mpz_t());
            for (IntMatrix* mat : {&b, &t}) {
                for (std::size_t k = 0; k < n; ++k) {
                    Integer top = (*mat)(c, k);
                    Integer bottom = (*mat)(r, k);
                    (*mat)(c, k) = s * top + u * bottom;
                    (*mat)(r, k) = a_div * bottom - b_div * top;
                }
            }
        }
        if (b(c, c) == 0) fail(ErrorCode::SingularMatrix, "singular matrix");
        if (b(c, c) < 0) {
            for (std::size_t k = 0; k < n; ++k) {
                b(c, k) = -b(c, k);
                t(c, k) = -t(c, k);
            }
        }
        // Reduce the finished rows above the pivot into [0, pivot).
        for (std::size_t r = 0; r < c; ++r) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), b(r, c).get_mpz_t(), b(c, c).get_mpz_t());
            if (q == 0) continue;
            Integer neg = -q;
            b.add_row_multiple(r, c, neg);
            t.add_row_multiple(r, c, neg);
        }
    }
    // b = t m^T  =>  b^T = m t^T.
    return HnfMatrix(b.transposed(), t.transposed());
}

bool unimodularly_equivalent(const IntMatrix& a, const IntMatrix& b) {
    if (a.dim() != b.dim()) return false;
    return hermite_normal_form(a).matrix() == hermite_normal_form(b).matrix();
}

Simplex::Simplex(IntMatrix vertices) : vertices_(std::move(vertices)) {
    volume_ = abs(determinant(vertices_));
    if (volume_ == 0) fail(ErrorCode::SingularMatrix, "singular matrix");
}

}  // namespace deltavec
