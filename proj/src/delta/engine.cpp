#include "delta/engine.hpp"

#include "error.hpp"

namespace deltavec {

namespace {

// Congruence classes are enumerated one by one, so the diagonal must fit a
// machine word; anything this large could never be iterated anyway.
constexpr std::uint64_t kMaxClasses = std::uint64_t{1} << 40;

std::vector<std::uint64_t> diagonal_bounds(const HnfMatrix& a) {
    Integer product = a.diagonal_product();
    if (product > to_integer(kMaxClasses))
        fail(ErrorCode::InvalidArgument,
             "determinant " + product.get_str() + " is too large to enumerate congruence classes");
    std::vector<std::uint64_t> bounds(a.dim());
    for (std::size_t k = 0; k < a.dim(); ++k) bounds[k] = a.matrix()(k, k).get_ui();
    return bounds;
}

Rational fractional_part(const Rational& q) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return q - fl;
}

std::uint64_t s_value_unchecked(const IntMatrix& a, const CongruenceIndex& idx,
                                std::vector<Rational>& lambda) {
    const std::size_t d = a.dim();
    Rational total = 0;
    for (std::size_t step = 0; step < d; ++step) {
        const std::size_t k = d - 1 - step;
        Rational acc = 0;
        for (std::size_t h = k + 1; h < d; ++h)
            if (a(h, k) != 0) acc += a(h, k) * lambda[h];
        lambda[k] = (Rational(to_integer(idx[k])) - fractional_part(acc)) / a(k, k);
        lambda[k].canonicalize();
        total += lambda[k];
    }
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), total.get_num_mpz_t(), total.get_den_mpz_t());
    return fl.get_ui() + 1;
}

}  // namespace

std::uint64_t s_value(const HnfMatrix& a, const CongruenceIndex& idx) {
    if (idx.size() != a.dim())
        fail(ErrorCode::IndexOutOfBounds, "congruence index has the wrong length");
    for (std::size_t k = 0; k < idx.size(); ++k)
        if (idx[k] < 1 || to_integer(idx[k]) > a.matrix()(k, k))
            fail(ErrorCode::IndexOutOfBounds,
                 "congruence index component " + std::to_string(k + 1) + " out of range");
    std::vector<Rational> lambda(a.dim());
    return s_value_unchecked(a.matrix(), idx, lambda);
}

namespace {

// Lexicographic odometer over 1 <= idx[k] <= bounds[k], first component slowest.
template <class Visit>
void for_each_index(const std::vector<std::uint64_t>& bounds, Visit&& visit) {
    CongruenceIndex idx(bounds.size(), 1);
    while (true) {
        visit(idx);
        std::size_t k = idx.size();
        while (k > 0) {
            --k;
            if (idx[k] < bounds[k]) {
                ++idx[k];
                break;
            }
            if (k == 0) return;
            idx[k] = 1;
        }
    }
}

}  // namespace

std::vector<SValueEntry> s_value_table(const HnfMatrix& a) {
    auto bounds = diagonal_bounds(a);
    std::vector<SValueEntry> out;
    std::vector<Rational> lambda(a.dim());
    for_each_index(bounds, [&](const CongruenceIndex& idx) {
        out.push_back({idx, s_value_unchecked(a.matrix(), idx, lambda)});
    });
    return out;
}

DeltaVector delta_from_hnf(const HnfMatrix& a) {
    const std::size_t d = a.dim();
    auto bounds = diagonal_bounds(a);
    std::vector<std::uint64_t> coeffs(d + 1, 0);
    std::vector<Rational> lambda(d);
    for_each_index(bounds, [&](const CongruenceIndex& idx) {
        const auto s = s_value_unchecked(a.matrix(), idx, lambda);
        if (s < 1 || s > d + 1)
            fail(ErrorCode::Internal, "s-value " + std::to_string(s) + " outside [1, d+1]");
        ++coeffs[d + 1 - s];
    });
    if (coeffs[0] != 1)
        fail(ErrorCode::Internal, "delta_0 = " + std::to_string(coeffs[0]) + " instead of 1");
    return DeltaVector(std::move(coeffs));
}

DeltaVector delta_of_matrix(const IntMatrix& m) {
    return delta_from_hnf(hermite_normal_form(m));
}

}  // namespace deltavec
