#include "delta/forms.hpp"

#include "error.hpp"

#include <algorithm>
#include <numeric>

namespace deltavec {

namespace {

constexpr std::uint64_t kMaxDet = std::uint64_t{1} << 40;

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
    std::int64_t q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

DeltaVector from_exponents(std::size_t dim, const std::vector<std::int64_t>& exponents) {
    std::vector<std::uint64_t> coeffs(dim + 1, 0);
    for (auto e : exponents) {
        if (e < 0 || static_cast<std::uint64_t>(e) > dim)
            fail(ErrorCode::Internal, "closed-form exponent " + std::to_string(e) + " out of range");
        ++coeffs[static_cast<std::size_t>(e)];
    }
    return DeltaVector(std::move(coeffs));
}

void sort_unique(std::vector<IntMatrix>& ms) {
    std::sort(ms.begin(), ms.end(), enumeration_order_less);
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
}

}  // namespace

std::uint64_t OneRowForm::support() const noexcept {
    return std::accumulate(multiplicities.begin(), multiplicities.end(), std::uint64_t{0});
}

void OneRowForm::validate() const {
    if (dim < 1) fail(ErrorCode::InvalidForm, "dimension must be at least 1");
    if (det < 2 || det > kMaxDet) fail(ErrorCode::InvalidForm, "one-row form needs 2 <= D <= 2^40");
    if (multiplicities.size() != det - 1)
        fail(ErrorCode::InvalidForm, "expected D-1 = " + std::to_string(det - 1) +
                                         " multiplicities, got " +
                                         std::to_string(multiplicities.size()));
    if (row_position > dim) fail(ErrorCode::InvalidForm, "row position exceeds the dimension");
    const auto total = support();
    if (total > dim - 1)
        fail(ErrorCode::InvalidForm, "sum of multiplicities " + std::to_string(total) +
                                         " exceeds d-1 = " + std::to_string(dim - 1));
    if (total > effective_row() - 1)
        fail(ErrorCode::InvalidForm, "row " + std::to_string(effective_row()) + " has only " +
                                         std::to_string(effective_row() - 1) +
                                         " entries left of the diagonal");
}

namespace {

std::vector<std::uint64_t> one_row_values(const OneRowForm& f, std::size_t slots) {
    std::vector<std::uint64_t> values;
    values.reserve(slots);
    for (std::size_t j = 0; j < f.multiplicities.size(); ++j)
        values.insert(values.end(), f.multiplicities[j], j + 1);
    values.resize(slots, 0);
    return values;
}

IntMatrix one_row_matrix(std::size_t dim, std::uint64_t det, std::size_t row,
                         const std::vector<std::uint64_t>& values) {
    IntMatrix m = IntMatrix::identity(dim);
    m(row, row) = to_integer(det);
    for (std::size_t c = 0; c < values.size(); ++c) m(row, c) = to_integer(values[c]);
    return m;
}

}  // namespace

IntMatrix OneRowForm::canonical_matrix() const {
    validate();
    const std::size_t row = effective_row() - 1;
    return one_row_matrix(dim, det, row, one_row_values(*this, row));
}

std::vector<IntMatrix> OneRowForm::all_matrices() const {
    validate();
    std::vector<IntMatrix> out;
    const std::size_t first_row = static_cast<std::size_t>(support());
    for (std::size_t row = first_row; row < dim; ++row) {
        auto values = one_row_values(*this, row);
        std::sort(values.begin(), values.end());
        do {
            out.push_back(one_row_matrix(dim, det, row, values));
        } while (std::next_permutation(values.begin(), values.end()));
    }
    sort_unique(out);
    return out;
}

TwoRowForm TwoRowForm::from_params(std::size_t dim, int bar, std::uint64_t d1, std::uint64_t d1p,
                                   std::uint64_t d1pp) {
    if ((d1 + d1p + d1pp) % 2 != 0)
        fail(ErrorCode::InvalidForm, "d_1 + d_1' + d_1'' must be even");
    if (d1pp > d1 + d1p || d1 > d1p + d1pp || d1p > d1 + d1pp)
        fail(ErrorCode::InvalidForm, "d_1, d_1', d_1'' violate the triangle inequalities");
    const std::uint64_t overlap = (d1 + d1p - d1pp) / 2;
    TwoRowForm f;
    f.dim = dim;
    f.bar = bar;
    f.first_row_ones = d1;
    f.second_row_ones = d1p;
    f.first_only = d1 - overlap;
    f.second_only = d1p - overlap;
    f.validate();
    return f;
}

void TwoRowForm::validate() const {
    if (dim < 2) fail(ErrorCode::InvalidForm, "two-row form needs dimension >= 2");
    if (bar != 0 && bar != 1) fail(ErrorCode::InvalidForm, "bar entry must be 0 or 1");
    if (first_only > first_row_ones || second_only > second_row_ones)
        fail(ErrorCode::InvalidForm, "e_1 <= d_1 and e_1' <= d_1' required");
    if (first_row_ones - first_only != second_row_ones - second_only)
        fail(ErrorCode::InvalidForm, "d_1 - e_1 and d_1' - e_1' must agree (shared columns)");
    if (overlap() + first_only + second_only > dim - 2)
        fail(ErrorCode::InvalidForm, "ones do not fit left of the two diagonal 2's");
}

namespace {

// Column patterns for the two special rows: bit 1 = row p, bit 0 = row q.
constexpr int kNone = 0, kSecond = 1, kFirst = 2, kBoth = 3;

IntMatrix two_row_matrix(std::size_t dim, int bar, std::size_t p, std::size_t q,
                         const std::vector<int>& before, const std::vector<int>& between) {
    IntMatrix m = IntMatrix::identity(dim);
    m(p, p) = 2;
    m(q, q) = 2;
    m(q, p) = bar;
    for (std::size_t c = 0; c < before.size(); ++c) {
        if (before[c] & kFirst) m(p, c) = 1;
        if (before[c] & kSecond) m(q, c) = 1;
    }
    for (std::size_t c = 0; c < between.size(); ++c)
        if (between[c] & kSecond) m(q, p + 1 + c) = 1;
    return m;
}

}  // namespace

IntMatrix TwoRowForm::canonical_matrix() const {
    validate();
    const std::size_t p = overlap() + first_only;
    const std::size_t q = dim - 1;
    std::vector<int> before(p, kNone), between(q - p - 1, kNone);
    std::fill_n(before.begin(), overlap(), kBoth);
    std::fill_n(before.begin() + static_cast<std::ptrdiff_t>(overlap()), first_only, kFirst);
    std::fill_n(between.begin(), second_only, kSecond);
    return two_row_matrix(dim, bar, p, q, before, between);
}

std::vector<IntMatrix> TwoRowForm::all_matrices() const {
    validate();
    std::vector<IntMatrix> out;
    const std::size_t both = overlap();
    for (std::size_t p = 0; p + 1 < dim; ++p) {
        for (std::size_t q = p + 1; q < dim; ++q) {
            const std::size_t gap = q - p - 1;
            // split the second-only ones between the two column ranges
            for (std::size_t early = 0; early <= second_only; ++early) {
                const std::size_t late = second_only - early;
                if (both + first_only + early > p || late > gap) continue;
                std::vector<int> before;
                before.insert(before.end(), p - both - first_only - early, kNone);
                before.insert(before.end(), early, kSecond);
                before.insert(before.end(), first_only, kFirst);
                before.insert(before.end(), both, kBoth);
                std::vector<int> between(gap - late, kNone);
                between.insert(between.end(), late, kSecond);
                do {
                    std::vector<int> mid = between;
                    do {
                        out.push_back(two_row_matrix(dim, bar, p, q, before, mid));
                    } while (std::next_permutation(mid.begin(), mid.end()));
                } while (std::next_permutation(before.begin(), before.end()));
            }
        }
    }
    sort_unique(out);
    return out;
}

DeltaVector delta_one_row(const OneRowForm& f) {
    f.validate();
    const auto D = static_cast<std::int64_t>(f.det);
    const auto d = static_cast<std::int64_t>(f.dim);
    std::vector<std::int64_t> exponents;
    exponents.reserve(f.det);
    for (std::int64_t i = 1; i <= D; ++i) {
        // i/D - sum_j frac(ij/D) d_j  ==  (i - sum_j ((ij) mod D) d_j) / D
        __int128 num = i;
        for (std::int64_t j = 1; j < D; ++j) {
            const auto dj = f.multiplicities[static_cast<std::size_t>(j - 1)];
            if (dj == 0) continue;
            num -= static_cast<__int128>((static_cast<__int128>(i) * j) % D) * dj;
        }
        __int128 q = num / D;
        if (num % D != 0 && num < 0) --q;
        const std::int64_t s = static_cast<std::int64_t>(q) + d;
        exponents.push_back(d + 1 - s);
    }
    return from_exponents(f.dim, exponents);
}

DeltaVector delta_all_dminus1(std::uint64_t det, std::size_t dim) {
    if (det < 2 || det > kMaxDet) fail(ErrorCode::InvalidArgument, "need 2 <= D <= 2^40");
    if (dim < 1) fail(ErrorCode::InvalidArgument, "dimension must be at least 1");
    const auto D = static_cast<std::int64_t>(det);
    const auto d = static_cast<std::int64_t>(dim);
    std::vector<std::int64_t> exponents;
    exponents.reserve(det);
    for (std::int64_t i = 1; i <= D; ++i) {
        const auto s = static_cast<std::int64_t>((static_cast<__int128>(i) * d) / D) + 1;
        exponents.push_back(d + 1 - s);
    }
    return from_exponents(dim, exponents);
}

DeltaVector delta_two_row(const TwoRowForm& f) {
    f.validate();
    const auto d1 = static_cast<std::int64_t>(f.first_row_ones);
    const auto d1p = static_cast<std::int64_t>(f.second_row_ones);
    const auto d1pp = static_cast<std::int64_t>(f.disjoint_ones());
    std::vector<std::int64_t> exponents{0};
    if (f.bar == 0) {
        exponents.push_back(floor_div(d1 + 2, 2));
        exponents.push_back(floor_div(d1p + 2, 2));
        exponents.push_back(floor_div(d1pp + 3, 2));
    } else {
        exponents.push_back(1 - floor_div(1 - d1 - 2 * d1pp, 4));
        exponents.push_back(1 - floor_div(1 - d1, 2));
        exponents.push_back(2 - floor_div(3 - d1 - 2 * d1p, 4));
    }
    return from_exponents(f.dim, exponents);
}

OneRowSymmetry one_row_symmetry(const OneRowForm& f) {
    f.validate();
    OneRowSymmetry r;
    std::int64_t weighted = 0;
    for (std::size_t j = 0; j < f.multiplicities.size(); ++j)
        weighted += static_cast<std::int64_t>((j + 1) * f.multiplicities[j]);
    r.weighted_sum_minus_one = weighted - 1;
    r.weighted_gcd = std::gcd(static_cast<std::uint64_t>(std::abs(r.weighted_sum_minus_one)), f.det);
    r.coprime_condition = r.weighted_gcd == 1;
    r.unit_support_condition = true;
    for (std::size_t j = 0; j < f.multiplicities.size(); ++j)
        if (std::gcd(static_cast<std::uint64_t>(j + 1), f.det) > 1 && f.multiplicities[j] != 0)
            r.unit_support_condition = false;
    r.full_support_condition = f.support() == f.dim - 1;
    return r;
}

bool one_row_symmetry_conditions(const OneRowForm& f) { return one_row_symmetry(f).all(); }

}  // namespace deltavec
