#include "classify/enumerate.hpp"

#include "error.hpp"

#include <algorithm>

namespace deltavec {

FormFilter parse_form_filter(std::string_view name) {
    if (name == "all") return FormFilter::All;
    if (name == "one-row") return FormFilter::OneRow;
    if (name == "two-row") return FormFilter::TwoRow;
    fail(ErrorCode::InvalidArgument,
         "unknown form filter '" + std::string(name) + "' (expected all, one-row or two-row)");
}

std::string_view form_filter_name(FormFilter f) {
    switch (f) {
        case FormFilter::OneRow: return "one-row";
        case FormFilter::TwoRow: return "two-row";
        case FormFilter::All: break;
    }
    return "all";
}

namespace {

bool count_allowed(std::size_t nontrivial, FormFilter f) {
    switch (f) {
        case FormFilter::OneRow: return nontrivial == 1;
        case FormFilter::TwoRow: return nontrivial == 2;
        case FormFilter::All: break;
    }
    return true;
}

std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t t = 1; t <= n / t; ++t) {
        if (n % t != 0) continue;
        small.push_back(t);
        if (t != n / t) large.push_back(n / t);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

bool matches_filter(const IntMatrix& m, FormFilter f) {
    std::size_t nontrivial = 0;
    for (std::size_t i = 0; i < m.dim(); ++i)
        if (m(i, i) > 1) ++nontrivial;
    return count_allowed(nontrivial, f);
}

HnfEnumerator::HnfEnumerator(const HnfEnumSpec& spec) : spec_(spec) {
    if (spec.dim < 1) fail(ErrorCode::InvalidArgument, "dimension must be at least 1");
    if (spec.det < 1) fail(ErrorCode::InvalidArgument, "determinant must be at least 1");
    divisors_ = divisors_of(spec.det);
    // lexicographically first factorization: 1, ..., 1, D
    diag_.assign(spec.dim, 1);
    diag_.back() = spec.det;
}

bool HnfEnumerator::diagonal_allowed() const {
    const auto nontrivial = static_cast<std::size_t>(
        std::count_if(diag_.begin(), diag_.end(), [](std::uint64_t a) { return a > 1; }));
    return count_allowed(nontrivial, spec_.filter);
}

bool HnfEnumerator::advance_diagonal() {
    const std::size_t d = diag_.size();
    if (d == 1) return false;
    // remaining[k] = D / (diag_[0] * ... * diag_[k-1])
    std::vector<std::uint64_t> remaining(d);
    remaining[0] = spec_.det;
    for (std::size_t k = 1; k < d; ++k) remaining[k] = remaining[k - 1] / diag_[k - 1];
    for (std::size_t k = d - 1; k-- > 0;) {
        auto it = std::upper_bound(divisors_.begin(), divisors_.end(), diag_[k]);
        for (; it != divisors_.end() && *it <= remaining[k]; ++it) {
            if (remaining[k] % *it != 0) continue;
            diag_[k] = *it;
            std::fill(diag_.begin() + static_cast<std::ptrdiff_t>(k) + 1, diag_.end() - 1, 1);
            diag_.back() = remaining[k] / *it;
            return true;
        }
    }
    return false;
}

bool HnfEnumerator::advance_entries() {
    for (std::size_t s = slots_.size(); s-- > 0;) {
        if (values_[s] + 1 < diag_[slots_[s].first]) {
            ++values_[s];
            return true;
        }
        values_[s] = 0;
    }
    return false;
}

IntMatrix HnfEnumerator::current() const {
    const std::size_t d = diag_.size();
    IntMatrix m(d);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = to_integer(diag_[i]);
    for (std::size_t s = 0; s < slots_.size(); ++s)
        m(slots_[s].first, slots_[s].second) = to_integer(values_[s]);
    return m;
}

std::optional<IntMatrix> HnfEnumerator::next() {
    if (done_) return std::nullopt;
    bool fresh_diagonal = !started_;
    if (started_ && !advance_entries()) {
        if (!advance_diagonal()) {
            done_ = true;
            return std::nullopt;
        }
        fresh_diagonal = true;
    }
    started_ = true;
    if (fresh_diagonal) {
        while (!diagonal_allowed()) {
            if (!advance_diagonal()) {
                done_ = true;
                return std::nullopt;
            }
        }
        slots_.clear();
        for (std::size_t i = 0; i < diag_.size(); ++i)
            if (diag_[i] > 1)
                for (std::size_t j = 0; j < i; ++j) slots_.emplace_back(i, j);
        values_.assign(slots_.size(), 0);
    }
    return current();
}

std::vector<IntMatrix> enumerate_hnf(const HnfEnumSpec& spec) {
    std::vector<IntMatrix> out;
    HnfEnumerator e(spec);
    while (auto m = e.next()) out.push_back(std::move(*m));
    return out;
}

}  // namespace deltavec
