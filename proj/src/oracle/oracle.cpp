#include "oracle/oracle.hpp"

#include "error.hpp"

#include <algorithm>

namespace deltavec::oracle {

namespace {

// Unimodular column operations bring the vertex matrix to lower-triangular
// shape T = V U. x -> x U is a bijection of Z^d mapping nP(V) onto nP(T), so
// counts are unchanged.
IntMatrix column_echelon(const IntMatrix& v) {
    const std::size_t d = v.dim();
    IntMatrix t = v;
    Integer g, s, u, a_div, b_div;
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = r + 1; c < d; ++c) {
            if (t(r, c) == 0) continue;
            if (t(r, r) == 0) {
                for (std::size_t k = 0; k < d; ++k) std::swap(t(k, r), t(k, c));
                continue;
            }
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), t(r, r).get_mpz_t(),
                       t(r, c).get_mpz_t());
            mpz_divexact(a_div.get_mpz_t(), t(r, r).get_mpz_t(), g.get_mpz_t());
            mpz_divexact(b_div.get_mpz_t(), t(r, c).get_mpz_t(), g.get_mpz_t());
            for (std::size_t k = 0; k < d; ++k) {
                Integer left = t(k, r);
                Integer right = t(k, c);
                t(k, r) = s * left + u * right;
                t(k, c) = a_div * right - b_div * left;
            }
        }
        if (t(r, r) == 0) fail(ErrorCode::SingularMatrix, "singular matrix");
    }
    return t;
}

Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Depth-first scan of candidate points x of n_max * P(T), last coordinate
// first. With mu = vol * x T^{-1} (integral for integral x), membership in
// nP is mu >= 0 and sum(mu) <= n * vol; interior needs mu >= 1 and
// sum(mu) < n * vol. Each coordinate is only tried inside the interval that
// keeps the partial solution feasible.
class Scanner {
public:
    Scanner(const IntMatrix& t, std::uint64_t n_max, std::uint64_t budget)
        : t_(t), d_(t.dim()), n_max_(n_max), budget_(budget), acc_(t.dim()) {
        vol_ = 1;
        for (std::size_t c = 0; c < d_; ++c) vol_ *= t_(c, c);
        vol_ = abs(vol_);
        limit_ = vol_ * to_integer(n_max);
        closed_hist_.assign(n_max + 1, 0);
        interior_hist_.assign(n_max + 2, 0);
    }

    DilationCounts run() {
        visit(d_ - 1, 0, true);
        DilationCounts out;
        out.closed.assign(n_max_ + 1, 0);
        out.interior.assign(n_max_ + 1, 0);
        std::uint64_t closed_total = 0, interior_total = 0;
        for (std::uint64_t n = 0; n <= n_max_; ++n) {
            closed_total += closed_hist_[n];
            interior_total += interior_hist_[n];
            out.closed[n] = closed_total;
            out.interior[n] = interior_total;
        }
        out.candidates = candidates_;
        return out;
    }

private:
    // acc_[k] holds sum over fixed rows r of mu_r * T(r, k), for k below the
    // current coordinate.
    void visit(std::size_t c, const Integer& partial, bool positive) {
        const Integer& diag = t_(c, c);
        const Integer room = limit_ - partial;
        const Integer& base = acc_[c];
        Integer lo, hi;
        if (diag > 0) {
            lo = ceil_div(base, vol_);
            hi = floor_div(base + diag * room, vol_);
        } else {
            lo = ceil_div(base + diag * room, vol_);
            hi = floor_div(base, vol_);
        }
        Integer num, mu, total;
        for (Integer x = lo; x <= hi; ++x) {
            if (++candidates_ > budget_)
                fail(ErrorCode::BudgetExceeded,
                     "lattice-point scan exceeded the budget of " + std::to_string(budget_) +
                         " candidate points");
            num = vol_ * x - base;
            if (!mpz_divisible_p(num.get_mpz_t(), diag.get_mpz_t()))
                fail(ErrorCode::Internal, "non-integral barycentric numerator");
            mpz_divexact(mu.get_mpz_t(), num.get_mpz_t(), diag.get_mpz_t());
            if (mu < 0 || mu > room) continue;
            total = partial + mu;
            const bool still_positive = positive && mu > 0;
            if (c == 0) {
                record(total, still_positive);
                continue;
            }
            for (std::size_t k = 0; k < c; ++k)
                if (t_(c, k) != 0) acc_[k] += mu * t_(c, k);
            visit(c - 1, total, still_positive);
            for (std::size_t k = 0; k < c; ++k)
                if (t_(c, k) != 0) acc_[k] -= mu * t_(c, k);
        }
    }

    void record(const Integer& total, bool positive) {
        // closed from n = ceil(total / vol); interior from n = floor(total / vol) + 1
        const Integer first_closed = ceil_div(total, vol_);
        closed_hist_[to_u64(first_closed)] += 1;
        if (positive) {
            const auto first_interior = to_u64(floor_div(total, vol_)) + 1;
            if (first_interior <= n_max_) interior_hist_[first_interior] += 1;
        }
    }

    const IntMatrix& t_;
    std::size_t d_;
    std::uint64_t n_max_;
    std::uint64_t budget_;
    Integer vol_;
    Integer limit_;
    std::vector<Integer> acc_;
    std::vector<std::uint64_t> closed_hist_;
    std::vector<std::uint64_t> interior_hist_;
    std::uint64_t candidates_ = 0;
};

Integer binomial(std::uint64_t n, std::uint64_t k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

}  // namespace

DilationCounts count_dilations(const Simplex& s, std::uint64_t n_max, const Options& opts) {
    const IntMatrix t = column_echelon(s.vertices());
    Scanner scanner(t, n_max, opts.budget);
    return scanner.run();
}

std::uint64_t count_points(const Simplex& s, std::uint64_t n, bool interior, const Options& opts) {
    auto counts = count_dilations(s, n, opts);
    return interior ? counts.interior[n] : counts.closed[n];
}

DeltaVector delta_bruteforce(const Simplex& s, const Options& opts) {
    const std::size_t d = s.dim();
    auto counts = count_dilations(s, d, opts);
    std::vector<std::uint64_t> coeffs(d + 1);
    for (std::size_t j = 0; j <= d; ++j) {
        Integer acc = 0;
        for (std::size_t n = 0; n <= j; ++n) {
            Integer term = binomial(d + 1, j - n) * to_integer(counts.closed[n]);
            if ((j - n) % 2 == 0)
                acc += term;
            else
                acc -= term;
        }
        if (!fits_u64(acc))
            fail(ErrorCode::Internal, "negative delta coefficient from lattice counts");
        coeffs[j] = to_u64(acc);
    }
    return DeltaVector(std::move(coeffs));
}

NewtonInterpolant::NewtonInterpolant(const std::vector<Integer>& values) {
    std::vector<Integer> row = values;
    while (!row.empty()) {
        differences_.push_back(row.front());
        for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
        row.pop_back();
    }
}

Integer NewtonInterpolant::operator()(const Integer& x) const {
    Integer result = 0;
    Integer choose = 1;  // C(x, k)
    for (std::size_t k = 0; k < differences_.size(); ++k) {
        result += differences_[k] * choose;
        choose *= x - to_integer(static_cast<std::uint64_t>(k));
        mpz_divexact_ui(choose.get_mpz_t(), choose.get_mpz_t(), k + 1);
    }
    return result;
}

bool check_reciprocity(const Simplex& s, std::uint64_t n_max, const Options& opts) {
    if (n_max < 1) fail(ErrorCode::InvalidArgument, "n_max must be at least 1");
    const std::size_t d = s.dim();
    auto counts = count_dilations(s, std::max<std::uint64_t>(n_max, d), opts);
    std::vector<Integer> samples;
    for (std::size_t n = 0; n <= d; ++n) samples.push_back(to_integer(counts.closed[n]));
    NewtonInterpolant ehrhart(samples);
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        Integer predicted = ehrhart(-to_integer(n));
        if (d % 2 == 1) predicted = -predicted;
        if (predicted != to_integer(counts.interior[n])) return false;
    }
    return true;
}

}  // namespace deltavec::oracle
