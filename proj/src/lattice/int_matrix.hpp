#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace deltavec {

using Integer = mpz_class;
using Rational = mpq_class;

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "LP64 platform expected");

inline Integer to_integer(std::uint64_t v) { return Integer(static_cast<unsigned long>(v)); }
inline Integer to_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }

/// Value of a nonnegative Integer known to fit in 64 bits.
inline std::uint64_t to_u64(const Integer& v) { return v.get_ui(); }
inline bool fits_u64(const Integer& v) { return v >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64; }
inline bool fits_i64(const Integer& v) { return v.fits_slong_p(); }

/// Square integer matrix with arbitrary-precision entries, stored row-major.
class IntMatrix {
public:
    /// Zero matrix of the given dimension (dim >= 1).
    explicit IntMatrix(std::size_t dim);
    IntMatrix(std::size_t dim, std::vector<Integer> entries);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }

    Integer& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
    const Integer& operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }

    const std::vector<Integer>& entries() const noexcept { return entries_; }

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& rhs) const;

    bool is_lower_triangular() const;

    void swap_rows(std::size_t a, std::size_t b);
    /// row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.dim_ == b.dim_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

private:
    std::size_t dim_;
    std::vector<Integer> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

/// Order used for every deterministic listing of normal forms: diagonal
/// sequence first (lexicographic), then the strictly-lower entries read row
/// by row. Falls back to full row-major comparison for non-triangular input.
bool enumeration_order_less(const IntMatrix& a, const IntMatrix& b);

// Text and JSON formats.
//
// Text: first line "d", then d lines of d whitespace-separated integers.
// JSON: {"dim": d, "rows": [[...], ...]}; entries may be JSON integers or
// decimal strings (needed for values outside the 64-bit range).

IntMatrix parse_matrix_text(std::string_view text);
IntMatrix parse_matrix_json(std::string_view text);
/// Dispatches on the first non-blank character: '{' selects JSON.
IntMatrix parse_matrix(std::string_view text);

std::string format_matrix_text(const IntMatrix& m);
std::string format_matrix_json(const IntMatrix& m);

}  // namespace deltavec
