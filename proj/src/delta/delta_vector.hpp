#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace deltavec {

/// (delta_0, ..., delta_d) with delta_0 = 1 and nonnegative entries.
class DeltaVector {
public:
    /// Throws InvalidArgument unless there are at least two entries and coeffs[0] == 1.
    explicit DeltaVector(std::vector<std::uint64_t> coeffs);

    /// "1,0,3,2,0" (whitespace around entries tolerated). Throws Parse.
    static DeltaVector parse(std::string_view text);

    std::size_t dim() const noexcept { return coeffs_.size() - 1; }
    const std::vector<std::uint64_t>& coeffs() const noexcept { return coeffs_; }
    std::uint64_t operator[](std::size_t i) const { return coeffs_.at(i); }

    /// Sum of all entries (the normalized volume of any realizing simplex).
    std::uint64_t mass() const noexcept;

    /// Positive exponents with multiplicity, ascending: (1,0,3,2,0) -> 2,2,2,3,3.
    std::vector<std::size_t> exponents() const;

    /// "1,0,3,2,0"
    std::string to_string() const;
    /// "1 + 3t^2 + 2t^3": ascending powers, zero terms and unit coefficients
    /// (except the constant) omitted; the linear term is written "t".
    std::string to_polynomial() const;

    friend bool operator==(const DeltaVector& a, const DeltaVector& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const DeltaVector& a, const DeltaVector& b) { return !(a == b); }
    friend bool operator<(const DeltaVector& a, const DeltaVector& b) {
        return a.coeffs_ < b.coeffs_;
    }

private:
    std::vector<std::uint64_t> coeffs_;
};

/// delta_i == delta_{d+1-i} for 1 <= i <= d. Every vector with d == 1 passes.
bool is_shifted_symmetric(const DeltaVector& v);

/// delta_0 + ... + delta_i <= delta_s + ... + delta_{s-i} for 0 <= i <= floor(s/2),
/// where s is the degree of the delta-polynomial.
bool check_stanley(const DeltaVector& v);

/// delta_{d-1} + ... + delta_{d-i} <= delta_2 + ... + delta_{i+1} for
/// 1 <= i <= floor((d-1)/2).
bool check_hibi(const DeltaVector& v);

}  // namespace deltavec
