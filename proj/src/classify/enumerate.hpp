#pragma once

#include "lattice/int_matrix.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace deltavec {

/// one-row: exactly one diagonal entry > 1; two-row: exactly two.
enum class FormFilter { All, OneRow, TwoRow };

FormFilter parse_form_filter(std::string_view name);  // "all" | "one-row" | "two-row"
std::string_view form_filter_name(FormFilter f);
bool matches_filter(const IntMatrix& m, FormFilter f);

struct HnfEnumSpec {
    std::size_t dim = 1;
    std::uint64_t det = 1;
    FormFilter filter = FormFilter::All;
};

/// Streams every d x d normal form of determinant D: diagonal sequences in
/// lexicographic order, and for each one the strictly-lower entries as a
/// row-major odometer (last entry fastest). Lazy; nothing is materialized.
class HnfEnumerator {
public:
    /// Throws InvalidArgument for dim < 1 or det < 1.
    explicit HnfEnumerator(const HnfEnumSpec& spec);

    std::optional<IntMatrix> next();

private:
    bool advance_diagonal();
    bool diagonal_allowed() const;
    bool advance_entries();
    IntMatrix current() const;

    HnfEnumSpec spec_;
    std::vector<std::uint64_t> divisors_;
    std::vector<std::uint64_t> diag_;
    // strictly-lower slots whose row has a diagonal entry > 1
    std::vector<std::pair<std::size_t, std::size_t>> slots_;
    std::vector<std::uint64_t> values_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<IntMatrix> enumerate_hnf(const HnfEnumSpec& spec);

}  // namespace deltavec
