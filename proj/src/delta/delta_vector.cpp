#include "delta/delta_vector.hpp"

#include "error.hpp"

#include <cctype>
#include <charconv>

namespace deltavec {

DeltaVector::DeltaVector(std::vector<std::uint64_t> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 2)
        fail(ErrorCode::InvalidArgument, "delta-vector needs at least two entries (dimension >= 1)");
    if (coeffs_[0] != 1) fail(ErrorCode::InvalidArgument, "delta-vector must start with 1");
}

DeltaVector DeltaVector::parse(std::string_view text) {
    std::vector<std::uint64_t> coeffs;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view field =
            text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!field.empty() && std::isspace(static_cast<unsigned char>(field.front())))
            field.remove_prefix(1);
        while (!field.empty() && std::isspace(static_cast<unsigned char>(field.back())))
            field.remove_suffix(1);
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
            fail(ErrorCode::Parse, "malformed delta-vector entry '" + std::string(field) + "'");
        coeffs.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (coeffs[0] != 1) fail(ErrorCode::Parse, "delta-vector must start with 1");
    if (coeffs.size() < 2) fail(ErrorCode::Parse, "delta-vector needs at least two entries");
    return DeltaVector(std::move(coeffs));
}

std::uint64_t DeltaVector::mass() const noexcept {
    std::uint64_t total = 0;
    for (auto c : coeffs_) total += c;
    return total;
}

std::vector<std::size_t> DeltaVector::exponents() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        for (std::uint64_t k = 0; k < coeffs_[i]; ++k) out.push_back(i);
    return out;
}

std::string DeltaVector::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(coeffs_[i]);
    }
    return out;
}

std::string DeltaVector::to_polynomial() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const auto c = coeffs_[i];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c);
        out += 't';
        if (i > 1) out += '^' + std::to_string(i);
    }
    return out;
}

bool is_shifted_symmetric(const DeltaVector& v) {
    const std::size_t d = v.dim();
    for (std::size_t i = 1; i <= d; ++i)
        if (v[i] != v[d + 1 - i]) return false;
    return true;
}

bool check_stanley(const DeltaVector& v) {
    std::size_t s = 0;
    for (std::size_t i = 0; i <= v.dim(); ++i)
        if (v[i] != 0) s = i;
    std::uint64_t low = 0, high = 0;
    for (std::size_t i = 0; i <= s / 2; ++i) {
        low += v[i];
        high += v[s - i];
        if (low > high) return false;
    }
    return true;
}

bool check_hibi(const DeltaVector& v) {
    const std::size_t d = v.dim();
    if (d < 3) return true;
    std::uint64_t top = 0, bottom = 0;
    for (std::size_t i = 1; i <= (d - 1) / 2; ++i) {
        top += v[d - i];
        bottom += v[i + 1];
        if (top > bottom) return false;
    }
    return true;
}

}  // namespace deltavec
