#include "lattice/int_matrix.hpp"

#include "error.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace deltavec {

IntMatrix::IntMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
    if (dim == 0) fail(ErrorCode::InvalidArgument, "matrix dimension must be at least 1");
}

IntMatrix::IntMatrix(std::size_t dim, std::vector<Integer> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (dim == 0) fail(ErrorCode::InvalidArgument, "matrix dimension must be at least 1");
    if (entries_.size() != dim * dim)
        fail(ErrorCode::InvalidArgument, "matrix needs exactly dim*dim entries");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : dim_(rows.size()), entries_() {
    if (dim_ == 0) fail(ErrorCode::InvalidArgument, "matrix dimension must be at least 1");
    entries_.reserve(dim_ * dim_);
    for (const auto& row : rows) {
        if (row.size() != dim_) fail(ErrorCode::InvalidArgument, "ragged matrix rows");
        for (long v : row) entries_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t dim) {
    IntMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (rhs.dim_ != dim_) fail(ErrorCode::InvalidArgument, "dimension mismatch in product");
    IntMatrix out(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t k = 0; k < dim_; ++k) {
            const Integer& a = (*this)(r, k);
            if (a == 0) continue;
            for (std::size_t c = 0; c < dim_; ++c) out(r, c) += a * rhs(k, c);
        }
    return out;
}

bool IntMatrix::is_lower_triangular() const {
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = r + 1; c < dim_; ++c)
            if ((*this)(r, c) != 0) return false;
    return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < dim_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t c = 0; c < dim_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

Integer determinant(const IntMatrix& input) {
    const std::size_t n = input.dim();
    IntMatrix m = input;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && m(pivot, k) == 0) ++pivot;
            if (pivot == n) return 0;
            m.swap_rows(k, pivot);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = std::move(v);
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

bool enumeration_order_less(const IntMatrix& a, const IntMatrix& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        if (a(i, i) != b(i, i)) return a(i, i) < b(i, i);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < r; ++c)
            if (a(r, c) != b(r, c)) return a(r, c) < b(r, c);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r + 1; c < n; ++c)
            if (a(r, c) != b(r, c)) return a(r, c) < b(r, c);
    return false;
}

namespace {

Integer parse_integer_token(const std::string& token) {
    if (token.empty()) fail(ErrorCode::Parse, "empty integer token");
    std::size_t start = (token[0] == '-' || token[0] == '+') ? 1 : 0;
    if (start == token.size()) fail(ErrorCode::Parse, "malformed integer '" + token + "'");
    for (std::size_t i = start; i < token.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(token[i])))
            fail(ErrorCode::Parse, "malformed integer '" + token + "'");
    Integer v;
    v.set_str(token[0] == '+' ? token.substr(1) : token, 10);
    return v;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

bool is_blank(const std::string& line) {
    return std::all_of(line.begin(), line.end(),
                       [](unsigned char ch) { return std::isspace(ch) != 0; });
}

Integer json_to_integer(const nlohmann::json& v) {
    if (v.is_number_integer()) {
        if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
        return Integer(std::to_string(v.get<std::int64_t>()));
    }
    if (v.is_string()) return parse_integer_token(v.get<std::string>());
    if (v.is_number_float())
        fail(ErrorCode::Parse,
             "non-integer or out-of-range JSON number; write large entries as decimal strings");
    fail(ErrorCode::Parse, "matrix entries must be integers");
}

}  // namespace

IntMatrix parse_matrix_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line))
        if (!is_blank(line)) lines.push_back(line);
    if (lines.empty()) fail(ErrorCode::Parse, "empty matrix input");

    auto head = split_ws(lines[0]);
    if (head.size() != 1) fail(ErrorCode::Parse, "first line must hold the dimension only");
    Integer dim_value = parse_integer_token(head[0]);
    if (dim_value < 1 || dim_value > 4096)
        fail(ErrorCode::Parse, "dimension must be between 1 and 4096");
    const auto dim = static_cast<std::size_t>(dim_value.get_ui());
    if (lines.size() != dim + 1)
        fail(ErrorCode::Parse, "expected " + std::to_string(dim) + " matrix rows, found " +
                                   std::to_string(lines.size() - 1));

    std::vector<Integer> entries;
    entries.reserve(dim * dim);
    for (std::size_t r = 0; r < dim; ++r) {
        auto tokens = split_ws(lines[r + 1]);
        if (tokens.size() != dim)
            fail(ErrorCode::Parse, "ragged row " + std::to_string(r + 1) + ": expected " +
                                       std::to_string(dim) + " entries");
        for (const auto& tok : tokens) entries.push_back(parse_integer_token(tok));
    }
    return IntMatrix(dim, std::move(entries));
}

IntMatrix parse_matrix_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::Parse, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array())
        fail(ErrorCode::Parse, "JSON matrix must be an object with a \"rows\" array");
    const auto& rows = doc["rows"];
    const std::size_t dim = rows.size();
    if (dim == 0) fail(ErrorCode::Parse, "JSON matrix has no rows");
    if (doc.contains("dim")) {
        const auto& d = doc["dim"];
        if (!d.is_number_integer() || d.get<std::int64_t>() != static_cast<std::int64_t>(dim))
            fail(ErrorCode::Parse, "\"dim\" does not match the number of rows");
    }
    std::vector<Integer> entries;
    entries.reserve(dim * dim);
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != dim)
            fail(ErrorCode::Parse, "ragged JSON matrix row");
        for (const auto& v : row) entries.push_back(json_to_integer(v));
    }
    return IntMatrix(dim, std::move(entries));
}

IntMatrix parse_matrix(std::string_view text) {
    auto pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string_view::npos && text[pos] == '{') return parse_matrix_json(text);
    return parse_matrix_text(text);
}

std::string format_matrix_text(const IntMatrix& m) {
    std::string out = std::to_string(m.dim()) + "\n";
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) {
            if (c) out += ' ';
            out += m(r, c).get_str();
        }
        out += '\n';
    }
    return out;
}

std::string format_matrix_json(const IntMatrix& m) {
    // Entries are written as bare JSON numbers when they fit in 64 bits and as
    // decimal strings otherwise; parse_matrix_json accepts both.
    std::string out = "{\"dim\":" + std::to_string(m.dim()) + ",\"rows\":[";
    for (std::size_t r = 0; r < m.dim(); ++r) {
        if (r) out += ',';
        out += '[';
        for (std::size_t c = 0; c < m.dim(); ++c) {
            if (c) out += ',';
            const Integer& v = m(r, c);
            if (mpz_sizeinbase(v.get_mpz_t(), 2) < 63)
                out += v.get_str();
            else
                out += '"' + v.get_str() + '"';
        }
        out += ']';
    }
    out += "]}";
    return out;
}

}  // namespace deltavec
