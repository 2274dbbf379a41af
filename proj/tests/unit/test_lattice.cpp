#include "doctest.h"

#include "classify/enumerate.hpp"
#include "error.hpp"
#include "helpers.hpp"
#include "lattice/hnf.hpp"

using namespace deltavec;

namespace {

const IntMatrix kWorked{{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 2, 0}, {1, 0, 1, 3}};

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::Internal;
}

Integer cofactor_det(const IntMatrix& m) {
    const std::size_t d = m.dim();
    if (d == 1) return m(0, 0);
    Integer total = 0;
    for (std::size_t c = 0; c < d; ++c) {
        IntMatrix minor(d - 1);
        for (std::size_t r = 1; r < d; ++r)
            for (std::size_t k = 0, kk = 0; k < d; ++k)
                if (k != c) minor(r - 1, kk++) = m(r, k);
        const Integer term = m(0, c) * cofactor_det(minor);
        total += (c % 2 == 0) ? term : Integer(-term);
    }
    return total;
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("determinant examples") {
    CHECK(determinant(IntMatrix::identity(5)) == 1);
    CHECK(determinant(kWorked) == 6);
    CHECK(determinant(IntMatrix{{1, 2}, {3, 4}}) == -2);
    CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK(determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);
}

TEST_CASE("Bareiss determinant matches cofactor expansion") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
        const std::size_t d = 1 + t % 5;
        auto m = testing::random_matrix(rng, d, -6, 6);
        CHECK(determinant(m) == cofactor_det(m));
    }
}

TEST_CASE("determinant stays exact on large entries") {
    IntMatrix m(2);
    m(0, 0) = Integer("123456789012345678901234567890");
    m(0, 1) = 7;
    m(1, 0) = Integer("-98765432109876543210");
    m(1, 1) = 3;
    CHECK(determinant(m) == m(0, 0) * 3 - 7 * m(1, 0));
}

TEST_CASE("normal form examples") {
    auto id = hermite_normal_form(IntMatrix::identity(4));
    CHECK(id.matrix() == IntMatrix::identity(4));
    CHECK(id.transform() == IntMatrix::identity(4));

    auto h = hermite_normal_form(IntMatrix{{1, 2}, {3, 4}});
    CHECK(h.matrix() == IntMatrix{{1, 0}, {1, 2}});
    CHECK(IntMatrix{{1, 2}, {3, 4}} * h.transform() == h.matrix());

    auto u = hermite_normal_form(IntMatrix{{2, 3}, {1, 2}});
    CHECK(u.matrix() == IntMatrix::identity(2));

    CHECK(hermite_normal_form(kWorked).matrix() == kWorked);
}

TEST_CASE("2x2 example agrees with a search over small unimodular matrices") {
    const IntMatrix m{{1, 2}, {3, 4}};
    std::vector<IntMatrix> found;
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b)
            for (long c = -3; c <= 3; ++c)
                for (long e = -3; e <= 3; ++e) {
                    if (a * e - b * c != 1 && a * e - b * c != -1) continue;
                    auto p = m * IntMatrix{{a, b}, {c, e}};
                    if (satisfies_hnf_invariants(p)) found.push_back(p);
                }
    REQUIRE(!found.empty());
    for (const auto& p : found) CHECK(p == IntMatrix{{1, 0}, {1, 2}});
}

TEST_CASE("singular input is rejected") {
    CHECK(code_of([] { hermite_normal_form(IntMatrix{{1, 2}, {2, 4}}); }) ==
          ErrorCode::SingularMatrix);
    CHECK(code_of([] { hermite_normal_form(IntMatrix(3)); }) == ErrorCode::SingularMatrix);
    CHECK(code_of([] { Simplex s(IntMatrix{{1, 1}, {1, 1}}); }) == ErrorCode::SingularMatrix);
    CHECK(code_of([] { unimodularly_equivalent(IntMatrix{{0}}, IntMatrix{{1}}); }) ==
          ErrorCode::SingularMatrix);
}

TEST_CASE("normal form properties on random matrices") {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 400; ++t) {
        const std::size_t d = 1 + t % 6;
        auto m = testing::random_nonsingular(rng, d, -9, 9);
        auto h = hermite_normal_form(m);
        CHECK(satisfies_hnf_invariants(h.matrix()));
        CHECK(m * h.transform() == h.matrix());
        CHECK(abs(determinant(h.transform())) == 1);
        CHECK(h.diagonal_product() == abs(determinant(m)));
        CHECK(abs(determinant(h.matrix())) == abs(determinant(m)));
        // idempotence
        CHECK(hermite_normal_form(h.matrix()).matrix() == h.matrix());
        // right-unimodular invariance
        auto v = testing::random_unimodular(rng, d, 12);
        REQUIRE(abs(determinant(v)) == 1);
        CHECK(hermite_normal_form(m * v).matrix() == h.matrix());
        CHECK(unimodularly_equivalent(m, m * v));
    }
}

TEST_CASE("enumerated normal forms are fixed points") {
    for (std::size_t d = 1; d <= 4; ++d)
        for (std::uint64_t D = 1; D <= 6; ++D)
            for (const auto& m : enumerate_hnf({d, D})) {
                auto h = hermite_normal_form(m);
                CHECK(h.matrix() == m);
                CHECK(h.transform() == IntMatrix::identity(d));
            }
}

TEST_CASE("unimodular equivalence examples") {
    CHECK_FALSE(unimodularly_equivalent(IntMatrix{{2, 0}, {0, 1}}, IntMatrix{{1, 0}, {0, 2}}));
    CHECK(unimodularly_equivalent(IntMatrix::identity(3), IntMatrix::identity(3)));
    CHECK(unimodularly_equivalent(IntMatrix{{1, 2}, {3, 4}}, IntMatrix{{1, 0}, {1, 2}}));
}

TEST_CASE("from_normal_form checks the invariants") {
    CHECK_NOTHROW(HnfMatrix::from_normal_form(kWorked));
    CHECK(code_of([] { HnfMatrix::from_normal_form(IntMatrix{{1, 0}, {2, 2}}); }) ==
          ErrorCode::InvalidArgument);
    CHECK(code_of([] { HnfMatrix::from_normal_form(IntMatrix{{1, 1}, {0, 2}}); }) ==
          ErrorCode::InvalidArgument);
    CHECK(code_of([] { HnfMatrix::from_normal_form(IntMatrix{{-1, 0}, {0, 2}}); }) ==
          ErrorCode::InvalidArgument);
}

TEST_CASE("text and JSON matrix formats") {
    auto m = parse_matrix("2\n1 2\n3 4\n");
    CHECK(m == IntMatrix{{1, 2}, {3, 4}});
    CHECK(parse_matrix(format_matrix_text(kWorked)) == kWorked);
    CHECK(parse_matrix("  \n3\n1 0 0\n0 1 0\n\n0 0 1\n") == IntMatrix::identity(3));
    CHECK(parse_matrix(R"({"dim": 2, "rows": [[1, 2], [3, -4]]})") == IntMatrix{{1, 2}, {3, -4}});
    CHECK(parse_matrix(format_matrix_json(kWorked)) == kWorked);
    CHECK(format_matrix_json(IntMatrix{{1, 0}, {1, 2}}) == R"({"dim":2,"rows":[[1,0],[1,2]]})");

    IntMatrix big = IntMatrix::identity(2);
    big(1, 0) = Integer("-123456789012345678901234567890");
    const auto text = format_matrix_json(big);
    CHECK(text.find("\"-123456789012345678901234567890\"") != std::string::npos);
    CHECK(parse_matrix(text) == big);
    CHECK(parse_matrix(format_matrix_text(big)) == big);
}

TEST_CASE("malformed matrices are parse errors") {
    for (const char* bad : {"", "2\n1 2\n3\n", "2\n1 2 3\n4 5\n", "2\n1 2\n", "2\n1 x\n3 4\n",
                            "0\n", "2 2\n1 0\n0 1\n", "2\n1 2\n3 4\n5 6\n",
                            R"({"rows": [[1, 2], [3]]})", R"({"rows": [[1.5]]})",
                            R"({"dim": 3, "rows": [[1]]})", R"({"rows": )", R"([1, 2])"}) {
        CAPTURE(bad);
        CHECK(code_of([&] { parse_matrix(bad); }) == ErrorCode::Parse);
    }
}

TEST_CASE("enumeration order") {
    CHECK(enumeration_order_less(IntMatrix{{1, 0}, {0, 2}}, IntMatrix{{2, 0}, {0, 1}}));
    CHECK(enumeration_order_less(IntMatrix{{1, 0}, {0, 2}}, IntMatrix{{1, 0}, {1, 2}}));
    CHECK_FALSE(enumeration_order_less(IntMatrix{{1, 0}, {1, 2}}, IntMatrix{{1, 0}, {1, 2}}));
}

}  // TEST_SUITE
