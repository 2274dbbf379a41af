#include "doctest.h"

#include "classify/enumerate.hpp"
#include "delta/engine.hpp"
#include "error.hpp"
#include "helpers.hpp"

using namespace deltavec;

namespace {

const IntMatrix kWorked{{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 2, 0}, {1, 0, 1, 3}};

HnfMatrix nf(const IntMatrix& m) { return HnfMatrix::from_normal_form(m); }

DeltaVector dv(std::vector<std::uint64_t> c) { return DeltaVector(std::move(c)); }

}  // namespace

TEST_SUITE("delta") {

TEST_CASE("s-values of the worked example") {
    const auto a = nf(kWorked);
    CHECK(s_value(a, {1, 1, 1, 1}) == 2);
    CHECK(s_value(a, {1, 1, 2, 1}) == 3);
    CHECK(s_value(a, {1, 1, 1, 2}) == 2);
    CHECK(s_value(a, {1, 1, 2, 2}) == 3);
    CHECK(s_value(a, {1, 1, 1, 3}) == 3);
    CHECK(s_value(a, {1, 1, 2, 3}) == 5);
}

TEST_CASE("s-value small cases") {
    for (std::size_t d = 1; d <= 6; ++d)
        CHECK(s_value(nf(IntMatrix::identity(d)), CongruenceIndex(d, 1)) == d + 1);
    CHECK(s_value(nf(IntMatrix{{1, 0}, {1, 2}}), {1, 1}) == 2);
}

TEST_CASE("s-value index errors") {
    const auto a = nf(kWorked);
    CHECK_THROWS_AS(s_value(a, {1, 1, 3, 1}), Error);
    CHECK_THROWS_AS(s_value(a, {0, 1, 1, 1}), Error);
    CHECK_THROWS_AS(s_value(a, {1, 1, 1}), Error);
    try {
        s_value(a, {1, 1, 1, 4});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IndexOutOfBounds);
    }
}

TEST_CASE("s-value table is lexicographic") {
    auto table = s_value_table(nf(kWorked));
    REQUIRE(table.size() == 6);
    for (std::size_t i = 1; i < table.size(); ++i) CHECK(table[i - 1].index < table[i].index);
    CHECK(table.front().index == CongruenceIndex{1, 1, 1, 1});
    CHECK(table.back().index == CongruenceIndex{1, 1, 2, 3});
    CHECK(table.back().s == 5);
}

TEST_CASE("delta_from_hnf examples") {
    CHECK(delta_from_hnf(nf(kWorked)) == dv({1, 0, 3, 2, 0}));
    CHECK(delta_from_hnf(nf(kWorked)).to_polynomial() == "1 + 3t^2 + 2t^3");
    for (std::size_t d = 1; d <= 5; ++d) {
        std::vector<std::uint64_t> unit(d + 1, 0);
        unit[0] = 1;
        CHECK(delta_from_hnf(nf(IntMatrix::identity(d))) == dv(unit));
    }
    CHECK(delta_from_hnf(nf(IntMatrix{{1, 0}, {1, 2}})) == dv({1, 1, 0}));
    CHECK(delta_of_matrix(IntMatrix{{1, 2}, {3, 4}}) == dv({1, 1, 0}));
}

TEST_CASE("mass equals the diagonal product") {
    for (std::size_t d = 1; d <= 4; ++d)
        for (std::uint64_t D = 1; D <= 8; ++D)
            for (const auto& m : enumerate_hnf({d, D})) {
                auto v = delta_from_hnf(nf(m));
                CHECK(v.mass() == D);
                CHECK(v[0] == 1);
                CHECK(v.dim() == d);
            }
}

TEST_CASE("delta is invariant under right-unimodular changes") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 100; ++t) {
        const std::size_t d = 1 + t % 4;
        auto m = testing::random_nonsingular(rng, d, -3, 3);
        if (abs(determinant(m)) > 60) continue;
        auto v = testing::random_unimodular(rng, d, 8);
        CHECK(delta_of_matrix(m) == delta_of_matrix(m * v));
    }
}

TEST_CASE("DeltaVector text forms") {
    auto v = DeltaVector::parse("1,0,3,2,0");
    CHECK(v.dim() == 4);
    CHECK(v.mass() == 6);
    CHECK(v.to_string() == "1,0,3,2,0");
    CHECK(v.exponents() == std::vector<std::size_t>{2, 2, 2, 3, 3});
    CHECK(DeltaVector::parse(" 1, 1 ,0").to_string() == "1,1,0");
    CHECK(dv({1, 1, 0}).to_polynomial() == "1 + t");
    CHECK(dv({1, 0, 0}).to_polynomial() == "1");
    CHECK(dv({1, 2, 1}).to_polynomial() == "1 + 2t + t^2");
    for (const char* bad : {"", "1,", ",1", "1,a", "2,1", "1,-1", "1;2", "1", "0,1"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(DeltaVector::parse(bad), Error);
    }
    CHECK_THROWS_AS(dv({2, 1}), Error);
    CHECK_THROWS_AS(dv({1}), Error);
}

TEST_CASE("shifted symmetry") {
    CHECK(is_shifted_symmetric(dv({1, 1, 2, 2, 1, 2, 2, 1})));
    CHECK(is_shifted_symmetric(dv({1, 0, 0})));
    CHECK_FALSE(is_shifted_symmetric(dv({1, 1, 0})));
    CHECK_FALSE(is_shifted_symmetric(dv({1, 2, 2, 1})));
    CHECK(is_shifted_symmetric(dv({1, 5})));
}

TEST_CASE("necessary inequalities") {
    CHECK(check_stanley(dv({1, 0, 1, 0, 1, 1, 0, 0})));
    CHECK(check_hibi(dv({1, 0, 1, 0, 1, 1, 0, 0})));
    CHECK_FALSE(check_hibi(dv({1, 0, 0, 1, 1})));
    CHECK(check_stanley(dv({1, 0, 0, 0})));
    CHECK(check_hibi(dv({1, 0, 0, 0})));
    CHECK(check_stanley(dv({1, 3, 0, 0})));
    CHECK(check_stanley(dv({1, 0, 0, 0, 0, 1, 3})));
    // degree 4, i = 1: delta_0 + delta_1 = 2 > delta_4 + delta_3 = 1
    CHECK_FALSE(check_stanley(dv({1, 1, 0, 0, 1})));
}

TEST_CASE("every attained delta satisfies the necessary inequalities") {
    for (std::size_t d = 1; d <= 5; ++d)
        for (std::uint64_t D = 1; D <= 6; ++D)
            for (const auto& m : enumerate_hnf({d, D})) {
                auto v = delta_from_hnf(nf(m));
                CAPTURE(v.to_string());
                CHECK(check_stanley(v));
                CHECK(check_hibi(v));
                if (d >= 2) CHECK(v[1] >= v[d]);
            }
}

}  // TEST_SUITE
