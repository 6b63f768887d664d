#include "unitdist/biquad.hpp"
#include "unitdist/quad.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace unitdist;

namespace {
QuadElem q2(const Rat& a, const Rat& b) { return QuadElem{2, a, b}; }
QuadElem q3(const Rat& a, const Rat& b) { return QuadElem{3, a, b}; }
BiQuadElem bq(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
    return BiQuadElem{3, 11, a, b, c, d};
}
}  // namespace

TEST_CASE("quadratic field constructor validates the radicand") {
    CHECK_THROWS_AS(QuadElem(4, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(QuadElem(1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(QuadElem(0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(QuadElem(12, 1, 1), std::invalid_argument);
    CHECK_NOTHROW(QuadElem(-5, 1, 1));
    CHECK_NOTHROW(QuadElem(-1, 1, 1));
}

TEST_CASE("quadratic arithmetic") {
    QuadElem x = q2(1, 1), y = q2(1, -1);
    CHECK(x * y == q2(-1, 0));
    CHECK(x + y == q2(2, 0));
    CHECK(x - y == q2(0, 2));
    CHECK(quad_norm(x) == Rat(-1));
    CHECK(quad_conj(x) == y);
    CHECK(q2(1, 0) / x == q2(-1, 1));  // 1/(1+sqrt2) = -1+sqrt2
    CHECK(Rat(3) * x == q2(3, 3));
    CHECK_THROWS_AS(x / q2(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(x + q3(1, 0), std::invalid_argument);
    CHECK(quad_arith(x, y, ArithOp::Mul) == q2(-1, 0));
}

TEST_CASE("squaring a half plus half sqrt3") {
    QuadElem r = q3(make_rat(1, 2), make_rat(1, 2));
    CHECK(r * r == q3(1, make_rat(1, 2)));
}

TEST_CASE("rational squares inside a quadratic field") {
    auto s = is_square_rational_in_quad(make_rat(9, 4), 3);
    REQUIRE(s.has_value());
    CHECK(*s == q3(make_rat(3, 2), 0));

    auto t = is_square_rational_in_quad(Rat(3), 3);
    REQUIRE(t.has_value());
    CHECK(*t == q3(0, 1));

    auto u = is_square_rational_in_quad(make_rat(7, 4), 7);
    REQUIRE(u.has_value());
    CHECK(*u == QuadElem(7, 0, make_rat(1, 2)));

    CHECK_FALSE(is_square_rational_in_quad(Rat(3), 7).has_value());
    CHECK_FALSE(is_square_rational_in_quad(Rat(2), 3).has_value());
    CHECK_THROWS_AS(is_square_rational_in_quad(Rat(0), 3), std::invalid_argument);
}

TEST_CASE("biquadratic constructor validates the radicands") {
    CHECK_THROWS_AS(BiQuadElem(3, 3, 1, 0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(BiQuadElem(4, 11, 1, 0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(BiQuadElem(1, 11, 1, 0, 0, 0), std::invalid_argument);
    CHECK_NOTHROW(BiQuadElem(3, 11, 1, 0, 0, 0));
}

TEST_CASE("biquadratic multiplication against hand expansion") {
    // (1 + sqrt3)(1 + sqrt11) = 1 + sqrt3 + sqrt11 + sqrt33
    CHECK(bq(1, 1, 0, 0) * bq(1, 0, 1, 0) == bq(1, 1, 1, 1));
    // (sqrt3 * sqrt11) = sqrt33, and sqrt33^2 = 33
    CHECK(bq(0, 1, 0, 0) * bq(0, 0, 1, 0) == bq(0, 0, 0, 1));
    CHECK(bq(0, 0, 0, 1) * bq(0, 0, 0, 1) == bq(33, 0, 0, 0));
    CHECK(bq(0, 1, 0, 0) * bq(0, 0, 0, 1) == bq(0, 0, 3, 0));  // sqrt3*sqrt33 = 3*sqrt11
}

TEST_CASE("biquadratic conjugations and norm") {
    BiQuadElem x = bq(1, 2, 3, 4);
    CHECK(biquad_sigma(x) == bq(1, -2, 3, -4));
    CHECK(biquad_tau(x) == bq(1, 2, -3, -4));
    CHECK(biquad_sigmatau(x) == bq(1, -2, -3, 4));

    BiQuadElem u = bq(23, 0, 0, 4);
    CHECK(biquad_norm(u) == Rat(1));
    CHECK(biquad_norm(x) == biquad_norm(biquad_sigma(x)));

    // Norm is multiplicative.
    BiQuadElem y = bq(make_rat(1, 2), -1, make_rat(2, 3), 0);
    CHECK(biquad_norm(x * y) == biquad_norm(x) * biquad_norm(y));
}

TEST_CASE("biquadratic division and inverse") {
    BiQuadElem u = bq(23, 0, 0, 4), one = bq(1, 0, 0, 0);
    CHECK(one / u == bq(23, 0, 0, -4));
    BiQuadElem x = bq(1, 2, 3, 4);
    CHECK(x / x == one);
    CHECK((x / bq(0, 0, 0, 1)) * bq(0, 0, 0, 1) == x);
    CHECK_THROWS_AS(x / bq(0, 0, 0, 0), std::invalid_argument);
    CHECK(biquad_arith(x, x, ArithOp::Div) == one);
}
