#include "unitdist/geometry.hpp"
#include "unitdist/parse.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace unitdist;

TEST_CASE("rational literals") {
    CHECK(parse_rat_elem("3/4") == make_rat(3, 4));
    CHECK(parse_rat_elem("-3/4") == make_rat(-3, 4));
    CHECK(parse_rat_elem("0") == Rat(0));
    CHECK(parse_rat_elem(" 1 / 2 ") == make_rat(1, 2));
    CHECK(parse_rat_elem("1/2+1/3") == make_rat(5, 6));
    CHECK_THROWS_AS(parse_rat_elem("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rat_elem(""), ParseError);
    CHECK_THROWS_AS(parse_rat_elem("1/2x"), ParseError);
    CHECK_THROWS_AS(parse_rat_elem("sqrt(2)"), ParseError);
}

TEST_CASE("quadratic literals") {
    CHECK(parse_quad_elem("1/2+1/2*sqrt(3)", 3) == QuadElem(3, make_rat(1, 2), make_rat(1, 2)));
    CHECK(parse_quad_elem("2-3*sqrt(7)", 7) == QuadElem(7, 2, -3));
    CHECK(parse_quad_elem("sqrt(2)", 2) == QuadElem(2, 0, 1));
    CHECK(parse_quad_elem("-sqrt(2)", 2) == QuadElem(2, 0, -1));
    CHECK(parse_quad_elem("3/2*sqrt(-5)", -5) == QuadElem(-5, 0, make_rat(3, 2)));
    CHECK(parse_quad_elem("1/2*sqrt(3)+1/2", 3) == QuadElem(3, make_rat(1, 2), make_rat(1, 2)));
    CHECK(parse_quad_elem("7", 3) == QuadElem(3, 7, 0));
    CHECK(parse_quad_elem("sqrt(3)+sqrt(3)", 3) == QuadElem(3, 0, 2));
    CHECK_THROWS_AS(parse_quad_elem("1+sqrt(5)", 3), ParseError);
    CHECK_THROWS_AS(parse_quad_elem("sqrt(0)", 3), ParseError);
    CHECK_THROWS_AS(parse_quad_elem("1+2*sqrt(3", 3), ParseError);
}

TEST_CASE("parse errors carry a position") {
    try {
        parse_rat_elem("1/2 + x");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 6);
        CHECK(std::string(e.what()).find("ELEM") != std::string::npos);  // grammar shown
    }
}

TEST_CASE("biquadratic literals") {
    CHECK(parse_biquad_elem("-5/2-1/2*sqrt(3)+1/2*sqrt(11)+1/2*sqrt(33)", 3, 11) ==
          BiQuadElem(3, 11, make_rat(-5, 2), make_rat(-1, 2), make_rat(1, 2), make_rat(1, 2)));
    CHECK(parse_biquad_elem("23+4*sqrt(33)", 3, 11) == BiQuadElem(3, 11, 23, 0, 0, 4));
    CHECK_THROWS_AS(parse_biquad_elem("sqrt(5)", 3, 11), ParseError);
}

TEST_CASE("serialization round-trips") {
    CHECK(serialize_rat(make_rat(-3, 4)) == "-3/4");
    CHECK(serialize_rat(Rat(7)) == "7");
    CHECK(serialize_quad(QuadElem(3, 1, make_rat(1, 2))) == "1+1/2*sqrt(3)");
    CHECK(serialize_quad(QuadElem(3, 0, 0)) == "0");
    CHECK(serialize_quad(QuadElem(3, 1, make_rat(-1, 2))) == "1-1/2*sqrt(3)");
    CHECK(serialize_quad(QuadElem(-5, 0, make_rat(1, 2))) == "1/2*sqrt(-5)");

    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long long> num(-30, 30);
    std::uniform_int_distribution<long long> den(1, 9);
    auto rr = [&] { return make_rat(num(rng), den(rng)); };
    for (int i = 0; i < 300; ++i) {
        Rat r = rr();
        CHECK(parse_rat_elem(serialize_rat(r)) == r);
        QuadElem q{7, rr(), rr()};
        CHECK(parse_quad_elem(serialize_quad(q), 7) == q);
        BiQuadElem b{3, 11, rr(), rr(), rr(), rr()};
        CHECK(parse_biquad_elem(serialize_biquad(b), 3, 11) == b);
    }
}

TEST_CASE("point serialization and coordinate splitting") {
    PointT<QuadElem> p = {QuadElem(3, make_rat(1, 2), 0), QuadElem(3, 0, make_rat(1, 2))};
    CHECK(serialize_point(p) == "1/2; 1/2*sqrt(3)");
    auto parts = split_coordinates("1/2; 1/2*sqrt(3)");
    REQUIRE(parts.size() == 2);
    CHECK(parse_quad_elem(parts[0], 3) == p[0]);
    CHECK(parse_quad_elem(parts[1], 3) == p[1]);
    CHECK(split_coordinates("1").size() == 1);
    CHECK(split_coordinates("1;2;3").size() == 3);
}
