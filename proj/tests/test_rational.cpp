#include "unitdist/halfval.hpp"
#include "unitdist/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace unitdist;

TEST_CASE("make_rat normalizes and rejects zero denominators") {
    CHECK(make_rat(2, 4) == make_rat(1, 2));
    CHECK(make_rat(1, -2) == make_rat(-1, 2));
    CHECK(rat_num(make_rat(1, -2)) == -1);
    CHECK(rat_den(make_rat(1, -2)) == 2);
    CHECK(rat_den(Rat(5)) == 1);
    CHECK_THROWS_AS(make_rat(1, 0), std::invalid_argument);
}

TEST_CASE("integer square roots") {
    CHECK(int_sqrt(Int(144)) == 12);
    CHECK(int_sqrt(Int(0)) == 0);
    CHECK(is_perfect_square(Int(49)));
    CHECK_FALSE(is_perfect_square(Int(50)));
    CHECK_FALSE(is_perfect_square(Int(-4)));
}

TEST_CASE("rational_sqrt") {
    CHECK(rational_sqrt(make_rat(9, 4)) == make_rat(3, 2));
    CHECK(rational_sqrt(Rat(0)) == Rat(0));
    CHECK(rational_sqrt(Rat(2)) == std::nullopt);
    CHECK(rational_sqrt(Rat(-1)) == std::nullopt);
    CHECK(rational_sqrt(make_rat(2, 9)) == std::nullopt);
}

TEST_CASE("modular arithmetic helpers") {
    CHECK(mod_reduce(Int(-7), 3) == 2);
    CHECK(mod_reduce(Int(9), 3) == 0);
    CHECK(mod_pow(2, 10, 1000) == 24);
    CHECK(mod_inv(3, 7) == 5);
    CHECK_THROWS_AS(mod_inv(6, 9), std::invalid_argument);
    CHECK(rat_mod(make_rat(1, 2), 7) == 4);
    CHECK(rat_mod(make_rat(-1, 3), 7) == 2);  // -1 * 3^-1 = -5 = 2 (mod 7)
    CHECK_THROWS_AS(rat_mod(make_rat(1, 7), 7), std::invalid_argument);
}

TEST_CASE("half-integer valuations order and add") {
    HalfVal one = HalfVal::from_int(1);
    HalfVal half = HalfVal::from_half(1);
    HalfVal inf = HalfVal::infinity();

    CHECK(one.twice() == 2);
    CHECK(half < one);
    CHECK(one <= one);
    CHECK(one < inf);
    CHECK(one + half == HalfVal::from_half(3));
    CHECK(one + inf == inf);
    CHECK(-half == HalfVal::from_half(-1));
    CHECK(min(one, half) == half);
    CHECK(half.str() == "1/2");
    CHECK(HalfVal::from_half(3).str() == "3/2");
    CHECK(HalfVal::from_int(-2).str() == "-2");
    CHECK(inf.str() == "inf");
    CHECK(one.is_integer());
    CHECK_FALSE(half.is_integer());
    CHECK_THROWS_AS(inf.twice(), std::logic_error);
    CHECK_THROWS_AS(-inf, std::logic_error);
}
