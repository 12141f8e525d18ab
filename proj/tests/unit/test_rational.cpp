#include "doctest.h"

#include "rational.hpp"

using namespace gm;

TEST_CASE("rational parsing and canonical printing") {
    CHECK(rat_str(parse_rat("3")) == "3");
    CHECK(rat_str(parse_rat("-2/5")) == "-2/5");
    CHECK(rat_str(parse_rat("6/4")) == "3/2");
    CHECK(rat_str(parse_rat("6/-4")) == "-3/2");
    CHECK(rat_str(parse_rat("0/7")) == "0");
    CHECK_THROWS_AS(parse_rat("1/0"), Error);
    CHECK_THROWS_AS(parse_rat("abc"), Error);
    CHECK_THROWS_AS(parse_rat(""), Error);
}

TEST_CASE("rational floor/ceil/frac") {
    CHECK(floor_rat(parse_rat("7/2")) == 3);
    CHECK(ceil_rat(parse_rat("7/2")) == 4);
    CHECK(floor_rat(parse_rat("-7/2")) == -4);
    CHECK(ceil_rat(parse_rat("-7/2")) == -3);
    CHECK(floor_rat(parse_rat("5")) == 5);
    CHECK(ceil_rat(parse_rat("5")) == 5);
    CHECK(frac_rat(parse_rat("-7/2")) == parse_rat("1/2"));
    CHECK(frac_rat(parse_rat("2/3")) == parse_rat("2/3"));
}

TEST_CASE("exact rational square roots") {
    CHECK(*rat_sqrt(parse_rat("9/4")) == parse_rat("3/2"));
    CHECK(*rat_sqrt(Rat(0)) == Rat(0));
    CHECK(!rat_sqrt(Rat(2)).has_value());
    CHECK(!rat_sqrt(parse_rat("1/2")).has_value());
    CHECK(!rat_sqrt(Rat(-4)).has_value());
}

TEST_CASE("canonical form invariant survives arithmetic") {
    // denominators stay positive and reduced through mixed expressions
    Rat a = parse_rat("3/8"), b = parse_rat("-5/12");
    Rat c = a * b + a - b;
    CHECK(rat_den(c) > 0);
    CHECK(gcd(abs(rat_num(c)), rat_den(c)) == 1);
}
