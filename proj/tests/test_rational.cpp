#include <doctest.h>

#include <random>

#include "boro/rational.hpp"

using namespace boro;

TEST_SUITE("rational") {

TEST_CASE("canonical form") {
    CHECK(make_rational(2, 4) == make_rational(1, 2));
    CHECK(make_rational(-2, -4) == make_rational(1, 2));
    CHECK(make_rational(3, -6) == make_rational(-1, 2));
    CHECK(make_rational(0, 7) == Rational(0));
    CHECK(make_rational(2, 4).get_den() == 2);
    CHECK_THROWS_AS(make_rational(1, 0), DivisionByZero);
}

TEST_CASE("print and parse round-trip") {
    CHECK(to_string(make_rational(7, 3)) == "7/3");
    CHECK(to_string(Rational(-5)) == "-5");
    CHECK(parse_rational("7/3") == make_rational(7, 3));
    CHECK(parse_rational("-14/6") == make_rational(-7, 3));
    CHECK(parse_rational("0") == Rational(0));
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);

    std::mt19937 rng(7001);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    for (int i = 0; i < 500; ++i) {
        const Rational q = make_rational(num(rng), den(rng));
        CHECK(parse_rational(to_string(q)) == q);
    }
}

TEST_CASE("inverse") {
    CHECK(inv(make_rational(7, 3)) == make_rational(3, 7));
    CHECK_THROWS_AS(inv(Rational(0)), DivisionByZero);
}

TEST_CASE("hashing respects equality") {
    CHECK(hash_value(make_rational(2, 4)) == hash_value(make_rational(1, 2)));
    CHECK(hash_value(Rational(5)) != hash_value(Rational(-5)));
}

}  // TEST_SUITE
