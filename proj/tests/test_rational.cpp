#include <random>
#include <stdexcept>

#include "doctest.h"
#include "isofactor/errors.hpp"
#include "isofactor/rational.hpp"

using isofactor::InputError;
using isofactor::Rational;

TEST_CASE("construction normalizes to lowest terms with positive denominator") {
    Rational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(Rational(0, -7) == Rational(0));
    CHECK(Rational(0, -7).denominator() == 1);
    CHECK_THROWS_AS(Rational(1, 0), InputError);
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 2) - Rational(3, 4) == Rational(-1, 4));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK(-Rational(5, 7) == Rational(-5, 7));
    CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("ordering cross-multiplies") {
    CHECK(Rational(3, 2) > Rational(4, 3));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(7, 3).floor() == 2);
    CHECK(Rational(7, 3).ceil() == 3);
    CHECK(Rational(-7, 3).floor() == -3);
    CHECK(Rational(-7, 3).ceil() == -2);
    CHECK(Rational(4).floor() == 4);
}

TEST_CASE("formatting and parsing") {
    CHECK(Rational(3, 2).to_string() == "3/2");
    CHECK(Rational(4, 2).to_string() == "2");
    CHECK(Rational(-1, 3).to_string() == "-1/3");
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), InputError);
    CHECK_THROWS_AS(Rational::parse("0.5"), InputError);
    CHECK_THROWS_AS(Rational::parse(""), InputError);
    CHECK_THROWS_AS(Rational::parse("1/"), InputError);
}

TEST_CASE("parse inverts to_string on random rationals") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::int64_t> num(-1'000'000, 1'000'000), den(1, 1'000'000);
    for (int i = 0; i < 2000; ++i) {
        Rational r(num(rng), den(rng));
        CHECK(Rational::parse(r.to_string()) == r);
    }
}

TEST_CASE("overflow is detected") {
    const Rational big(std::int64_t{1} << 62);
    CHECK_THROWS_AS(big * big, std::overflow_error);
}
