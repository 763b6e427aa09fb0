#include <doctest.h>

#include "lrs2mc/rational.hpp"

using lrs2mc::Rational;

TEST_CASE("construction canonicalizes") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(2, -4).denominator() == 2);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
    const Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK(a.inverse() == Rational(3));
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("comparisons and sign") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-5) < Rational(-4));
    CHECK(Rational(2, 3).sign() == 1);
    CHECK(Rational(-2, 3).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(abs(Rational(-7, 2)) == Rational(7, 2));
}

TEST_CASE("pow by repeated squaring") {
    CHECK(lrs2mc::pow(Rational(1, 2), 0) == Rational(1));
    CHECK(lrs2mc::pow(Rational(1, 2), 3) == Rational(1, 8));
    CHECK(lrs2mc::pow(Rational(-2, 3), 2) == Rational(4, 9));
    CHECK(lrs2mc::pow(Rational(-2, 3), 3) == Rational(-8, 27));
}

TEST_CASE("canonical text form") {
    CHECK(Rational(1, 2).to_string() == "1/2");
    CHECK(Rational(-1, 2).to_string() == "-1/2");
    CHECK(Rational(5).to_string() == "5");
    CHECK(Rational(-6, 3).to_string() == "-2");

    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("3.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(" 1/2"), std::invalid_argument);
}

TEST_CASE("parse round trip") {
    for (long num = -12; num <= 12; ++num)
        for (long den = 1; den <= 9; ++den) {
            const Rational r(num, den);
            CHECK(Rational::parse(r.to_string()) == r);
        }
}
