#include <catch2/catch_amalgamated.hpp>

#include "zetaforge/rational.hpp"

using zetaforge::BigInt;
using zetaforge::Rational;

TEST_CASE("rational canonical form") {
    Rational a(6, -4);
    CHECK(a.numerator() == -3);
    CHECK(a.denominator() == 2);
    CHECK(a.to_string() == "-3/2");
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0).to_string() == "0/1");
    CHECK_THROWS_AS(Rational(1, 0), zetaforge::DivisionByZero);
}

TEST_CASE("rational arithmetic") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK_THROWS_AS(a / Rational(0), zetaforge::DivisionByZero);
    CHECK(Rational(-2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(2).pow(10) == Rational(1024));
}

TEST_CASE("rational parse and print round-trip") {
    auto r = Rational::from_string("-35/10");
    CHECK(r == Rational(-7, 2));
    CHECK(Rational::from_string("42") == Rational(42));
    CHECK_THROWS_AS(Rational::from_string("x/y"), zetaforge::ConfigError);
    CHECK(Rational::from_string(r.to_string()) == r);
}

TEST_CASE("rational ordering and floor") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-5, 2).floor() == BigInt(-3));
    CHECK(Rational(5, 2).floor() == BigInt(2));
    CHECK(Rational(4, 2).floor() == BigInt(2));
}

TEST_CASE("rational gcd for content computations") {
    CHECK(zetaforge::gcd(Rational(4, 3), Rational(2, 9)) == Rational(2, 9));
    CHECK(zetaforge::gcd(Rational(0), Rational(-5, 2)) == Rational(5, 2));
}
