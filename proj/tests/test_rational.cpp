#include <catch2/catch_amalgamated.hpp>

#include "perclab/rational.hpp"

using perclab::Rational;

TEST_CASE("rationals reduce to canonical form") {
    CHECK(Rational(52, 40) == Rational(13, 10));
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(144, 92) == Rational(36, 23));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
    Rational a(13, 10), b(4, 3);
    CHECK(a + b == Rational(79, 30));
    CHECK(b - a == Rational(1, 30));
    CHECK(a * b == Rational(26, 15));
    CHECK(a / b == Rational(39, 40));
    CHECK(-a == Rational(-13, 10));
    CHECK(a.inverse() == Rational(10, 13));
    CHECK_THROWS_AS(Rational(0).inverse(), std::invalid_argument);
    CHECK_THROWS_AS(a / Rational(0), std::invalid_argument);
}

TEST_CASE("ordering distinguishes near-equal densities") {
    CHECK(Rational(13, 10) < Rational(4, 3));
    CHECK(Rational(4, 3) > Rational(13, 10));
    CHECK(Rational(16, 11) <= Rational(16, 11));
    CHECK(Rational(-1, 2) < Rational(0));
    // large cross products stay exact
    CHECK(Rational(1000000006, 1000000007) < Rational(1000000007, 1000000008));
}

TEST_CASE("string round trip") {
    CHECK(Rational(13, 10).str() == "13/10");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(-10, 13).str() == "-10/13");
    CHECK(Rational::parse("13/10") == Rational(13, 10));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse(Rational(36, 23).str()) == Rational(36, 23));
}
