#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pgg/rational.hpp"

using pgg::Rational;

TEST_CASE("construction normalizes to lowest terms with positive denominator") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(6, 3).num() == 2);
    CHECK(Rational(6, 3).den() == 1);
    CHECK(Rational(2, -4).den() == 2);
    CHECK_THROWS_AS(Rational(1, 0), pgg::Error);
}

TEST_CASE("arithmetic is exact") {
    const Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK_THROWS_AS(a / Rational(0), pgg::Error);

    // 1/10 has no exact binary representation; exactness has to survive sums.
    Rational tenth_sum(0);
    for (int i = 0; i < 10; ++i) tenth_sum += Rational(1, 10);
    CHECK(tenth_sum == Rational(1));
}

TEST_CASE("comparisons are exact") {
    CHECK(Rational(1, 3) < Rational(34, 100));
    CHECK(Rational(2, 6) <= Rational(1, 3));
    CHECK(Rational(2, 6) >= Rational(1, 3));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(1000000007, 1000000008) < Rational(1000000008, 1000000009));
}

TEST_CASE("pow is exact") {
    CHECK(Rational(3, 4).pow(5) == Rational(243, 1024));
    CHECK(Rational(1, 2).pow(0) == Rational(1));
    CHECK(Rational(-2, 3).pow(2) == Rational(4, 9));
    CHECK(Rational(19, 20).pow(59).den() == Rational(1, 20).pow(59).den());
}

TEST_CASE("parse accepts integers and fractions, rejects decimals") {
    CHECK(Rational::parse("3") == Rational(3));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK(Rational::parse("+2/6") == Rational(1, 3));
    CHECK(Rational::parse("7/2") == Rational(7, 2));
    CHECK(Rational::parse("-9/12") == Rational(-3, 4));
    CHECK_THROWS_AS(Rational::parse("0.5"), pgg::ParseError);
    CHECK_THROWS_AS(Rational::parse("1e3"), pgg::ParseError);
    CHECK_THROWS_AS(Rational::parse(""), pgg::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/"), pgg::ParseError);
    CHECK_THROWS_AS(Rational::parse("/2"), pgg::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), pgg::ParseError);
    CHECK_THROWS_AS(Rational::parse("a/b"), pgg::ParseError);
}

TEST_CASE("string forms") {
    CHECK(Rational(1, 2).str() == "1/2");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(5).fraction_str() == "5/1");
    CHECK(Rational(-3, 4).fraction_str() == "-3/4");
}

TEST_CASE("from_double_rounded picks the nearest grid fraction") {
    CHECK(Rational::from_double_rounded(0.5, 1000) == Rational(1, 2));
    CHECK(Rational::from_double_rounded(0.0004, 1000) == Rational(0));
    CHECK(Rational::from_double_rounded(0.9996, 1000) == Rational(1));
    CHECK(Rational::from_double_rounded(0.12345, 100) == Rational(12, 100));
    CHECK_THROWS_AS(Rational::from_double_rounded(0.5, 0), pgg::Error);
}

TEST_CASE("min max abs helpers") {
    CHECK(pgg::min(Rational(1, 3), Rational(1, 2)) == Rational(1, 3));
    CHECK(pgg::max(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
    CHECK(pgg::abs(Rational(-7, 2)) == Rational(7, 2));
}
