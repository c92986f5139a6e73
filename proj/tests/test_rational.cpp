#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "graphring/rational.hpp"

using graphring::Rational;

TEST_CASE("canonical form is kept after every operation") {
    Rational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
    CHECK((Rational(2, 3) * Rational(3, 2)) == Rational(1));
    CHECK((Rational(1, 2) - Rational(1, 2)).is_zero());
    CHECK((Rational(5, 7) / Rational(5, 7)) == Rational(1));
    CHECK(Rational(0, 5).denominator() == 1);
}

TEST_CASE("parsing") {
    CHECK(Rational::parse("-3/6") == Rational(-1, 2));
    CHECK(Rational::parse(" 7 ") == Rational(7));
    CHECK(Rational::parse("0") == Rational(0));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
}

TEST_CASE("ordering and display") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-5) < Rational(-4, 3));
    CHECK(Rational(-1, 2).str() == "-1/2");
    CHECK(Rational(4, 2).str() == "2");
}

TEST_CASE("errors on division by zero") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(0).inverse(), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("square detection") {
    Rational root;
    CHECK(Rational(4, 9).is_square(&root));
    CHECK(root == Rational(2, 3));
    CHECK(Rational(0).is_square(&root));
    CHECK(root.is_zero());
    CHECK_FALSE(Rational(2).is_square());
    CHECK_FALSE(Rational(-4).is_square());
    CHECK_FALSE(Rational(4, 7).is_square());
    // big enough to leave the machine-word range
    Rational big = Rational(mpz_class("123456789123456789")) *
                   Rational(mpz_class("123456789123456789"));
    CHECK(big.is_square(&root));
    CHECK(root == Rational(mpz_class("123456789123456789")));
}
