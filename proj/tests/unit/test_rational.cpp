#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>

#include "topocryst/rational.hpp"

using topocryst::Rational;

TEST_CASE("construction normalizes sign and gcd") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(6, 3).is_integer());
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("ordering crosses denominators exactly") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(7, 5) > Rational(4, 3));
  CHECK(abs(Rational(-3, 4)) == Rational(3, 4));
}

TEST_CASE("parse and format") {
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("-3/9") == Rational(-1, 3));
  CHECK(Rational::parse("+4/6") == Rational(2, 3));
  CHECK(Rational(5, 10).str() == "1/2");
  CHECK(Rational(-7).str() == "-7");
  CHECK_THROWS_AS(Rational::parse("a/2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
}

TEST_CASE("overflow is detected, not wrapped") {
  const long long big = std::numeric_limits<long long>::max() / 2;
  Rational huge(big, 1);
  CHECK_THROWS_AS(huge * huge, std::overflow_error);
  // sums that reduce back into range are fine
  CHECK(Rational(big, 2) + Rational(big, 2) == Rational(big));
}
