#include <doctest.h>

#include "adlv/rational.hpp"

using adlv::Rational;

TEST_CASE("rational arithmetic is exact and normalized") {
  Rational a(2, 4);
  CHECK(a.num() == 1);
  CHECK(a.den() == 2);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 3) == Rational(0));
  CHECK(Rational(-1, -3) == Rational(1, 3));
  CHECK(Rational(1, -3).num() == -1);
  CHECK(Rational(7) / Rational(2) == Rational(7, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-5, 2) < Rational(-2));
  CHECK(Rational(4, 6).str() == "2/3");
  CHECK(Rational(-8, 2).str() == "-4");
}

TEST_CASE("division by zero and overflow throw") {
  CHECK_THROWS_AS(Rational(1, 0), adlv::Error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), adlv::Error);
  Rational big(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(big * big, adlv::Error);
  CHECK((Rational(INT64_MAX / 4, 2) * Rational(2)).den() == 1);
}
