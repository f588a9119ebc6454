#include "doctest.h"

#include "crosslab/rational.hpp"

using namespace crosslab;

TEST_CASE("floor and ceil on rationals") {
  CHECK(floor_int(Rational(7, 2)) == 3);
  CHECK(floor_int(Rational(-7, 2)) == -4);
  CHECK(floor_int(Rational(6, 2)) == 3);
  CHECK(ceil_int(Rational(7, 2)) == 4);
  CHECK(ceil_int(Rational(-7, 2)) == -3);
  CHECK(ceil_int(Rational(6, 2)) == 3);
  CHECK(floor_int(Rational(0)) == 0);
}

TEST_CASE("integers strictly between two rationals") {
  // Endpoints are excluded even when integral.
  CHECK(integers_strictly_between(Rational(0), Rational(1)) == 0);
  CHECK(integers_strictly_between(Rational(0), Rational(2)) == 1);
  CHECK(integers_strictly_between(Rational(-1, 2), Rational(1, 2)) == 1);
  CHECK(integers_strictly_between(Rational(2, 5), Rational(-3, 10)) == 1);
  CHECK(integers_strictly_between(Rational(1, 2), Rational(1, 2)) == 0);
  CHECK(integers_strictly_between(Rational(5, 2), Rational(-5, 2)) == 5);
  CHECK(integers_strictly_between(Rational(3), Rational(3)) == 0);
  CHECK(integers_strictly_between(Rational(-7, 3), Rational(7, 3)) == 5);
}

TEST_CASE("rational formatting is canonical p/q") {
  CHECK(format_rational(Rational(3)) == "3/1");
  CHECK(format_rational(Rational(0)) == "0/1");
  CHECK(format_rational(Rational(-6, 4)) == "-3/2");
  CHECK(format_rational(Rational(10, 5)) == "2/1");
}

TEST_CASE("rational parsing accepts p/q and bare integers") {
  CHECK(parse_rational("3/2") == Rational(3, 2));
  CHECK(parse_rational("-3/2") == Rational(-3, 2));
  CHECK(parse_rational("3/-2") == Rational(-3, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("0/1") == Rational(0));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
}

TEST_CASE("round-trip format -> parse is the identity") {
  for (int p = -8; p <= 8; ++p) {
    for (int q = 1; q <= 6; ++q) {
      Rational r(p, q);
      CHECK(parse_rational(format_rational(r)) == r);
    }
  }
}

TEST_CASE("conversion from double hits exact dyadics and simple fractions") {
  CHECK(rational_from_double(0.5) == Rational(1, 2));
  CHECK(rational_from_double(-0.25) == Rational(-1, 4));
  CHECK(rational_from_double(3.0) == Rational(3));
  // 1/3 is not a double; the convergent must still be exactly 1/3.
  CHECK(rational_from_double(1.0 / 3.0) == Rational(1, 3));
}
