#include "doctest.h"

#include "sched/rational.hpp"

using namespace sched;

TEST_CASE("parsing accepts fractions, integers, and decimals exactly") {
  CHECK(parse_rational("3/4") == make_rational(3, 4));
  CHECK(parse_rational("-7/14") == make_rational(-1, 2));
  CHECK(parse_rational("12") == Rational(12));
  CHECK(parse_rational("2.75") == make_rational(11, 4));
  CHECK(parse_rational("-0.125") == make_rational(-1, 8));
  CHECK(parse_rational(" 5 / 10 ") == make_rational(1, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("to_string produces canonical forms") {
  CHECK(to_string(make_rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(5)) == "5");
  CHECK(to_string(make_rational(-6, 4)) == "-3/2");
}

TEST_CASE("floor and ceil") {
  CHECK(floor_to_int(make_rational(7, 2)) == 3);
  CHECK(ceil_to_int(make_rational(7, 2)) == 4);
  CHECK(floor_to_int(make_rational(-7, 2)) == -4);
  CHECK(ceil_to_int(make_rational(-7, 2)) == -3);
  CHECK(floor_to_int(Rational(4)) == 4);
  CHECK(ceil_to_int(Rational(4)) == 4);
}

TEST_CASE("pow2 and pow_int handle negative exponents") {
  CHECK(pow2(5) == 32);
  CHECK(pow2(0) == 1);
  CHECK(pow2(-2) == make_rational(1, 4));
  CHECK(pow_int(make_rational(3, 2), 3) == make_rational(27, 8));
  CHECK(pow_int(make_rational(3, 2), -2) == make_rational(4, 9));
  CHECK(pow_int(make_rational(3, 2), 0) == 1);
}

TEST_CASE("floor_log matches exact powers and straddles") {
  CHECK(floor_log(Rational(2), Rational(1)) == 0);
  CHECK(floor_log(Rational(2), Rational(2)) == 1);
  CHECK(floor_log(Rational(2), make_rational(7, 2)) == 1);
  CHECK(floor_log(Rational(2), Rational(4)) == 2);
  CHECK(floor_log(Rational(2), make_rational(1, 2)) == -1);
  CHECK(floor_log(Rational(2), make_rational(1, 3)) == -2);
  CHECK(floor_log(make_rational(3, 2), make_rational(9, 4)) == 2);
  CHECK(floor_log(make_rational(3, 2), make_rational(8, 4)) == 1);
  // Large swings, still exact.
  CHECK(floor_log(Rational(2), pow2(40)) == 40);
  CHECK(floor_log(Rational(2), pow2(40) - make_rational(1, 7)) == 39);
}

TEST_CASE("integer roots") {
  CHECK(isqrt_floor(Integer(0)) == 0);
  CHECK(isqrt_floor(Integer(17)) == 4);
  CHECK(isqrt_floor(Integer(16)) == 4);
  CHECK(icbrt_floor(Integer(26)) == 2);
  CHECK(icbrt_floor(Integer(27)) == 3);
}
