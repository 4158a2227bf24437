#include <doctest.h>

#include <random>

#include "kminor/error.hpp"
#include "kminor/rational.hpp"

using namespace kminor;

TEST_SUITE("rational") {

TEST_CASE("parse fractions, integers and decimals") {
  CHECK(parse_rational("5/1232") == Rational(5, 1232));
  CHECK(parse_rational(" -6/4 ") == Rational(-3, 2));
  CHECK(parse_rational("42") == Rational(42));
  CHECK(parse_rational("-1.25") == Rational(-5, 4));
  CHECK(parse_rational("3e-2") == Rational(3, 100));
}

TEST_CASE("malformed literals are input errors") {
  for (const char* bad : {"", "1/0", "a/2", "1.2.3", "1e", "--1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), Error);
  }
}

TEST_CASE("to_string round-trips") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-100000, 100000), den(1, 100000);
  for (int trial = 0; trial < 500; ++trial) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    CHECK(parse_rational(to_string(r)) == r);
  }
}

TEST_CASE("decimal rendering rounds half away from zero") {
  CHECK(to_decimal(Rational(1, 8), 2) == "0.13");
  CHECK(to_decimal(Rational(-1, 8), 2) == "-0.13");
  CHECK(to_decimal(Rational(1, 3), 4) == "0.3333");
  CHECK(to_decimal(Rational(-1, 1000), 2) == "0.00");
  CHECK(to_decimal(Rational(7), 0) == "7");
}

TEST_CASE("floor and ceil") {
  CHECK(floor(Rational(71, 20)) == 3);
  CHECK(floor(Rational(-1, 2)) == -1);
  CHECK(ceil(Rational(-1, 2)) == 0);
  CHECK(ceil(Rational(4)) == 4);
  CHECK(is_integer(make_rational(8, 4)));
  CHECK_FALSE(is_integer(Rational(8, 3)));
}

TEST_CASE("doubles convert exactly") {
  CHECK(from_double(0.375) == Rational(3, 8));
  CHECK(to_double(from_double(0.1)) == 0.1);
  CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
  CHECK(abs(Rational(-2, 3)) == Rational(2, 3));
  CHECK(sum({Rational(1, 2), Rational(1, 3), Rational(1, 6)}) == 1);
}

}
