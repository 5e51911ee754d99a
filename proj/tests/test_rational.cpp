#include <doctest.h>

#include "pacdim/errors.hpp"
#include "pacdim/rational.hpp"
#include "pacdim/sampling.hpp"

using namespace pacdim;

TEST_CASE("rational parsing accepts p/q, integers and decimals") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("7") == Rational(7));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("0.1") == Rational(1, 10));
  CHECK(parse_rational("1.5") == Rational(3, 2));
  CHECK(parse_rational("6/8") == Rational(3, 4));  // normalized
}

TEST_CASE("rational parsing rejects malformed input") {
  CHECK_THROWS_AS(parse_rational("1/0"), validation_error);
  CHECK_THROWS_AS(parse_rational(""), validation_error);
  CHECK_THROWS_AS(parse_rational("a/b"), validation_error);
  CHECK_THROWS_AS(parse_rational("1."), validation_error);
}

TEST_CASE("formatting is canonical p/q") {
  CHECK(format_rational(Rational(0)) == "0/1");
  CHECK(format_rational(Rational(1, 2)) == "1/2");
  CHECK(format_rational(Rational(-3, 2)) == "-3/2");
  CHECK(format_rational(parse_rational("4/8")) == "1/2");
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(10, 2) == 45);
  CHECK(binomial(20, 0) == 1);
  CHECK(binomial(6, 7) == 0);
  CHECK(binomial(30, 15) == BigInt("155117520"));
}

TEST_CASE("fast comparisons agree with the operators") {
  RngStream rng(99, 0);
  for (int i = 0; i < 200; ++i) {
    Rational a(static_cast<long long>(rng.next() % 41) - 20,
               1 + static_cast<long long>(rng.next() % 12));
    Rational b(static_cast<long long>(rng.next() % 41) - 20,
               1 + static_cast<long long>(rng.next() % 12));
    Rational t(static_cast<long long>(rng.next() % 9) - 4,
               1 + static_cast<long long>(rng.next() % 6));
    CHECK(rat_eq(a, b) == (a == b));
    CHECK(rat_less(a, b) == (a < b));
    CHECK(rat_greater(a, b) == (a > b));
    CHECK(rat_diff_leq(a, b, t) == (a - b <= t));
  }
}
