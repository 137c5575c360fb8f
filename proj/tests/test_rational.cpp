// Copyright 2026 the ogtame authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "errors.hpp"
#include "rational.hpp"

using namespace ogtame;

TEST_CASE("rational construction canonicalizes") {
  CHECK(Rational(2, 4).to_string() == "1/2");
  CHECK(Rational(-2, 4).to_string() == "-1/2");
  CHECK(Rational(2, -4).to_string() == "-1/2");
  CHECK(Rational(-2, -4).to_string() == "1/2");
  CHECK(Rational(0, 7).to_string() == "0");
  CHECK(Rational(6, 3).to_string() == "2");
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("rational parsing accepts integers and fractions") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("  7 ") == Rational(7));
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK_THROWS_AS(Rational::parse(""), Error);
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("a/b"), Error);
  CHECK_THROWS_AS(Rational::parse("1.5"), Error);
}

TEST_CASE("rational field operations are exact") {
  const Rational a(1, 3);
  const Rational b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK_THROWS_AS(a / Rational(0), Error);
  CHECK_THROWS_AS(Rational(0).reciprocal(), Error);
}

TEST_CASE("rational comparisons and sign") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(7).sign() == 1);
  CHECK(Rational(-7).sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(-3, 5).abs() == Rational(3, 5));
}

TEST_CASE("rational integer powers") {
  CHECK(Rational::pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(Rational::pow(Rational(2, 3), 0) == Rational(1));
  CHECK(Rational::pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(Rational::pow(Rational(-2), 3) == Rational(-8));
  CHECK_THROWS_AS(Rational::pow(Rational(0), -1), Error);
}

TEST_CASE("rational accessors") {
  const Rational q(10, -15);
  CHECK(q.to_string() == "-2/3");
  CHECK(!q.is_integer());
  CHECK(Rational(4, 2).is_integer());
  CHECK(Rational(1).is_one());
  CHECK(Rational(0).is_zero());
  CHECK(Rational(5, 3).reciprocal() == Rational(3, 5));
}
