#include <catch2/catch_amalgamated.hpp>

#include "csl/rational.hpp"
#include "csl/sampler.hpp"

using csl::Rational;

TEST_CASE("construction reduces and normalizes the sign") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(-4, -6) == Rational(2, 3));
  CHECK(Rational(7, 3).denominator() == 3);
  CHECK(Rational(3, -6).denominator() == 2);  // denominator stays positive
}

TEST_CASE("zero denominator is rejected") {
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
}

TEST_CASE("text round trip") {
  CHECK(Rational::from_string("3/4").str() == "3/4");
  CHECK(Rational::from_string("-6/8").str() == "-3/4");
  CHECK(Rational::from_string("5").str() == "5");
  CHECK(Rational::from_string("0").str() == "0");
  CHECK_THROWS_AS(Rational::from_string("not-a-number"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 2) - Rational(2, 3) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK(Rational(3, 7).reciprocal() == Rational(7, 3));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
}

TEST_CASE("ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(csl::max(Rational(1, 3), Rational(2, 5)) == Rational(2, 5));
  CHECK(csl::min(Rational(1, 3), Rational(2, 5)) == Rational(1, 3));
  CHECK(csl::abs(Rational(-3, 4)) == Rational(3, 4));
}

TEST_CASE("sampled rationals respect bounds and round-trip through text") {
  csl::Sampler s({7, 16});
  for (int i = 0; i < 200; ++i) {
    const Rational p = s.unit_open();
    CHECK(Rational(0) < p);
    CHECK(p < Rational(1));
    CHECK(p.denominator() <= 16);
    const Rational r = s.rational(-3, 3);
    CHECK(Rational(-3) <= r);
    CHECK(r <= Rational(3));
    CHECK(Rational::from_string(r.str()) == r);
  }
}
