#include <catch2/catch_amalgamated.hpp>

#include "csl/qvector.hpp"
#include "csl/sampler.hpp"
#include "helpers.hpp"

using csl::QVector;
using csl::Rational;
using test::qv;

TEST_CASE("convex_combine evaluates p*x + (1-p)*y exactly") {
  const QVector x = qv({0, 0}), y = qv({2, 4});
  CHECK(convex_combine(x, y, Rational(1, 2)) == qv({1, 2}));
  CHECK(convex_combine(x, y, Rational(1)) == x);
  CHECK(convex_combine(x, y, Rational(0)) == y);
  CHECK_THROWS_AS(convex_combine(x, qv({1}), Rational(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(convex_combine(x, y, Rational(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(convex_combine(x, y, Rational(-1, 2)), std::invalid_argument);
}

TEST_CASE("linear_combine") {
  CHECK(linear_combine(Rational(2), qv({1, 0}), Rational(3), qv({0, 1})) == qv({2, 3}));
  CHECK(linear_combine(Rational(1), qv({5, 7}), Rational(0), qv({9, 9})) == qv({5, 7}));
  CHECK(linear_combine(Rational(-1), qv({1, 2}), Rational(0), qv({0, 0})) == qv({-1, -2}));
}

TEST_CASE("componentwise sup") {
  CHECK(cwise_sup(qv({1, 3}), qv({2, 1})) == qv({2, 3}));
  CHECK(cwise_sup(qv({0, 0}), qv({-1, -1})) == qv({0, 0}));
  const QVector x = qv({Rational(1, 3), Rational(2, 5)});
  CHECK(cwise_sup(x, x) == x);
}

TEST_CASE("parametric commutativity of convex_combine holds on samples") {
  csl::Sampler s({11, 32});
  for (int i = 0; i < 100; ++i) {
    const QVector x = s.vector(3, -4, 4), y = s.vector(3, -4, 4);
    const Rational p = s.unit_closed();
    CHECK(convex_combine(x, y, p) == convex_combine(y, x, Rational(1) - p));
  }
}

TEST_CASE("cwise_sup is an idempotent commutative associative band on samples") {
  csl::Sampler s({13, 32});
  for (int i = 0; i < 100; ++i) {
    const QVector x = s.vector(3, -4, 4), y = s.vector(3, -4, 4), z = s.vector(3, -4, 4);
    CHECK(cwise_sup(x, x) == x);
    CHECK(cwise_sup(x, y) == cwise_sup(y, x));
    CHECK(cwise_sup(cwise_sup(x, y), z) == cwise_sup(x, cwise_sup(y, z)));
  }
}

TEST_CASE("lexicographic order and text form") {
  CHECK(qv({0, 1}) < qv({1, 0}));
  CHECK(qv({1, 0}) < qv({1, 1}));
  CHECK_FALSE(qv({1, 1}) < qv({1, 1}));
  const QVector v = qv({Rational(1, 2), Rational(-3)});
  CHECK(v.str() == "1/2,-3");
  CHECK(QVector::from_string("1/2,-3") == v);
  CHECK_THROWS_AS(QVector::from_string(""), std::invalid_argument);
}
