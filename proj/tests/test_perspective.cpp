#include <catch2/catch_amalgamated.hpp>

#include "csl/laws.hpp"
#include "csl/perspective.hpp"
#include "helpers.hpp"

using namespace csl;
using test::qv;

TEST_CASE("perspective evaluates p*x + (1-p)*c") {
  const QVector c = qv({0, 0}), x = qv({2, 4});
  CHECK(perspective(c, Rational(1, 2), x) == qv({1, 2}));
  CHECK(perspective(c, Rational(0), x) == c);
  CHECK(perspective(c, Rational(1), x) == x);
  CHECK(perspective(c, Rational(2), x) == qv({4, 8}));          // extension
  CHECK(perspective(qv({1, 1}), Rational(-1), x) == qv({0, -2}));  // reflection
}

TEST_CASE("solve_swap_params") {
  const auto [r, s] = solve_swap_params(Rational(1, 2), Rational(1, 3));
  CHECK(r == Rational(1, 2));
  CHECK(s == Rational(3, 4));
  // guard: (1-p)(1-q) = 1
  CHECK_THROWS_AS(solve_swap_params(Rational(2), Rational(2)), std::domain_error);
  CHECK_THROWS_AS(solve_swap_params(Rational(0), Rational(0)), std::domain_error);
}

TEST_CASE("solve_assoc_from_pq") {
  {
    const ParamQuadruple quad = solve_assoc_from_pq(Rational(1, 2), Rational(1, 2));
    CHECK(quad.s == Rational(1, 4));
    CHECK(quad.r == Rational(2, 3));
    CHECK(quad.satisfies_system());
  }
  {
    const ParamQuadruple quad = solve_assoc_from_pq(Rational(1, 3), Rational(3, 4));
    CHECK(quad.s == Rational(1, 4));
    CHECK(quad.r == Rational(1, 3));
    CHECK(quad.satisfies_system());
  }
  CHECK_THROWS_AS(solve_assoc_from_pq(Rational(2), Rational(1, 2)), std::domain_error);
}

TEST_CASE("solve_assoc_from_pr") {
  {
    const ParamQuadruple quad = solve_assoc_from_pr(Rational(1, 2), Rational(1, 2));
    CHECK(quad.q == Rational(2, 3));
    CHECK(quad.s == Rational(1, 3));
    CHECK(quad.satisfies_system());
  }
  {
    const ParamQuadruple quad = solve_assoc_from_pr(Rational(1, 2), Rational(1, 4));
    CHECK(quad.q == Rational(6, 7));
    CHECK(quad.s == Rational(3, 7));
    CHECK(quad.satisfies_system());
  }
  CHECK_THROWS_AS(solve_assoc_from_pr(Rational(1, 2), Rational(2)), std::domain_error);
}

TEST_CASE("perspective law reports pass over Q^3") {
  const CheckConfig cfg{101, 120, 32};
  CHECK(check_perspective_identities(3, cfg).passed());
  CHECK(check_perspective_composition(3, cfg).passed());
  CHECK(check_perspective_swap(3, cfg).passed());
  CHECK(check_perspective_associativity(3, cfg).passed());
  CHECK(check_param_solutions(cfg).passed());
  CHECK(check_perspective_inversion(3, cfg).passed());
}

TEST_CASE("a broken shift map is flagged with a re-checkable counterexample") {
  // halving the ratio is affine but respects none of the shift laws
  const PerspectiveFn broken = [](const QVector& c, const Rational& p, const QVector& x) {
    return linear_combine(p / Rational(2), x, Rational(1) - p / Rational(2), c);
  };
  const CheckConfig cfg{202, 120, 32};
  const LawReport rep = check_perspective_composition(3, cfg, broken);
  REQUIRE_FALSE(rep.passed());
  CHECK(rep.cases_run == 120);

  // replay the first recorded counterexample through the broken map
  const auto& fields = rep.violations.front().fields;
  const auto find = [&](const std::string& key) {
    for (const auto& [k, v] : fields)
      if (k == key) return v;
    FAIL("missing field " + key);
    return std::string();
  };
  const QVector c = QVector::from_string(find("c"));
  const QVector x = QVector::from_string(find("x"));
  const Rational p = Rational::from_string(find("p"));
  const Rational q = Rational::from_string(find("q"));
  CHECK(broken(c, p, broken(c, q, x)) == QVector::from_string(find("lhs")));
  CHECK(broken(c, p * q, x) == QVector::from_string(find("rhs")));
  CHECK(find("lhs") != find("rhs"));

  CHECK_FALSE(check_perspective_identities(3, cfg, broken).passed());
  CHECK_FALSE(check_perspective_swap(3, cfg, broken).passed());
  CHECK_FALSE(check_perspective_associativity(3, cfg, broken).passed());
  CHECK_FALSE(check_perspective_inversion(3, cfg, broken).passed());
}

TEST_CASE("law reports are deterministic for a fixed seed") {
  const CheckConfig cfg{7, 50, 16};
  const LawReport a = check_perspective_swap(3, cfg);
  const LawReport b = check_perspective_swap(3, cfg);
  CHECK(a.cases_run == b.cases_run);
  CHECK(a.violations.size() == b.violations.size());
  CHECK(a.seed == 7);
}
