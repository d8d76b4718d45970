#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "csl/instance.hpp"
#include "csl/perspective.hpp"
#include "csl/qvector.hpp"
#include "csl/sampler.hpp"

namespace csl {

// A counterexample record: inputs plus both evaluated sides, all as exact
// rational text so the violation can be re-checked independently.
struct Violation {
  std::vector<std::pair<std::string, std::string>> fields;
};

struct LawReport {
  std::string law;
  std::uint64_t seed = 0;
  std::size_t cases_run = 0;
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
};

struct CheckConfig {
  std::uint64_t seed = 0;
  std::size_t cases = 500;
  long denominator_bound = 64;

  SamplerConfig sampler() const { return {seed, denominator_bound}; }
};

namespace detail {
inline void record(LawReport& rep,
                   std::initializer_list<std::pair<std::string, std::string>> fields) {
  Violation v;
  v.fields.assign(fields.begin(), fields.end());
  rep.violations.push_back(std::move(v));
}
}  // namespace detail

// Operation hooks: checkers run against these instead of the concrete
// operations, so test harnesses can substitute deliberately broken variants.
struct AlgebraOps {
  std::function<QVector(const QVector&, const QVector&, const Rational&)> combine;  // x +_p y
  std::function<QVector(const QVector&, const QVector&)> join;                      // x ⊕ y

  static AlgebraOps standard() {
    return {[](const QVector& x, const QVector& y, const Rational& p) {
              return convex_combine(x, y, p);
            },
            [](const QVector& x, const QVector& y) { return cwise_sup(x, y); }};
  }

  bool leq(const QVector& x, const QVector& y) const { return join(x, y) == y; }
};

// --- convex semilattice axioms on a concrete instance ----------------------

inline LawReport check_convex_axioms(const SemilatticeInstance& inst, const CheckConfig& cfg,
                                     const AlgebraOps& ops = AlgebraOps::standard()) {
  LawReport rep{"convex-axioms", cfg.seed, 0, {}};
  Sampler s(cfg.sampler());
  const Polytope& P = inst.carrier();
  const Rational one(1);

  // Endpoint conventions x +_1 y = x, x +_0 y = y as fixed cases.
  {
    const QVector x = s.carrier_point(P), y = s.carrier_point(P);
    ++rep.cases_run;
    if (ops.combine(x, y, one) != x)
      detail::record(rep, {{"axiom", "p=1 identity"}, {"x", x.str()}, {"y", y.str()},
                           {"lhs", ops.combine(x, y, one).str()}, {"rhs", x.str()}});
    ++rep.cases_run;
    if (ops.combine(x, y, Rational(0)) != y)
      detail::record(rep, {{"axiom", "p=0 identity"}, {"x", x.str()}, {"y", y.str()},
                           {"lhs", ops.combine(x, y, Rational(0)).str()}, {"rhs", y.str()}});
  }

  for (std::size_t i = 0; i < cfg.cases; ++i) {
    ++rep.cases_run;
    const QVector x = s.carrier_point(P), y = s.carrier_point(P), z = s.carrier_point(P);
    const Rational p = s.unit_open(), q = s.unit_open();

    const QVector idem = ops.combine(x, x, p);
    if (idem != x)
      detail::record(rep, {{"axiom", "idempotence"}, {"x", x.str()}, {"p", p.str()},
                           {"lhs", idem.str()}, {"rhs", x.str()}});

    const QVector lhs_c = ops.combine(x, y, p);
    const QVector rhs_c = ops.combine(y, x, one - p);
    if (lhs_c != rhs_c)
      detail::record(rep, {{"axiom", "parametric commutativity"}, {"x", x.str()},
                           {"y", y.str()}, {"p", p.str()}, {"lhs", lhs_c.str()},
                           {"rhs", rhs_c.str()}});

    // (x +_p y) +_q z = x +_{pq} (y +_{(1-p)q/(1-pq)} z); pq < 1 here.
    const Rational inner = (one - p) * q / (one - p * q);
    const QVector lhs_a = ops.combine(ops.combine(x, y, p), z, q);
    const QVector rhs_a = ops.combine(x, ops.combine(y, z, inner), p * q);
    if (lhs_a != rhs_a)
      detail::record(rep, {{"axiom", "parametric associativity"}, {"x", x.str()},
                           {"y", y.str()}, {"z", z.str()}, {"p", p.str()}, {"q", q.str()},
                           {"lhs", lhs_a.str()}, {"rhs", rhs_a.str()}});
  }
  return rep;
}

inline LawReport check_semilattice_axioms(const SemilatticeInstance& inst,
                                          const CheckConfig& cfg,
                                          const AlgebraOps& ops = AlgebraOps::standard()) {
  LawReport rep{"semilattice-axioms", cfg.seed, 0, {}};
  Sampler s(cfg.sampler());
  const Polytope& P = inst.carrier();
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    ++rep.cases_run;
    const QVector x = s.carrier_point(P), y = s.carrier_point(P), z = s.carrier_point(P);
    if (ops.join(x, x) != x)
      detail::record(rep, {{"axiom", "idempotence"}, {"x", x.str()},
                           {"lhs", ops.join(x, x).str()}, {"rhs", x.str()}});
    if (ops.join(x, y) != ops.join(y, x))
      detail::record(rep, {{"axiom", "commutativity"}, {"x", x.str()}, {"y", y.str()},
                           {"lhs", ops.join(x, y).str()}, {"rhs", ops.join(y, x).str()}});
    const QVector lhs = ops.join(ops.join(x, y), z);
    const QVector rhs = ops.join(x, ops.join(y, z));
    if (lhs != rhs)
      detail::record(rep, {{"axiom", "associativity"}, {"x", x.str()}, {"y", y.str()},
                           {"z", z.str()}, {"lhs", lhs.str()}, {"rhs", rhs.str()}});
  }
  return rep;
}

// (x ⊕ y) +_p z = (x +_p z) ⊕ (y +_p z)
inline LawReport check_distributivity(const SemilatticeInstance& inst, const CheckConfig& cfg,
                                      const AlgebraOps& ops = AlgebraOps::standard()) {
  LawReport rep{"distributivity", cfg.seed, 0, {}};
  Sampler s(cfg.sampler());
  const Polytope& P = inst.carrier();
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    ++rep.cases_run;
    const QVector x = s.carrier_point(P), y = s.carrier_point(P), z = s.carrier_point(P);
    const Rational p = s.unit_open();
    const QVector lhs = ops.combine(ops.join(x, y), z, p);
    const QVector rhs = ops.join(ops.combine(x, z, p), ops.combine(y, z, p));
    if (lhs != rhs)
      detail::record(rep, {{"x", x.str()}, {"y", y.str()}, {"z", z.str()}, {"p", p.str()},
                           {"lhs", lhs.str()}, {"rhs", rhs.str()}});
  }
  return rep;
}

// Contrapositive form: x != y implies x +_p z != y +_p z.
inline LawReport check_cancellativity(const SemilatticeInstance& inst, const CheckConfig& cfg,
                                      const AlgebraOps& ops = AlgebraOps::standard()) {
  LawReport rep{"cancellativity", cfg.seed, 0, {}};
  Sampler s(cfg.sampler());
  const Polytope& P = inst.carrier();
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    QVector x = s.carrier_point(P);
    QVector y = s.carrier_point(P);
    if (P.vertices().size() == 1) break;  // singleton carrier: nothing to cancel
    while (x == y) y = s.carrier_point(P);  // degenerate draws are re-drawn, not counted
    const QVector z = s.carrier_point(P);
    const Rational p = s.unit_open();
    ++rep.cases_run;
    const QVector lhs = ops.combine(x, z, p);
    const QVector rhs = ops.combine(y, z, p);
    if (lhs == rhs)
      detail::record(rep, {{"x", x.str()}, {"y", y.str()}, {"z", z.str()}, {"p", p.str()},
                           {"lhs", lhs.str()}, {"rhs", rhs.str()}});
  }
  return rep;
}

// Order cancellation: x +_p z <= y +_p z implies x <= y.
inline LawReport check_order_cancellation(const SemilatticeInstance& inst,
                                          const CheckConfig& cfg,
                                          const AlgebraOps& ops = AlgebraOps::standard()) {
  LawReport rep{"order-cancellation", cfg.seed, 0, {}};
  Sampler s(cfg.sampler());
  const Polytope& P = inst.carrier();
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    ++rep.cases_run;
    const QVector x = s.carrier_point(P), y = s.carrier_point(P), z = s.carrier_point(P);
    const Rational p = s.unit_open();
    if (ops.leq(ops.combine(x, z, p), ops.combine(y, z, p)) && !ops.leq(x, y))
      detail::record(rep, {{"x", x.str()}, {"y", y.str()}, {"z", z.str()}, {"p", p.str()},
                           {"x+pz", ops.combine(x, z, p).str()},
                           {"y+pz", ops.combine(y, z, p).str()}});
  }
  return rep;
}

// P(c,p,.) restricted to the carrier is a convex semilattice homomorphism.
inline LawReport check_perspective_homomorphism(const SemilatticeInstance& inst,
                                                const CheckConfig& cfg,
                                                const AlgebraOps& ops = AlgebraOps::standard()) {
  LawReport rep{"perspective-homomorphism", cfg.seed, 0, {}};
  Sampler s(cfg.sampler());
  const Polytope& P = inst.carrier();
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    ++rep.cases_run;
    const QVector c = s.carrier_point(P), x = s.carrier_point(P), y = s.carrier_point(P);
    const Rational p = s.unit_closed(), q = s.unit_closed();  // endpoints included
    const QVector px = perspective(c, p, x), py = perspective(c, p, y);

    const QVector lhs_c = ops.combine(px, py, q);
    const QVector rhs_c = perspective(c, p, ops.combine(x, y, q));
    if (lhs_c != rhs_c)
      detail::record(rep, {{"identity", "convex"}, {"c", c.str()}, {"p", p.str()},
                           {"x", x.str()}, {"y", y.str()}, {"q", q.str()},
                           {"lhs", lhs_c.str()}, {"rhs", rhs_c.str()}});

    const QVector lhs_j = ops.join(px, py);
    const QVector rhs_j = perspective(c, p, ops.join(x, y));
    if (lhs_j != rhs_j)
      detail::record(rep, {{"identity", "join"}, {"c", c.str()}, {"p", p.str()},
                           {"x", x.str()}, {"y", y.str()}, {"lhs", lhs_j.str()},
                           {"rhs", rhs_j.str()}});
  }
  return rep;
}

// --- perspective-shift calculus on Q^dim ------------------------------------

using PerspectiveFn =
    std::function<QVector(const QVector&, const Rational&, const QVector&)>;

inline PerspectiveFn standard_perspective() {
  return [](const QVector& c, const Rational& p, const QVector& x) {
    return perspective(c, p, x);
  };
}

// P(c,0,x) = c and P(c,1,x) = x.
inline LawReport check_perspective_identities(std::size_t dim, const CheckConfig& cfg,
                                              const PerspectiveFn& P = standard_perspective()) {
  LawReport rep{"perspective-identities", cfg.seed, 0, {}};
  Sampler s(cfg.sampler());
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    ++rep.cases_run;
    const QVector c = s.vector(dim, -4, 4), x = s.vector(dim, -4, 4);
    if (P(c, Rational(0), x) != c)
      detail::record(rep, {{"identity", "ratio 0"}, {"c", c.str()}, {"x", x.str()},
                           {"lhs", P(c, Rational(0), x).str()}, {"rhs", c.str()}});
    if (P(c, Rational(1), x) != x)
      detail::record(rep, {{"identity", "ratio 1"}, {"c", c.str()}, {"x", x.str()},
                           {"lhs", P(c, Rational(1), x).str()}, {"rhs", x.str()}});
  }
  return rep;
}

// P(c,p,.) ∘ P(c,q,.) = P(c,pq,.) for arbitrary rational ratios.
inline LawReport check_perspective_composition(std::size_t dim, const CheckConfig& cfg,
                                               const PerspectiveFn& P = standard_perspective()) {
  LawReport rep{"perspective-composition", cfg.seed, 0, {}};
  Sampler s(cfg.sampler());
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    ++rep.cases_run;
    const QVector c = s.vector(dim, -4, 4), x = s.vector(dim, -4, 4);
    const Rational p = s.rational(-3, 3), q = s.rational(-3, 3);
    const QVector lhs = P(c, p, P(c, q, x));
    const QVector rhs = P(c, p * q, x);
    if (lhs != rhs)
      detail::record(rep, {{"c", c.str()}, {"x", x.str()}, {"p", p.str()}, {"q", q.str()},
                           {"lhs", lhs.str()}, {"rhs", rhs.str()}});
  }
  return rep;
}

// Swap law with the solved parameters: P(d,r,P(c,p,x)) = P(c,s,P(d,q,x)).
inline LawReport check_perspective_swap(std::size_t dim, const CheckConfig& cfg,
                                        const PerspectiveFn& P = standard_perspective()) {
  LawReport rep{"perspective-swap", cfg.seed, 0, {}};
  Sampler s(cfg.sampler());
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    ++rep.cases_run;
    const QVector c = s.vector(dim, -4, 4), d = s.vector(dim, -4, 4), x = s.vector(dim, -4, 4);
    Rational p = s.rational(-3, 3), q = s.rational(-3, 3);
    while ((p + q - p * q).is_zero()) {
      p = s.rational(-3, 3);
      q = s.rational(-3, 3);
    }
    const auto [r, sw] = solve_swap_params(p, q);
    const QVector lhs = P(d, r, P(c, p, x));
    const QVector rhs = P(c, sw, P(d, q, x));
    if (lhs != rhs)
      detail::record(rep, {{"c", c.str()}, {"d", d.str()}, {"x", x.str()}, {"p", p.str()},
                           {"q", q.str()}, {"r", r.str()}, {"s", sw.str()},
                           {"lhs", lhs.str()}, {"rhs", rhs.str()}});
  }
  return rep;
}

// Nested-shift collapse with quadruples from both parameter solvers:
// P(d,q,P(c,p,x)) = P(P(c,r,d),s,x).
inline LawReport check_perspective_associativity(std::size_t dim, const CheckConfig& cfg,
                                                 const PerspectiveFn& P = standard_perspective()) {
  LawReport rep{"perspective-associativity", cfg.seed, 0, {}};
  Sampler s(cfg.sampler());
  const auto check = [&](const ParamQuadruple& quad, const char* solver) {
    const QVector c = s.vector(dim, -4, 4), d = s.vector(dim, -4, 4), x = s.vector(dim, -4, 4);
    const QVector lhs = P(d, quad.q, P(c, quad.p, x));
    const QVector rhs = P(P(c, quad.r, d), quad.s, x);
    if (lhs != rhs)
      detail::record(rep, {{"solver", solver}, {"c", c.str()}, {"d", d.str()}, {"x", x.str()},
                           {"p", quad.p.str()}, {"q", quad.q.str()}, {"r", quad.r.str()},
                           {"s", quad.s.str()}, {"lhs", lhs.str()}, {"rhs", rhs.str()}});
  };
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    ++rep.cases_run;
    Rational p = s.rational(-3, 3), q = s.rational(-3, 3);
    while (p * q == Rational(1)) q = s.rational(-3, 3);
    check(solve_assoc_from_pq(p, q), "from-pq");
    Rational r = s.rational(-3, 3);
    while (p * r == Rational(1)) r = s.rational(-3, 3);
    check(solve_assoc_from_pr(p, r), "from-pr");
  }
  return rep;
}

// Any two equations of the parameter system imply the third, and solutions
// from (0,1) inputs stay in (0,1).
inline LawReport check_param_solutions(const CheckConfig& cfg) {
  LawReport rep{"parameter-solutions", cfg.seed, 0, {}};
  Sampler s(cfg.sampler());
  const auto in_unit = [](const Rational& v) { return Rational(0) < v && v < Rational(1); };
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    ++rep.cases_run;
    Rational p = s.rational(-3, 3), q = s.rational(-3, 3);
    while (p * q == Rational(1)) q = s.rational(-3, 3);
    const ParamQuadruple a = solve_assoc_from_pq(p, q);
    if (!a.satisfies_system())
      detail::record(rep, {{"solver", "from-pq"}, {"p", p.str()}, {"q", q.str()},
                           {"r", a.r.str()}, {"s", a.s.str()}});
    Rational r = s.rational(-3, 3);
    while (p * r == Rational(1)) r = s.rational(-3, 3);
    const ParamQuadruple b = solve_assoc_from_pr(p, r);
    if (!b.satisfies_system())
      detail::record(rep, {{"solver", "from-pr"}, {"p", p.str()}, {"r", r.str()},
                           {"q", b.q.str()}, {"s", b.s.str()}});

    const Rational pu = s.unit_open(), qu = s.unit_open(), ru = s.unit_open();
    const ParamQuadruple au = solve_assoc_from_pq(pu, qu);
    if (!in_unit(au.r) || !in_unit(au.s))
      detail::record(rep, {{"claim", "range from-pq"}, {"p", pu.str()}, {"q", qu.str()},
                           {"r", au.r.str()}, {"s", au.s.str()}});
    const ParamQuadruple bu = solve_assoc_from_pr(pu, ru);
    if (!in_unit(bu.q) || !in_unit(bu.s))
      detail::record(rep, {{"claim", "range from-pr"}, {"p", pu.str()}, {"r", ru.str()},
                           {"q", bu.q.str()}, {"s", bu.s.str()}});
  }
  return rep;
}

// P(c,1/p,.) inverts P(c,p,.) for p != 0.
inline LawReport check_perspective_inversion(std::size_t dim, const CheckConfig& cfg,
                                             const PerspectiveFn& P = standard_perspective()) {
  LawReport rep{"perspective-inversion", cfg.seed, 0, {}};
  Sampler s(cfg.sampler());
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    ++rep.cases_run;
    const QVector c = s.vector(dim, -4, 4), x = s.vector(dim, -4, 4);
    const Rational p = s.nonzero_rational(-3, 3);
    const QVector back = P(c, p.reciprocal(), P(c, p, x));
    if (back != x)
      detail::record(rep, {{"c", c.str()}, {"x", x.str()}, {"p", p.str()},
                           {"lhs", back.str()}, {"rhs", x.str()}});
  }
  return rep;
}

}  // namespace csl
