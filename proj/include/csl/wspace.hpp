#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "csl/instance.hpp"
#include "csl/laws.hpp"
#include "csl/lp.hpp"
#include "csl/perspective.hpp"
#include "csl/sampler.hpp"

namespace csl {

// Certificate that a point belongs to W = {x : ∃c ∈ X, p ∈ (0,1], P(c,p,x) ∈ X}.
struct Witness {
  QVector center;
  Rational ratio;
};

struct WMembershipResult {
  bool member = false;
  std::optional<Rational> p_max;
  std::optional<Witness> witness;
};

namespace detail {
inline void validate_witness(const SemilatticeInstance& inst, const QVector& point,
                             const Witness& w, const char* where) {
  if (!(Rational(0) < w.ratio) || w.ratio > Rational(1))
    throw std::logic_error(std::string(where) + ": witness ratio outside (0,1]");
  if (!inst.contains(w.center))
    throw std::logic_error(std::string(where) + ": witness center outside the carrier");
  if (!inst.contains(perspective(w.center, w.ratio, point)))
    throw std::logic_error(std::string(where) + ": witness does not map the point into the carrier");
}
}  // namespace detail

// Decides x ∈ W and computes the largest attainable ratio by one exact LP:
//   maximize p  s.t.  p*x + Σ mu_i v_i = Σ lam_j v_j,
//                     Σ mu_i = 1 - p,  Σ lam_j = 1,  mu, lam >= 0,  0 <= p <= 1,
// where Σ mu_i v_i stands in for (1-p)*c, linearizing the bilinear term.
inline WMembershipResult w_membership(const SemilatticeInstance& inst, const QVector& x) {
  if (x.dim() != inst.dim()) throw std::invalid_argument("w_membership: dimension mismatch");
  const auto& vs = inst.carrier().vertices();
  const std::size_t k = vs.size();
  const std::size_t d = inst.dim();

  LinearProgram lp;
  lp.num_vars = 1 + 2 * k;  // p, mu_1..mu_k, lam_1..lam_k
  lp.objective.assign(lp.num_vars, Rational(0));
  lp.objective[0] = Rational(1);
  for (std::size_t i = 0; i < lp.num_vars; ++i) lp.nonneg_vars.push_back(i);
  lp.upper_bounds[0] = Rational(1);
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<Rational> row(lp.num_vars, Rational(0));
    row[0] = x[j];
    for (std::size_t i = 0; i < k; ++i) {
      row[1 + i] = vs[i][j];
      row[1 + k + i] = -vs[i][j];
    }
    lp.eq_constraints.emplace_back(std::move(row), Rational(0));
  }
  {
    std::vector<Rational> row(lp.num_vars, Rational(0));
    row[0] = Rational(1);
    for (std::size_t i = 0; i < k; ++i) row[1 + i] = Rational(1);
    lp.eq_constraints.emplace_back(std::move(row), Rational(1));
  }
  {
    std::vector<Rational> row(lp.num_vars, Rational(0));
    for (std::size_t i = 0; i < k; ++i) row[1 + k + i] = Rational(1);
    lp.eq_constraints.emplace_back(std::move(row), Rational(1));
  }

  const LpOutcome out = lp_solve(lp);
  if (out.status != LpStatus::optimal)
    throw std::logic_error("w_membership: membership LP must be feasible and bounded");
  const Rational p_max = *out.value;
  if (p_max.is_zero()) return {};

  QVector center = x;  // at p = 1 the center is unconstrained; pick x for determinism
  if (p_max < Rational(1)) {
    QVector scaled = QVector::zero(d);  // (1-p)*c
    for (std::size_t i = 0; i < k; ++i)
      scaled = linear_combine(Rational(1), scaled, (*out.point)[1 + i], vs[i]);
    center = (Rational(1) - p_max).reciprocal() * scaled;
  }
  const Witness w{center, p_max};
  detail::validate_witness(inst, x, w, "w_membership");
  return {true, p_max, w};
}

// Verification probe for the shrink property: ratios below p_max keep the
// shifted point inside the carrier.
inline bool monotone_shrink_check(const SemilatticeInstance& inst, const QVector& x,
                                  const WMembershipResult& result, const Rational& q) {
  if (!result.member) throw std::invalid_argument("monotone_shrink_check: not a W-member");
  if (!(Rational(0) < q) || !(q < *result.p_max))
    throw std::invalid_argument("monotone_shrink_check: q outside (0, p_max)");
  return inst.contains(perspective(result.witness->center, q, x));
}

// One (c, p) valid for every listed point: centers are averaged and the
// ratio is half the minimum of the per-point shrunk ratios
// p_i * (1/n) / (1 - p_i * (n-1)/n).
inline Witness common_witness(const SemilatticeInstance& inst, std::span<const QVector> xs) {
  if (xs.empty()) throw std::invalid_argument("common_witness: empty point list");
  std::vector<Witness> singles;
  singles.reserve(xs.size());
  for (const auto& x : xs) {
    const WMembershipResult r = w_membership(inst, x);
    if (!r.member) throw std::domain_error("common_witness: point is not a member of W");
    singles.push_back(*r.witness);
  }
  if (xs.size() == 1) return singles.front();

  const Rational n(static_cast<long>(xs.size()));
  const Rational inv_n = n.reciprocal();
  QVector center = QVector::zero(inst.dim());
  for (const auto& w : singles)
    center = linear_combine(Rational(1), center, inv_n, w.center);

  std::optional<Rational> lowest;
  for (const auto& w : singles) {
    const Rational shrunk = w.ratio * inv_n / (Rational(1) - w.ratio * (n - Rational(1)) * inv_n);
    if (!lowest || shrunk < *lowest) lowest = shrunk;
  }
  const Witness common{center, *lowest / Rational(2)};
  if (!inst.contains(common.center))
    throw std::logic_error("common_witness: averaged center left the carrier");
  for (const auto& x : xs) detail::validate_witness(inst, x, common, "common_witness");
  return common;
}

// Witness for q*x from a witness (c, p) for x, q > 1:
// center (1-p)/(1-p/q) * c, ratio p/q.
inline Witness w_scale_witness(const SemilatticeInstance& inst, const QVector& x,
                               const Rational& q, const Witness& w) {
  if (!(q > Rational(1))) throw std::invalid_argument("w_scale_witness: requires q > 1");
  const Rational p = w.ratio;
  const Rational t = (Rational(1) - p) / (Rational(1) - p / q);
  const Witness scaled{t * w.center, p / q};
  detail::validate_witness(inst, q * x, scaled, "w_scale_witness");
  return scaled;
}

// Witness for -x from a witness (c, p) for x: center P(c,p,x), ratio p/(1+p).
// A ratio of 1 is first shrunk to 1/2, which stays valid by the shrink property.
inline Witness w_negate_witness(const SemilatticeInstance& inst, const QVector& x,
                                const Witness& w) {
  Rational p = w.ratio;
  if (p == Rational(1)) p = Rational(1, 2);
  const Witness negated{perspective(w.center, p, x), p / (Rational(1) + p)};
  detail::validate_witness(inst, -x, negated, "w_negate_witness");
  return negated;
}

// ⊞ evaluated through an explicit common witness:
// x1 ⊞ x2 = P(c, 1/p, P(c,p,x1) ⊕ P(c,p,x2)).
inline QVector w_join_with_witness(const SemilatticeInstance& inst, const QVector& x1,
                                   const QVector& x2, const Witness& w,
                                   const AlgebraOps& ops = AlgebraOps::standard()) {
  const QVector a = perspective(w.center, w.ratio, x1);
  const QVector b = perspective(w.center, w.ratio, x2);
  if (!inst.contains(a) || !inst.contains(b))
    throw std::domain_error("w_join: witness does not map both points into the carrier");
  return perspective(w.center, w.ratio.reciprocal(), ops.join(a, b));
}

// The extended join on W; independent of the witness choice.
inline QVector w_join(const SemilatticeInstance& inst, const QVector& x1, const QVector& x2,
                      const AlgebraOps& ops = AlgebraOps::standard()) {
  const QVector pts[] = {x1, x2};
  return w_join_with_witness(inst, x1, x2, common_witness(inst, pts), ops);
}

// --- W-construction law suite -----------------------------------------------

namespace detail {
// Sampled W-point; re-verified so sampler bugs abort the suite.
inline QVector sampled_w_point(const SemilatticeInstance& inst, Sampler& s) {
  const QVector x = s.span_point(inst);
  if (!w_membership(inst, x).member)
    throw std::logic_error("W sampler produced a non-member of W");
  return x;
}
}  // namespace detail

// ⊞ semilattice axioms, the carrier-restricted distributivity
// (x ⊞ y) +_q d = (x +_q d) ⊞ (y +_q d) for d ∈ X, and the same law with a
// third W-point in place of d.
inline std::vector<LawReport> verify_w_axioms(const SemilatticeInstance& inst,
                                              const CheckConfig& cfg,
                                              const AlgebraOps& ops = AlgebraOps::standard()) {
  LawReport sl{"w-semilattice-axioms", cfg.seed, 0, {}};
  LawReport dc{"w-distributivity-carrier", cfg.seed, 0, {}};
  LawReport df{"w-distributivity-full", cfg.seed, 0, {}};
  Sampler s(cfg.sampler());
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    const QVector x = detail::sampled_w_point(inst, s);
    const QVector y = detail::sampled_w_point(inst, s);
    const QVector z = detail::sampled_w_point(inst, s);
    const QVector d = s.carrier_point(inst.carrier());
    const Rational q = s.unit_open();

    ++sl.cases_run;
    if (w_join(inst, x, x, ops) != x)
      detail::record(sl, {{"axiom", "idempotence"}, {"x", x.str()},
                          {"lhs", w_join(inst, x, x, ops).str()}, {"rhs", x.str()}});
    if (w_join(inst, x, y, ops) != w_join(inst, y, x, ops))
      detail::record(sl, {{"axiom", "commutativity"}, {"x", x.str()}, {"y", y.str()},
                          {"lhs", w_join(inst, x, y, ops).str()},
                          {"rhs", w_join(inst, y, x, ops).str()}});
    const QVector assoc_l = w_join(inst, w_join(inst, x, y, ops), z, ops);
    const QVector assoc_r = w_join(inst, x, w_join(inst, y, z, ops), ops);
    if (assoc_l != assoc_r)
      detail::record(sl, {{"axiom", "associativity"}, {"x", x.str()}, {"y", y.str()},
                          {"z", z.str()}, {"lhs", assoc_l.str()}, {"rhs", assoc_r.str()}});

    ++dc.cases_run;
    const QVector lc = convex_combine(w_join(inst, x, y, ops), d, q);
    const QVector rc = w_join(inst, convex_combine(x, d, q), convex_combine(y, d, q), ops);
    if (lc != rc)
      detail::record(dc, {{"x", x.str()}, {"y", y.str()}, {"d", d.str()}, {"q", q.str()},
                          {"lhs", lc.str()}, {"rhs", rc.str()}});

    ++df.cases_run;
    const QVector lf = convex_combine(w_join(inst, x, y, ops), z, q);
    const QVector rf = w_join(inst, convex_combine(x, z, q), convex_combine(y, z, q), ops);
    if (lf != rf)
      detail::record(df, {{"x", x.str()}, {"y", y.str()}, {"z", z.str()}, {"q", q.str()},
                          {"lhs", lf.str()}, {"rhs", rf.str()}});
  }
  return {sl, dc, df};
}

// Two independently constructed witnesses produce the same join. The second
// witness comes from re-centering the first at a random carrier point:
// (P(c,r,d), p(1-r)/(1-pr)) stays valid for every point the first covers.
inline LawReport check_w_well_definedness(const SemilatticeInstance& inst,
                                          const CheckConfig& cfg,
                                          const AlgebraOps& ops = AlgebraOps::standard()) {
  LawReport rep{"w-well-definedness", cfg.seed, 0, {}};
  Sampler s(cfg.sampler());
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    ++rep.cases_run;
    const QVector x = detail::sampled_w_point(inst, s);
    const QVector y = detail::sampled_w_point(inst, s);
    const QVector pts[] = {x, y};
    const Witness first = common_witness(inst, pts);
    const QVector d = s.carrier_point(inst.carrier());
    const Rational r = s.unit_open();
    const Witness second{perspective(first.center, r, d),
                         first.ratio * (Rational(1) - r) /
                             (Rational(1) - first.ratio * r)};
    const QVector via_first = w_join_with_witness(inst, x, y, first, ops);
    const QVector via_second = w_join_with_witness(inst, x, y, second, ops);
    if (via_first != via_second)
      detail::record(rep, {{"x", x.str()}, {"y", y.str()},
                           {"witness1", first.center.str() + " @ " + first.ratio.str()},
                           {"witness2", second.center.str() + " @ " + second.ratio.str()},
                           {"lhs", via_first.str()}, {"rhs", via_second.str()}});
  }
  return rep;
}

// Subspace closure: convex combinations, nonnegative scalings and negations
// of W-points stay in W, with the explicit witness constructions validating.
inline LawReport check_w_subspace_closure(const SemilatticeInstance& inst,
                                          const CheckConfig& cfg) {
  LawReport rep{"w-subspace-closure", cfg.seed, 0, {}};
  Sampler s(cfg.sampler());
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    ++rep.cases_run;
    const QVector x = detail::sampled_w_point(inst, s);
    const QVector y = detail::sampled_w_point(inst, s);
    const Rational q = s.unit_closed();
    if (!w_membership(inst, convex_combine(x, y, q)).member)
      detail::record(rep, {{"claim", "convex combination"}, {"x", x.str()}, {"y", y.str()},
                           {"q", q.str()}});
    const Rational shrink = s.unit_closed();
    if (!w_membership(inst, shrink * x).member)
      detail::record(rep, {{"claim", "scaling q in [0,1]"}, {"x", x.str()},
                           {"q", shrink.str()}});

    const Witness wx = *w_membership(inst, x).witness;
    const Rational grow = s.greater_than_one();
    try {
      w_scale_witness(inst, x, grow, wx);  // validates internally
    } catch (const std::logic_error& e) {
      detail::record(rep, {{"claim", "scaling q > 1"}, {"x", x.str()}, {"q", grow.str()},
                           {"error", e.what()}});
    }
    if (!w_membership(inst, grow * x).member)
      detail::record(rep, {{"claim", "scaled point in W"}, {"x", x.str()}, {"q", grow.str()}});

    try {
      w_negate_witness(inst, x, wx);
    } catch (const std::logic_error& e) {
      detail::record(rep, {{"claim", "negation witness"}, {"x", x.str()}, {"error", e.what()}});
    }
    if (!w_membership(inst, -x).member)
      detail::record(rep, {{"claim", "negated point in W"}, {"x", x.str()}});
  }
  return rep;
}

// For componentwise max, ⊞ must coincide with the global componentwise sup.
inline LawReport check_w_oracle_agreement(const SemilatticeInstance& inst,
                                          const CheckConfig& cfg) {
  LawReport rep{"w-oracle-agreement", cfg.seed, 0, {}};
  Sampler s(cfg.sampler());
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    ++rep.cases_run;
    const QVector x = detail::sampled_w_point(inst, s);
    const QVector y = detail::sampled_w_point(inst, s);
    const QVector joined = w_join(inst, x, y);
    const QVector expected = cwise_sup(x, y);
    if (joined != expected)
      detail::record(rep, {{"x", x.str()}, {"y", y.str()}, {"lhs", joined.str()},
                           {"rhs", expected.str()}});
  }
  return rep;
}

// ⊞ restricted to carrier members equals ⊕.
inline LawReport check_w_extension(const SemilatticeInstance& inst, const CheckConfig& cfg) {
  LawReport rep{"w-extension", cfg.seed, 0, {}};
  Sampler s(cfg.sampler());
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    ++rep.cases_run;
    const QVector x = s.carrier_point(inst.carrier());
    const QVector y = s.carrier_point(inst.carrier());
    const QVector joined = w_join(inst, x, y);
    const QVector expected = inst.join(x, y);
    if (joined != expected)
      detail::record(rep, {{"x", x.str()}, {"y", y.str()}, {"lhs", joined.str()},
                           {"rhs", expected.str()}});
  }
  return rep;
}

// Shrink probes below p_max plus the re-centering replay
// P(P(c,r,d), p(1-r)/(1-pr), x) ∈ X.
inline LawReport check_w_membership_monotone(const SemilatticeInstance& inst,
                                             const CheckConfig& cfg) {
  LawReport rep{"w-membership-monotone", cfg.seed, 0, {}};
  Sampler s(cfg.sampler());
  for (std::size_t i = 0; i < cfg.cases; ++i) {
    ++rep.cases_run;
    const QVector x = detail::sampled_w_point(inst, s);
    const WMembershipResult res = w_membership(inst, x);
    const Rational p = *res.p_max;
    const Rational q_mid = p * s.unit_open();
    const Rational q_top = p * Rational(999, 1000);
    if (!monotone_shrink_check(inst, x, res, q_mid))
      detail::record(rep, {{"claim", "shrink"}, {"x", x.str()}, {"p_max", p.str()},
                           {"q", q_mid.str()}});
    if (!monotone_shrink_check(inst, x, res, q_top))
      detail::record(rep, {{"claim", "shrink near p_max"}, {"x", x.str()},
                           {"p_max", p.str()}, {"q", q_top.str()}});

    const QVector d = s.carrier_point(inst.carrier());
    const Rational r = s.unit_open();
    const QVector new_center = perspective(res.witness->center, r, d);
    const Rational new_ratio = p * (Rational(1) - r) / (Rational(1) - p * r);
    if (!inst.contains(perspective(new_center, new_ratio, x)))
      detail::record(rep, {{"claim", "re-centering"}, {"x", x.str()}, {"d", d.str()},
                           {"r", r.str()}, {"p", p.str()}});
  }
  return rep;
}

}  // namespace csl
