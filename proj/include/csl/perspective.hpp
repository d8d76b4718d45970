#pragma once

#include <stdexcept>
#include <utility>

#include "csl/qvector.hpp"
#include "csl/rational.hpp"

namespace csl {

// Perspective shift with center c and ratio p: the affine map x -> p*x + (1-p)*c.
// The ratio is unrestricted; p = 0 collapses to c, p = 1 is the identity and
// ratios outside [0,1] invert/extend the shift.
inline QVector perspective(const QVector& c, const Rational& p, const QVector& x) {
  return linear_combine(p, x, Rational(1) - p, c);
}

// Parameters making two perspective shifts with distinct centers commute in
// swapped order:  P(d,r,.) ∘ P(c,p,.) = P(c,s,.) ∘ P(d,q,.).
// Defined whenever (1-p)(1-q) != 1, i.e. p + q - pq != 0.
inline std::pair<Rational, Rational> solve_swap_params(const Rational& p, const Rational& q) {
  const Rational denom = p + q - p * q;
  if (denom.is_zero())
    throw std::domain_error("solve_swap_params: (1-p)(1-q) = 1 has no solution");
  return {q / denom, p / denom};  // (r, s)
}

// Solution of { qp = s,  q(1-p) = (1-s)(1-r),  1-q = (1-s)r }: the parameters
// that collapse two nested shifts into one,  P(d,q,P(c,p,x)) = P(P(c,r,d),s,x).
struct ParamQuadruple {
  Rational p, q, r, s;

  bool satisfies_system() const {
    const Rational one(1);
    return q * p == s && q * (one - p) == (one - s) * (one - r) &&
           one - q == (one - s) * r;
  }
};

namespace detail {
inline ParamQuadruple checked_quadruple(ParamQuadruple quad) {
  if (!quad.satisfies_system())
    throw std::logic_error("ParamQuadruple: constructed parameters violate the system");
  return quad;
}
}  // namespace detail

// Given p, q with pq != 1: s = qp, r = (1-q)/(1-qp).
inline ParamQuadruple solve_assoc_from_pq(const Rational& p, const Rational& q) {
  const Rational one(1);
  if (q * p == one) throw std::domain_error("solve_assoc_from_pq: pq = 1");
  return detail::checked_quadruple({p, q, (one - q) / (one - q * p), q * p});
}

// Given p, r with pr != 1: q = (1-r)/(1-pr), s = p(1-r)/(1-pr).
inline ParamQuadruple solve_assoc_from_pr(const Rational& p, const Rational& r) {
  const Rational one(1);
  if (p * r == one) throw std::domain_error("solve_assoc_from_pr: pr = 1");
  const Rational q = (one - r) / (one - p * r);
  return detail::checked_quadruple({p, q, r, p * q});
}

}  // namespace csl
