#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "csl/lp.hpp"
#include "csl/qvector.hpp"

namespace csl {

class Polytope;
bool contains_point(const Polytope& P, const QVector& x);

// Nonempty finitely generated convex subset of Q^n in canonical
// V-representation: extreme points only, lexicographically sorted.
class Polytope {
public:
  static Polytope from_points(std::vector<QVector> points);

  std::size_t dim() const { return dim_; }
  const std::vector<QVector>& vertices() const { return vertices_; }

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
  }
  friend bool operator!=(const Polytope& a, const Polytope& b) { return !(a == b); }

private:
  Polytope(std::size_t dim, std::vector<QVector> vertices)
      : dim_(dim), vertices_(std::move(vertices)) {}

  std::size_t dim_;
  std::vector<QVector> vertices_;
};

namespace detail {

// Hull membership as exact LP feasibility over convex coefficients.
inline bool in_hull(const std::vector<QVector>& generators, const QVector& x) {
  const std::size_t k = generators.size();
  const std::size_t d = x.dim();
  LinearProgram lp;
  lp.num_vars = k;
  lp.objective.assign(k, Rational(0));
  for (std::size_t i = 0; i < k; ++i) lp.nonneg_vars.push_back(i);
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<Rational> row;
    row.reserve(k);
    for (std::size_t i = 0; i < k; ++i) row.push_back(generators[i][j]);
    lp.eq_constraints.emplace_back(std::move(row), x[j]);
  }
  lp.eq_constraints.emplace_back(std::vector<Rational>(k, Rational(1)), Rational(1));
  return lp_solve(lp).status == LpStatus::optimal;
}

}  // namespace detail

inline Polytope Polytope::from_points(std::vector<QVector> points) {
  if (points.empty()) throw std::invalid_argument("Polytope: empty point set");
  const std::size_t d = points.front().dim();
  for (const auto& p : points)
    if (p.dim() != d) throw std::invalid_argument("Polytope: dimension mismatch");

  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  // Dropping a redundant point never changes the hull, so one pass suffices.
  for (std::size_t i = 0; i < points.size() && points.size() > 1;) {
    std::vector<QVector> others;
    others.reserve(points.size() - 1);
    for (std::size_t j = 0; j < points.size(); ++j)
      if (j != i) others.push_back(points[j]);
    if (detail::in_hull(others, points[i]))
      points.erase(points.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  return Polytope(d, std::move(points));
}

inline Polytope canonicalize(std::vector<QVector> points) {
  return Polytope::from_points(std::move(points));
}

inline bool contains_point(const Polytope& P, const QVector& x) {
  if (x.dim() != P.dim()) throw std::invalid_argument("contains_point: dimension mismatch");
  for (const auto& v : P.vertices())
    if (v == x) return true;
  return detail::in_hull(P.vertices(), x);
}

// Minkowski mixture p*A + (1-p)*B, canonicalized.
inline Polytope mix(const Polytope& A, const Polytope& B, const Rational& p) {
  if (A.dim() != B.dim()) throw std::invalid_argument("mix: dimension mismatch");
  if (p < Rational(0) || p > Rational(1))
    throw std::invalid_argument("mix: parameter outside [0,1]");
  std::vector<QVector> candidates;
  candidates.reserve(A.vertices().size() * B.vertices().size());
  for (const auto& a : A.vertices())
    for (const auto& b : B.vertices()) candidates.push_back(convex_combine(a, b, p));
  return Polytope::from_points(std::move(candidates));
}

// conv(A ∪ B).
inline Polytope hull_join(const Polytope& A, const Polytope& B) {
  if (A.dim() != B.dim()) throw std::invalid_argument("hull_join: dimension mismatch");
  std::vector<QVector> points = A.vertices();
  points.insert(points.end(), B.vertices().begin(), B.vertices().end());
  return Polytope::from_points(std::move(points));
}

// Support function value h_A(u) = max over vertices of <u, v>.
inline Rational support(const Polytope& A, const QVector& u) {
  if (u.dim() != A.dim()) throw std::invalid_argument("support: dimension mismatch");
  Rational best = dot(u, A.vertices().front());
  for (std::size_t i = 1; i < A.vertices().size(); ++i)
    best = max(best, dot(u, A.vertices()[i]));
  return best;
}

inline bool polytope_equal(const Polytope& A, const Polytope& B) {
  if (A.dim() != B.dim()) throw std::invalid_argument("polytope_equal: dimension mismatch");
  return A == B;
}

// Closure of the vertex set under componentwise sup; combined with convexity
// this is the checkable core of sup-closure of the whole hull.
inline bool is_sup_closed(const Polytope& P) {
  const auto& vs = P.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!contains_point(P, cwise_sup(vs[i], vs[j]))) return false;
  return true;
}

}  // namespace csl
