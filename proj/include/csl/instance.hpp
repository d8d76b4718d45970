#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "csl/polytope.hpp"
#include "csl/qvector.hpp"

namespace csl {

enum class JoinKind { componentwise_max };

inline std::string to_string(JoinKind k) {
  switch (k) {
    case JoinKind::componentwise_max: return "componentwise_max";
  }
  throw std::logic_error("JoinKind: unknown tag");
}

inline JoinKind join_kind_from_string(const std::string& s) {
  if (s == "componentwise_max") return JoinKind::componentwise_max;
  throw std::invalid_argument("unknown join_kind '" + s + "'");
}

// A concrete convex semilattice <X, +_p, ⊕>: a carrier polytope containing 0
// together with a join operation. componentwise_max requires the carrier to
// be closed under componentwise suprema.
class SemilatticeInstance {
public:
  SemilatticeInstance(Polytope carrier, JoinKind kind)
      : carrier_(std::move(carrier)), join_kind_(kind) {
    contains_zero_ = contains_point(carrier_, QVector::zero(carrier_.dim()));
    if (!contains_zero_)
      throw std::invalid_argument("SemilatticeInstance: carrier must contain the origin");
    sup_closed_ = is_sup_closed(carrier_);
    if (join_kind_ == JoinKind::componentwise_max && !sup_closed_)
      throw std::invalid_argument(
          "SemilatticeInstance: carrier is not closed under componentwise sup");
  }

  const Polytope& carrier() const { return carrier_; }
  JoinKind join_kind() const { return join_kind_; }
  std::size_t dim() const { return carrier_.dim(); }
  bool contains_zero() const { return contains_zero_; }
  bool sup_closed() const { return sup_closed_; }

  bool contains(const QVector& x) const { return contains_point(carrier_, x); }

  QVector join(const QVector& x, const QVector& y) const {
    if (!contains(x) || !contains(y))
      throw std::domain_error("join: arguments must be members of the carrier");
    return cwise_sup(x, y);
  }

  // x <= y iff x ⊕ y = y.
  bool leq(const QVector& x, const QVector& y) const { return join(x, y) == y; }

private:
  Polytope carrier_;
  JoinKind join_kind_;
  bool contains_zero_ = false;
  bool sup_closed_ = false;
};

}  // namespace csl
