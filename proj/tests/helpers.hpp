#pragma once

#include <initializer_list>
#include <vector>

#include "csl/instance.hpp"
#include "csl/polytope.hpp"
#include "csl/qvector.hpp"

namespace test {

inline csl::QVector qv(std::initializer_list<csl::Rational> coords) {
  return csl::QVector(std::vector<csl::Rational>(coords));
}

inline csl::Polytope unit_square() {
  return csl::Polytope::from_points({qv({0, 0}), qv({1, 0}), qv({0, 1}), qv({1, 1})});
}

inline csl::Polytope unit_box3() {
  std::vector<csl::QVector> corners;
  for (int m = 0; m < 8; ++m)
    corners.push_back(qv({csl::Rational(m & 1), csl::Rational((m >> 1) & 1),
                          csl::Rational((m >> 2) & 1)}));
  return csl::Polytope::from_points(std::move(corners));
}

inline csl::SemilatticeInstance square_instance() {
  return {unit_square(), csl::JoinKind::componentwise_max};
}

inline csl::SemilatticeInstance box3_instance() {
  return {unit_box3(), csl::JoinKind::componentwise_max};
}

// Segment [0,1] x {0} inside Q^2; its W is the x-axis.
inline csl::SemilatticeInstance segment_instance() {
  return {csl::Polytope::from_points({qv({0, 0}), qv({1, 0})}),
          csl::JoinKind::componentwise_max};
}

}  // namespace test
