#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "csl/instance.hpp"
#include "csl/polytope.hpp"
#include "csl/qvector.hpp"
#include "csl/rational.hpp"

namespace csl {

struct SamplerConfig {
  std::uint64_t seed = 0;
  long denominator_bound = 64;  // >= 2
};

// Seeded generator of bounded-denominator rationals and derived geometry.
// Deterministic for a fixed seed: the integer draw avoids the
// implementation-defined std::uniform_int_distribution.
class Sampler {
public:
  explicit Sampler(const SamplerConfig& cfg) : rng_(cfg.seed), dbound_(cfg.denominator_bound) {
    if (dbound_ < 2) throw std::invalid_argument("Sampler: denominator bound must be >= 2");
  }

  // Uniform integer in [0, n).
  std::uint64_t next_index(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = rng_();
    } while (v >= limit);
    return v % n;
  }

  // Rational strictly inside (0,1).
  Rational unit_open() {
    const long d = 2 + static_cast<long>(next_index(static_cast<std::uint64_t>(dbound_ - 1)));
    const long n = 1 + static_cast<long>(next_index(static_cast<std::uint64_t>(d - 1)));
    return Rational(n, d);
  }

  // Rational in [0,1], endpoints included.
  Rational unit_closed() {
    const long d = 1 + static_cast<long>(next_index(static_cast<std::uint64_t>(dbound_)));
    const long n = static_cast<long>(next_index(static_cast<std::uint64_t>(d + 1)));
    return Rational(n, d);
  }

  // Rational in [lo, hi] with denominator <= bound.
  Rational rational(long lo, long hi) {
    if (hi < lo) throw std::invalid_argument("Sampler::rational: empty range");
    const long d = 1 + static_cast<long>(next_index(static_cast<std::uint64_t>(dbound_)));
    const long span = (hi - lo) * d + 1;
    const long n = lo * d + static_cast<long>(next_index(static_cast<std::uint64_t>(span)));
    return Rational(n, d);
  }

  Rational nonzero_rational(long lo, long hi) {
    Rational r = rational(lo, hi);
    while (r.is_zero()) r = rational(lo, hi);
    return r;
  }

  // Rational strictly greater than 1.
  Rational greater_than_one(long hi = 4) {
    Rational r = Rational(1) + rational(0, hi - 1);
    while (r == Rational(1)) r = Rational(1) + rational(0, hi - 1);
    return r;
  }

  QVector vector(std::size_t dim, long lo, long hi) {
    std::vector<Rational> coords;
    coords.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) coords.push_back(rational(lo, hi));
    return QVector(std::move(coords));
  }

  QVector nonzero_vector(std::size_t dim, long lo, long hi) {
    QVector v = vector(dim, lo, hi);
    while (v.is_zero()) v = vector(dim, lo, hi);
    return v;
  }

  // Random hull point: convex combination of the vertices with random weights.
  QVector carrier_point(const Polytope& P) {
    const auto& vs = P.vertices();
    std::vector<long> w(vs.size(), 0);
    long total = 0;
    while (total == 0) {
      for (auto& wi : w) {
        wi = static_cast<long>(next_index(static_cast<std::uint64_t>(dbound_ + 1)));
        total += wi;
      }
    }
    QVector point = QVector::zero(P.dim());
    for (std::size_t i = 0; i < vs.size(); ++i)
      point = linear_combine(Rational(1), point, Rational(w[i], total), vs[i]);
    return point;
  }

  // Point of the subspace spanned by the carrier: lam*x - mu*y for hull
  // points x, y and nonnegative rational lam, mu.
  QVector span_point(const SemilatticeInstance& inst, long coeff_hi = 3) {
    const QVector x = carrier_point(inst.carrier());
    const QVector y = carrier_point(inst.carrier());
    return linear_combine(rational(0, coeff_hi), x, -rational(0, coeff_hi), y);
  }

private:
  std::mt19937_64 rng_;
  long dbound_;
};

}  // namespace csl
