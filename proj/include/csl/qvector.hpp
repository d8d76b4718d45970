#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "csl/rational.hpp"

namespace csl {

// Point of Q^n. Equality and ordering are exact and coordinatewise.
class QVector {
public:
  explicit QVector(std::vector<Rational> coords) : c_(std::move(coords)) {
    if (c_.empty()) throw std::invalid_argument("QVector: dimension must be positive");
  }

  static QVector zero(std::size_t dim) {
    return QVector(std::vector<Rational>(dim, Rational(0)));
  }

  std::size_t dim() const { return c_.size(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!x.is_zero()) return false;
    return true;
  }

  std::string str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) os << ',';
      os << c_[i];
    }
    return os.str();
  }

  static QVector from_string(const std::string& text) {
    std::vector<Rational> coords;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) coords.push_back(Rational::from_string(item));
    if (coords.empty()) throw std::invalid_argument("QVector: empty coordinate list");
    return QVector(std::move(coords));
  }

  friend bool operator==(const QVector& a, const QVector& b) { return a.c_ == b.c_; }
  friend bool operator!=(const QVector& a, const QVector& b) { return a.c_ != b.c_; }
  // Lexicographic; canonical vertex ordering relies on it.
  friend bool operator<(const QVector& a, const QVector& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (a.c_[i] < b.c_[i]) return true;
      if (b.c_[i] < a.c_[i]) return false;
    }
    return false;
  }

private:
  std::vector<Rational> c_;
};

namespace detail {
inline void require_same_dim(const QVector& x, const QVector& y, const char* op) {
  if (x.dim() != y.dim())
    throw std::invalid_argument(std::string(op) + ": dimension mismatch");
}
}  // namespace detail

// a*x + b*y, exact.
inline QVector linear_combine(const Rational& a, const QVector& x, const Rational& b,
                              const QVector& y) {
  detail::require_same_dim(x, y, "linear_combine");
  std::vector<Rational> out;
  out.reserve(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) out.push_back(a * x[i] + b * y[i]);
  return QVector(std::move(out));
}

// p*x + (1-p)*y with p restricted to [0,1].
inline QVector convex_combine(const QVector& x, const QVector& y, const Rational& p) {
  if (p < Rational(0) || p > Rational(1))
    throw std::invalid_argument("convex_combine: parameter outside [0,1]");
  return linear_combine(p, x, Rational(1) - p, y);
}

inline QVector cwise_sup(const QVector& x, const QVector& y) {
  detail::require_same_dim(x, y, "cwise_sup");
  std::vector<Rational> out;
  out.reserve(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) out.push_back(max(x[i], y[i]));
  return QVector(std::move(out));
}

inline Rational dot(const QVector& x, const QVector& y) {
  detail::require_same_dim(x, y, "dot");
  Rational s(0);
  for (std::size_t i = 0; i < x.dim(); ++i) s += x[i] * y[i];
  return s;
}

inline QVector operator+(const QVector& x, const QVector& y) {
  return linear_combine(Rational(1), x, Rational(1), y);
}
inline QVector operator-(const QVector& x, const QVector& y) {
  return linear_combine(Rational(1), x, Rational(-1), y);
}
inline QVector operator-(const QVector& x) {
  std::vector<Rational> out;
  out.reserve(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) out.push_back(-x[i]);
  return QVector(std::move(out));
}
inline QVector operator*(const Rational& a, const QVector& x) {
  std::vector<Rational> out;
  out.reserve(x.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) out.push_back(a * x[i]);
  return QVector(std::move(out));
}

}  // namespace csl
