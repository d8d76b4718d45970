#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace csl {

// Arbitrary-precision rational number, always stored reduced with a
// positive denominator, so structural equality is mathematical equality.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, scalars appear everywhere

  Rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(mpz_class(num), mpz_class(den));
    v_.canonicalize();
  }

  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // Accepts "a/b" or "a" with optional sign; rejects zero denominators.
  static Rational from_string(const std::string& text) {
    mpq_class v;
    try {
      v = mpq_class(text, 10);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("Rational: cannot parse '" + text + "'");
    }
    if (v.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + text + "'");
    v.canonicalize();
    return Rational(raw_tag{}, std::move(v));
  }

  std::string str() const { return v_.get_str(); }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational reciprocal() const {
    if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
    return Rational(raw_tag{}, 1 / v_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(raw_tag{}, a.v_ + b.v_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(raw_tag{}, a.v_ - b.v_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(raw_tag{}, a.v_ * b.v_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(raw_tag{}, a.v_ / b.v_);
  }
  Rational operator-() const { return Rational(raw_tag{}, -v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  struct raw_tag {};
  // GMP arithmetic on canonical operands yields canonical results.
  Rational(raw_tag, mpq_class v) : v_(std::move(v)) {}

  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }

}  // namespace csl

#include <ostream>

namespace csl {
inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }
}  // namespace csl
