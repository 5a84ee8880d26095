#pragma once

#include <gmpxx.h>

#include <string>

namespace pqn {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator. Thin value wrapper around GMP's mpq_class; every
/// constructor canonicalizes, so the invariants hold by construction.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);

  /// Parses "p", "-p" or "p/q". Throws Error on malformed input or q = 0.
  static Rational fromString(const std::string& text);

  bool isZero() const { return sgn(v_) == 0; }
  bool isOne() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  Rational abs() const;

  std::string str() const { return v_.get_str(); }
  std::string numeratorStr() const { return v_.get_num().get_str(); }
  std::string denominatorStr() const { return v_.get_den().get_str(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  Rational pow(unsigned exponent) const;

 private:
  mpq_class v_;
};

}  // namespace pqn
