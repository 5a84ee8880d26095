#include "pqn/rational.hpp"

#include <cctype>

#include "pqn/error.hpp"

namespace pqn {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw Error("rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::fromString(const std::string& text) {
  if (text.empty()) throw Error("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      Rational r;
      r.v_ = mpq_class(mpz_class(text), 1);
      return r;
    }
    mpz_class num(text.substr(0, slash));
    mpz_class den(text.substr(slash + 1));
    if (den == 0) throw Error("rational with zero denominator: " + text);
    Rational r;
    r.v_ = mpq_class(num, den);
    r.v_.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw Error("malformed rational literal: '" + text + "'");
  }
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.isZero()) throw Error("division of rationals by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::abs() const {
  Rational r;
  r.v_ = ::abs(v_);
  return r;
}

Rational Rational::pow(unsigned exponent) const {
  Rational r(1);
  for (unsigned i = 0; i < exponent; ++i) r *= *this;
  return r;
}

}  // namespace pqn
