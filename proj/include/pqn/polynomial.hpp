#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pqn/rational.hpp"

namespace pqn {

/// Exponent vector of a monomial; length equals the chart dimension.
using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic order: total degree first, then lexicographic.
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Degree guardrail for polynomial products; fails fast on runaway bracket
/// nesting. Default 24, overridable (PQN_DEGREE_CAP, --degree-cap).
int polynomialDegreeCap();
void setPolynomialDegreeCap(int cap);

/// Exact multivariate polynomial over Q in a fixed number of variables.
/// Immutable value semantics: no zero coefficients are ever stored, so
/// structural equality is semantic equality and zero is the empty map.
class Polynomial {
 public:
  explicit Polynomial(int dim) : dim_(dim) {}

  static Polynomial zero(int dim) { return Polynomial(dim); }
  static Polynomial constant(int dim, const Rational& c);
  static Polynomial variable(int dim, int axis);
  static Polynomial monomial(int dim, Exponents exps, const Rational& c);

  int dim() const { return dim_; }
  bool isZero() const { return terms_.empty(); }
  bool isConstant() const;
  /// Total degree; 0 for the zero polynomial.
  int totalDegree() const;
  const std::map<Exponents, Rational, GradedLexLess>& terms() const { return terms_; }

  Polynomial partialDerivative(int axis) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Canonical rendering in descending graded-lex order, e.g. "2*x^2*y - 1/3".
  std::string str(const std::vector<std::string>& varNames) const;

 private:
  void addTerm(const Exponents& e, const Rational& c);
  static void requireSameDim(const Polynomial& a, const Polynomial& b);

  int dim_;
  std::map<Exponents, Rational, GradedLexLess> terms_;
};

}  // namespace pqn
