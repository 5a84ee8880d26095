#include "pqn/polynomial.hpp"

#include <atomic>
#include <numeric>

#include "pqn/error.hpp"

namespace pqn {

namespace {
std::atomic<int> g_degree_cap{24};

int totalOf(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}
}  // namespace

int polynomialDegreeCap() { return g_degree_cap.load(); }

void setPolynomialDegreeCap(int cap) {
  if (cap < 1) throw Error("degree cap must be positive");
  g_degree_cap.store(cap);
}

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  const int da = totalOf(a), db = totalOf(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Polynomial Polynomial::constant(int dim, const Rational& c) {
  Polynomial p(dim);
  p.addTerm(Exponents(dim, 0), c);
  return p;
}

Polynomial Polynomial::variable(int dim, int axis) {
  if (axis < 0 || axis >= dim)
    throw Error("variable axis " + std::to_string(axis) + " out of range for dim " +
                std::to_string(dim));
  Exponents e(dim, 0);
  e[axis] = 1;
  return monomial(dim, e, Rational(1));
}

Polynomial Polynomial::monomial(int dim, Exponents exps, const Rational& c) {
  if (static_cast<int>(exps.size()) != dim) throw Error("monomial exponent length mismatch");
  Polynomial p(dim);
  p.addTerm(exps, c);
  return p;
}

bool Polynomial::isConstant() const {
  return terms_.empty() || (terms_.size() == 1 && totalOf(terms_.begin()->first) == 0);
}

int Polynomial::totalDegree() const {
  if (terms_.empty()) return 0;
  return totalOf(terms_.rbegin()->first);  // graded order: last key has max degree
}

void Polynomial::addTerm(const Exponents& e, const Rational& c) {
  if (c.isZero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
}

void Polynomial::requireSameDim(const Polynomial& a, const Polynomial& b) {
  if (a.dim_ != b.dim_)
    throw ChartMismatchError("polynomial dimension mismatch: " + std::to_string(a.dim_) +
                             " vs " + std::to_string(b.dim_));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  requireSameDim(*this, o);
  for (const auto& [e, c] : o.terms_) addTerm(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  requireSameDim(*this, o);
  for (const auto& [e, c] : o.terms_) addTerm(e, -c);
  return *this;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial r(a.dim_);
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial::requireSameDim(a, b);
  Polynomial r(a.dim_);
  if (a.isZero() || b.isZero()) return r;
  // Over a field the top graded-lex monomials cannot cancel, so the product
  // degree is exactly the sum; check the cap before doing any work.
  const int deg = a.totalDegree() + b.totalDegree();
  if (deg > polynomialDegreeCap())
    throw DegreeCapError("product degree " + std::to_string(deg) + " exceeds cap " +
                         std::to_string(polynomialDegreeCap()));
  Exponents e(a.dim_, 0);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.dim_; ++i) e[i] = ea[i] + eb[i];
      r.addTerm(e, ca * cb);
    }
  }
  return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  Polynomial r(p.dim_);
  if (c.isZero()) return r;
  for (const auto& [e, pc] : p.terms_) r.terms_.emplace(e, c * pc);
  return r;
}

Polynomial Polynomial::partialDerivative(int axis) const {
  if (axis < 0 || axis >= dim_)
    throw Error("derivative axis " + std::to_string(axis) + " out of range for dim " +
                std::to_string(dim_));
  Polynomial r(dim_);
  for (const auto& [e, c] : terms_) {
    if (e[axis] == 0) continue;
    Exponents d = e;
    d[axis] -= 1;
    r.addTerm(d, Rational(static_cast<long>(e[axis])) * c);
  }
  return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != dim_)
    throw Error("evaluation point length " + std::to_string(point.size()) +
                " does not match dimension " + std::to_string(dim_));
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < dim_; ++i)
      if (e[i] != 0) term *= point[i].pow(e[i]);
    acc += term;
  }
  return acc;
}

std::string Polynomial::str(const std::vector<std::string>& varNames) const {
  if (static_cast<int>(varNames.size()) != dim_)
    throw Error("variable name list does not match polynomial dimension");
  if (terms_.empty()) return "0";
  std::string out;
  // Descending graded-lex: highest-degree terms first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool first = out.empty();
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = c.abs();
    std::string factors;
    for (int i = 0; i < dim_; ++i) {
      if (e[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += varNames[i];
      if (e[i] > 1) factors += "^" + std::to_string(e[i]);
    }
    if (factors.empty()) {
      out += mag.str();
    } else if (mag.isOne()) {
      out += factors;
    } else {
      out += mag.str() + "*" + factors;
    }
  }
  return out;
}

}  // namespace pqn
