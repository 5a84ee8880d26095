#pragma once

#include <map>
#include <string>
#include <vector>

#include "pqn/chart.hpp"
#include "pqn/polynomial.hpp"

namespace pqn {

enum class Variance { Covariant, Contravariant };

/// Graded antisymmetric tensor field with polynomial coefficients, stored
/// sparsely over strictly increasing index tuples. Instantiated as Form
/// (covariant) and MultiVector (contravariant).
///
/// The degree may exceed the chart dimension; such a tensor is structurally
/// zero (no component is representable) and trivialByDegree() reports it.
/// This keeps degree bookkeeping exact through d, contractions and the
/// graded bracket recursions.
template <Variance V>
class AltTensor {
 public:
  AltTensor(Chart chart, int degree);

  static AltTensor scalar(Chart chart, Polynomial value);          // degree 0
  static AltTensor basis(Chart chart, const IndexTuple& indices);  // coefficient 1
  static AltTensor monomial(Chart chart, const IndexTuple& indices, Polynomial coeff);

  const Chart& chart() const { return chart_; }
  int degree() const { return degree_; }
  bool isZero() const { return comps_.empty(); }
  bool trivialByDegree() const { return degree_ > chart_.dim(); }

  /// Components over strictly increasing tuples; zero entries never stored.
  const std::map<IndexTuple, Polynomial>& components() const { return comps_; }

  /// Signed component lookup: any tuple, with antisymmetry applied.
  Polynomial component(const IndexTuple& indices) const;

  /// The unique component of a degree-0 tensor.
  Polynomial scalarValue() const;

  /// Adds c to the component at an arbitrary tuple, sign-normalizing to the
  /// increasing representative; repeated-index tuples and zero results drop
  /// out. Tensors are built with this and treated as immutable afterwards.
  void accumulate(const IndexTuple& indices, const Polynomial& c);

  AltTensor& operator+=(const AltTensor& o);
  AltTensor& operator-=(const AltTensor& o);
  friend AltTensor operator+(AltTensor a, const AltTensor& b) { return a += b; }
  friend AltTensor operator-(AltTensor a, const AltTensor& b) { return a -= b; }
  friend AltTensor operator-(const AltTensor& a) {
    AltTensor r(a.chart_, a.degree_);
    for (const auto& [i, c] : a.comps_) r.comps_.emplace(i, -c);
    return r;
  }
  friend AltTensor operator*(const Polynomial& f, const AltTensor& t) {
    AltTensor r(t.chart_, t.degree_);
    for (const auto& [i, c] : t.comps_) {
      Polynomial p = f * c;
      if (!p.isZero()) r.comps_.emplace(i, std::move(p));
    }
    return r;
  }
  friend AltTensor operator*(const Rational& f, const AltTensor& t) {
    return Polynomial::constant(t.chart_.dim(), f) * t;
  }

  friend bool operator==(const AltTensor& a, const AltTensor& b) {
    return a.chart_ == b.chart_ && a.degree_ == b.degree_ && a.comps_ == b.comps_;
  }
  friend bool operator!=(const AltTensor& a, const AltTensor& b) { return !(a == b); }

  /// Canonical rendering: "dx1^dx2 -> <poly>" / "e1^e2 -> <poly>", 1-based.
  std::string str() const;
  static std::string componentName(const IndexTuple& indices);

 private:
  void checkTuple(const IndexTuple& indices) const;

  Chart chart_;
  int degree_;
  std::map<IndexTuple, Polynomial> comps_;
};

using Form = AltTensor<Variance::Covariant>;
using MultiVector = AltTensor<Variance::Contravariant>;
using VectorField = MultiVector;  // degree 1 by convention

/// (1,1) tensor field as a dense polynomial matrix; column j is N(d/dx_j).
class EndoField {
 public:
  explicit EndoField(Chart chart);  // zero endomorphism
  EndoField(Chart chart, std::vector<std::vector<Polynomial>> matrix);

  static EndoField identity(const Chart& chart);
  static EndoField scaled(const Chart& chart, const Polynomial& f);  // f * Id

  const Chart& chart() const { return chart_; }
  const Polynomial& entry(int row, int col) const { return mat_[row][col]; }
  void setEntry(int row, int col, Polynomial p) { mat_[row][col] = std::move(p); }

  VectorField apply(const VectorField& x) const;
  /// Transpose action on 1-forms: <N* a, X> = <a, N X>.
  Form applyTranspose(const Form& alpha) const;
  EndoField transpose() const;

  EndoField& operator+=(const EndoField& o);
  friend EndoField operator+(EndoField a, const EndoField& b) { return a += b; }
  friend EndoField operator-(const EndoField& a, const EndoField& b);
  friend bool operator==(const EndoField& a, const EndoField& b) {
    return a.chart_ == b.chart_ && a.mat_ == b.mat_;
  }
  friend bool operator!=(const EndoField& a, const EndoField& b) { return !(a == b); }

  bool isZero() const;
  std::string str() const;

 private:
  Chart chart_;
  std::vector<std::vector<Polynomial>> mat_;
};

void requireSameChart(const Chart& a, const Chart& b, const char* where);

/// Exterior product of same-variance tensors; graded-commutative.
template <Variance V>
AltTensor<V> wedge(const AltTensor<V>& a, const AltTensor<V>& b);

/// Interior product i_X of a vector field into a k-form, k >= 1.
Form contract(const VectorField& x, const Form& eta);
/// Interior product of a 1-form into a k-multivector, k >= 1.
MultiVector contract(const Form& alpha, const MultiVector& p);
/// i_{X ^ Y} eta = i_Y i_X eta, so that <i_{X^Y} phi, Z> = phi(X,Y,Z).
Form contractPair(const VectorField& x, const VectorField& y, const Form& eta);

/// Degree-preserving insertion of N into a form, one slot at a time;
/// zero on functions.
Form insertN(const EndoField& n, const Form& eta);

/// pi-sharp: <beta, sharp(pi, alpha)> = pi(alpha, beta).
VectorField sharp(const MultiVector& pi, const Form& alpha);
/// Omega-flat: flat(Omega, X) = i_X Omega.
Form flat(const Form& omega, const VectorField& x);
/// The endomorphism X -> sharp(pi, flat(omega, X)).
EndoField composeSharpFlat(const MultiVector& pi, const Form& omega);

/// Canonical pairing of a 1-form and a vector field.
Polynomial pairing(const Form& alpha, const VectorField& x);

/// Evaluation of a k-form on k vector fields (determinant convention).
Polynomial evalOnVectors(const Form& eta, const std::vector<VectorField>& xs);
/// Evaluation of a k-multivector on k 1-forms.
Polynomial evalOnForms(const MultiVector& p, const std::vector<Form>& alphas);

/// Coordinate frame field d/dx_axis.
VectorField frameField(const Chart& chart, int axis);
/// Coordinate 1-form dx_axis.
Form coordinateForm(const Chart& chart, int axis);

}  // namespace pqn
