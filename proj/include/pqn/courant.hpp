#pragma once

#include <vector>

#include "pqn/pqn_structure.hpp"

namespace pqn {

/// Section X + alpha of TM + T*M.
struct CourantSection {
  VectorField vec;
  Form form;

  CourantSection(VectorField v, Form f);
  static CourantSection ofVector(VectorField v);
  static CourantSection ofForm(Form f);
  static CourantSection zero(const Chart& chart);

  const Chart& chart() const { return vec.chart(); }
  bool isZero() const { return vec.isZero() && form.isZero(); }

  friend CourantSection operator+(const CourantSection& a, const CourantSection& b) {
    return CourantSection(a.vec + b.vec, a.form + b.form);
  }
  friend CourantSection operator-(const CourantSection& a, const CourantSection& b) {
    return CourantSection(a.vec - b.vec, a.form - b.form);
  }
  friend CourantSection operator*(const Polynomial& f, const CourantSection& s) {
    return CourantSection(f * s.vec, f * s.form);
  }
  friend CourantSection operator*(const Rational& c, const CourantSection& s) {
    return CourantSection(c * s.vec, c * s.form);
  }
  friend bool operator==(const CourantSection& a, const CourantSection& b) {
    return a.vec == b.vec && a.form == b.form;
  }
  friend bool operator!=(const CourantSection& a, const CourantSection& b) { return !(a == b); }

  std::string str() const;
  Json toJson() const;
};

/// The double (TM)_N + (T*M)_pi with pairing, anchor, bracket and D. Only
/// assembled from data that passes the PqN axiom battery (the twisted
/// standard case pi = 0, N = Id, d phi = 0 is an instance of that).
class CourantStructure {
 public:
  static CourantStructure fromPqn(const PqnStructure& s);
  static CourantStructure twistedStandard(const Chart& chart, const Form& phi);

  const Chart& chart() const { return data_.chart; }
  const MultiVector& pi() const { return data_.pi; }
  const EndoField& n() const { return data_.n; }
  const Form& phi() const { return data_.phi; }
  const PqnStructure& data() const { return data_; }

 private:
  explicit CourantStructure(PqnStructure data) : data_(std::move(data)) {}
  PqnStructure data_;
};

/// <X1+a1, X2+a2> = (1/2)(<a2,X1> + <a1,X2>).
Polynomial pairingE(const CourantSection& s1, const CourantSection& s2);

/// rho(X + a) = NX + pi# a.
VectorField anchorE(const CourantStructure& c, const CourantSection& s);

/// The antisymmetric bracket assembled from the Koszul bracket on forms,
/// [.,.]_N + i phi on vector fields, and the d_pi / d_N mixed terms.
CourantSection bracketE(const CourantStructure& c, const CourantSection& s1,
                        const CourantSection& s2);

/// The unique section with <Df, A> = (1/2) rho(A)(f): Df = -pi# df + N* df.
CourantSection dOperator(const CourantStructure& c, const Polynomial& f);

/// Section battery for the non-tensorial axiom checks: frame sections with a
/// polynomial multiplier battery for pairs, a smaller set for triples.
struct SectionBattery {
  std::vector<CourantSection> pairItems;
  std::vector<CourantSection> tripleItems;
  std::vector<Polynomial> functions;

  static SectionBattery standard(const Chart& chart, Rng rng, int randomSections = 2,
                                 int coeffDegree = 2);
};

/// Axioms (1)-(4)/(i)-(v): anchor-bracket compatibility, Jacobi defect
/// identity, Leibniz rule with the D correction, <Df,Dg> = 0, and
/// rho-invariance of the pairing; each checked exactly with a witness on
/// failure.
CheckReport checkCourantAxioms(const CourantStructure& c, const SectionBattery& battery);
CheckReport checkCourantAxioms(const CourantStructure& c);

/// Gauge transform X + a -> X + i_X Omega + a.
CourantSection gauge(const Form& omega, const CourantSection& s);

/// Lagrangian subbundle: the graph of a 2-form over TM, or T*M itself.
class LagrangianGraph {
 public:
  enum class Kind { GraphOfTwoForm, CotangentFiber };

  Kind kind() const { return kind_; }
  const Form& twoForm() const;
  const Chart& chart() const { return chart_; }
  /// Frame sections: d/dx_i + B.flat(d/dx_i) for graphs, dx_i for T*M.
  std::vector<CourantSection> frameSections() const;

  friend LagrangianGraph graphSubbundle(const Form& b);
  friend LagrangianGraph cotangentFiber(const Chart& chart);

 private:
  LagrangianGraph(Kind kind, Chart chart, Form b)
      : kind_(kind), chart_(std::move(chart)), b_(std::move(b)) {}
  Kind kind_;
  Chart chart_;
  Form b_;
};

/// Gr(B) = {X + B.flat X}; isotropic for every 2-form B.
LagrangianGraph graphSubbundle(const Form& b);
LagrangianGraph cotangentFiber(const Chart& chart);

/// pass iff the bracket of frame sections of L stays in L (the closure
/// defect of an isotropic subbundle is tensorial; an f-linearity guard is
/// included).
CheckReport isDirac(const CourantStructure& c, const LagrangianGraph& l);

/// The structure induced on T*M by a transversal Lagrangian L: d_L on a
/// spanning battery of forms (degree 0..n) and the induced 3-form, both
/// computed genuinely through the bracket and anchor of E.
struct InducedQlba {
  /// (input form, d_L of it) pairs.
  std::vector<std::pair<Form, Form>> derivationTable;
  Form phi;
};
InducedQlba inducedQlba(const CourantStructure& c, const LagrangianGraph& l);

/// pass iff for frame fields X, Y:
/// [[X + Om.flat X, Y + Om.flat Y]] = [X,Y]_Nhat + Om.flat [X,Y]_Nhat
///   + i_{X^Y}(phi + d_N Om + (1/2)[Om,Om]_pi), requires d Omega = 0.
CheckReport verifyGraphBracket(const CourantStructure& c, const Form& omega);

}  // namespace pqn
