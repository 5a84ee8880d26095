#include "pqn/courant.hpp"

#include "pqn/error.hpp"

namespace pqn {

CourantSection::CourantSection(VectorField v, Form f) : vec(std::move(v)), form(std::move(f)) {
  requireSameChart(vec.chart(), form.chart(), "Courant section");
  if (vec.degree() != 1 || form.degree() != 1)
    throw Error("Courant section needs a vector field and a 1-form");
}

CourantSection CourantSection::ofVector(VectorField v) {
  Form zero(v.chart(), 1);
  return CourantSection(std::move(v), std::move(zero));
}

CourantSection CourantSection::ofForm(Form f) {
  VectorField zero(f.chart(), 1);
  return CourantSection(std::move(zero), std::move(f));
}

CourantSection CourantSection::zero(const Chart& chart) {
  return CourantSection(VectorField(chart, 1), Form(chart, 1));
}

std::string CourantSection::str() const {
  return "vec: " + vec.str() + "; form: " + form.str();
}

Json CourantSection::toJson() const {
  Json j;
  j["vec"] = componentsJson(vec);
  j["form"] = componentsJson(form);
  return j;
}

CourantStructure CourantStructure::fromPqn(const PqnStructure& s) {
  CheckReport report = checkPqn(s);
  if (!report.allPass()) {
    std::string detail;
    for (const auto& c : report.checks)
      if (!c.pass) {
        detail = c.id;
        break;
      }
    throw PreconditionError("cannot assemble Courant algebroid: structure fails " + detail);
  }
  return CourantStructure(s);
}

CourantStructure CourantStructure::twistedStandard(const Chart& chart, const Form& phi) {
  if (phi.degree() != 3) throw Error("twist needs a 3-form");
  if (!exteriorD(phi).isZero()) throw PreconditionError("twist form must be closed");
  PqnStructure data(chart, MultiVector(chart, 2), EndoField::identity(chart), phi);
  return CourantStructure(std::move(data));
}

Polynomial pairingE(const CourantSection& s1, const CourantSection& s2) {
  requireSameChart(s1.chart(), s2.chart(), "Courant pairing");
  return Rational(1, 2) * (pairing(s2.form, s1.vec) + pairing(s1.form, s2.vec));
}

VectorField anchorE(const CourantStructure& c, const CourantSection& s) {
  requireSameChart(c.chart(), s.chart(), "Courant anchor");
  return c.n().apply(s.vec) + sharp(c.pi(), s.form);
}

CourantSection bracketE(const CourantStructure& c, const CourantSection& s1,
                        const CourantSection& s2) {
  requireSameChart(c.chart(), s1.chart(), "Courant bracket");
  requireSameChart(c.chart(), s2.chart(), "Courant bracket");
  const Chart& chart = c.chart();
  const VectorField& x = s1.vec;
  const Form& alpha = s1.form;
  const VectorField& y = s2.vec;
  const Form& beta = s2.form;

  // f = <alpha,Y> - <beta,X>; the two halves of the mixed term share it.
  const Polynomial f = pairing(alpha, y) - pairing(beta, x);

  VectorField vec = bracketN(c.n(), x, y);
  vec += contract(alpha, lichnerowiczD(c.pi(), y));
  vec -= contract(beta, lichnerowiczD(c.pi(), x));
  {
    const MultiVector half = lichnerowiczD(c.pi(), MultiVector::scalar(chart, Rational(1, 2) * f));
    vec += half;
  }

  Form form = contractPair(x, y, c.phi());
  form += koszulBracket(alpha, beta, c.pi());
  form -= contract(y, dN(c.n(), alpha));
  form += contract(x, dN(c.n(), beta));
  form -= dN(c.n(), Form::scalar(chart, Rational(1, 2) * f));

  return CourantSection(std::move(vec), std::move(form));
}

CourantSection dOperator(const CourantStructure& c, const Polynomial& f) {
  const Form df = exteriorD(f, c.chart());
  return CourantSection(-sharp(c.pi(), df), c.n().applyTranspose(df));
}

SectionBattery SectionBattery::standard(const Chart& chart, Rng rng, int randomSections,
                                        int coeffDegree) {
  SectionBattery battery;
  const int n = chart.dim();

  std::vector<CourantSection> frame;
  for (int i = 0; i < n; ++i) frame.push_back(CourantSection::ofVector(frameField(chart, i)));
  for (int i = 0; i < n; ++i) frame.push_back(CourantSection::ofForm(coordinateForm(chart, i)));

  battery.pairItems = frame;
  for (int m = 0; m < n; ++m)
    for (const auto& s : frame) battery.pairItems.push_back(Polynomial::variable(n, m) * s);

  battery.tripleItems = frame;
  for (int k = 0; k < randomSections; ++k)
    battery.tripleItems.push_back(
        CourantSection(rng.vectorField(chart, coeffDegree), rng.form(chart, 1, coeffDegree)));

  for (int i = 0; i < n; ++i) battery.functions.push_back(Polynomial::variable(n, i));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      battery.functions.push_back(Polynomial::variable(n, i) * Polynomial::variable(n, j));
  battery.functions.push_back(rng.polynomial(chart, coeffDegree));
  return battery;
}

namespace {

Witness sectionWitness(std::string name, const CourantSection& defect) {
  Json payload;
  payload["kind"] = "section";
  payload["value"] = defect.toJson();
  const auto point = defect.chart().samplePoint();
  Json sample;
  sample["point"] = Json::array();
  for (const auto& r : point) sample["point"].push_back(r.str());
  Json vec = Json::object(), form = Json::object();
  for (const auto& [idx, c] : defect.vec.components())
    vec[MultiVector::componentName(idx)] = c.evaluate(point).str();
  for (const auto& [idx, c] : defect.form.components())
    form[Form::componentName(idx)] = c.evaluate(point).str();
  sample["vec"] = std::move(vec);
  sample["form"] = std::move(form);
  payload["sample"] = std::move(sample);
  std::string text = name + ": " + defect.str();
  return Witness{std::move(name), std::move(text), std::move(payload)};
}

}  // namespace

CheckReport checkCourantAxioms(const CourantStructure& c, const SectionBattery& battery) {
  CheckReport report;
  const Chart& chart = c.chart();

  {
    // (i) rho([[A,B]]) = [rho A, rho B]
    bool pass = true;
    for (std::size_t i = 0; i < battery.pairItems.size() && pass; ++i) {
      for (std::size_t j = 0; j < battery.pairItems.size() && pass; ++j) {
        const auto& a = battery.pairItems[i];
        const auto& b = battery.pairItems[j];
        const VectorField defect = anchorE(c, bracketE(c, a, b)) -
                                   lieBracket(anchorE(c, a), anchorE(c, b));
        if (!defect.isZero()) {
          pass = false;
          report.add(CheckResult::fail(
              "courant/1-anchor-bracket",
              witnessOf("rho[[A,B]] - [rho A, rho B] at pair (" + std::to_string(i) + "," +
                            std::to_string(j) + ")",
                        defect)));
        }
      }
    }
    if (pass) report.add(CheckResult::ok("courant/1-anchor-bracket"));
  }

  {
    // (ii) cyclic Jacobi defect = (1/3) D(cyclic pairing sum)
    bool pass = true;
    const auto& items = battery.tripleItems;
    for (std::size_t i = 0; i < items.size() && pass; ++i) {
      for (std::size_t j = 0; j < items.size() && pass; ++j) {
        for (std::size_t k = 0; k < items.size() && pass; ++k) {
          const auto& a = items[i];
          const auto& b = items[j];
          const auto& cc = items[k];
          const CourantSection ab = bracketE(c, a, b);
          const CourantSection bc = bracketE(c, b, cc);
          const CourantSection ca = bracketE(c, cc, a);
          const CourantSection lhs =
              bracketE(c, ab, cc) + bracketE(c, bc, a) + bracketE(c, ca, b);
          const Polynomial cyclicPairing =
              pairingE(ab, cc) + pairingE(bc, a) + pairingE(ca, b);
          const CourantSection rhs = Rational(1, 3) * dOperator(c, cyclicPairing);
          const CourantSection defect = lhs - rhs;
          if (!defect.isZero()) {
            pass = false;
            report.add(CheckResult::fail(
                "courant/2-jacobiator",
                sectionWitness("Jac(A,B,C) - (1/3)D(cyclic pairing) at triple (" +
                                   std::to_string(i) + "," + std::to_string(j) + "," +
                                   std::to_string(k) + ")",
                               defect)));
          }
        }
      }
    }
    if (pass) report.add(CheckResult::ok("courant/2-jacobiator"));
  }

  {
    // (iii) [[A, fB]] = f[[A,B]] + rho(A)(f) B - <A,B> Df
    bool pass = true;
    const auto& items = battery.tripleItems;
    for (std::size_t i = 0; i < items.size() && pass; ++i) {
      for (std::size_t j = 0; j < items.size() && pass; ++j) {
        for (const auto& f : battery.functions) {
          const auto& a = items[i];
          const auto& b = items[j];
          const CourantSection lhs = bracketE(c, a, f * b);
          const CourantSection rhs = f * bracketE(c, a, b) +
                                     applyVectorField(anchorE(c, a), f) * b -
                                     pairingE(a, b) * dOperator(c, f);
          const CourantSection defect = lhs - rhs;
          if (!defect.isZero()) {
            pass = false;
            report.add(CheckResult::fail(
                "courant/3-leibniz",
                sectionWitness("[[A,fB]] - Leibniz at pair (" + std::to_string(i) + "," +
                                   std::to_string(j) + "), f = " + f.str(chart.varNames()),
                               defect)));
            break;
          }
        }
      }
    }
    if (pass) report.add(CheckResult::ok("courant/3-leibniz"));
  }

  {
    // (iv) <Df, Dg> = 0
    bool pass = true;
    for (const auto& f : battery.functions) {
      for (const auto& g : battery.functions) {
        const Polynomial defect = pairingE(dOperator(c, f), dOperator(c, g));
        if (!defect.isZero()) {
          pass = false;
          report.add(CheckResult::fail(
              "courant/4-coisotropy",
              witnessOf("<Df, Dg> for f = " + f.str(chart.varNames()) + ", g = " +
                            g.str(chart.varNames()),
                        defect, chart)));
          break;
        }
      }
      if (!pass) break;
    }
    if (pass) report.add(CheckResult::ok("courant/4-coisotropy"));
  }

  {
    // (v) rho(A)<B,C> = <[[A,B]] + D<A,B>, C> + <B, [[A,C]] + D<A,C>>
    bool pass = true;
    const auto& items = battery.tripleItems;
    for (std::size_t i = 0; i < items.size() && pass; ++i) {
      for (std::size_t j = 0; j < items.size() && pass; ++j) {
        for (std::size_t k = 0; k < items.size() && pass; ++k) {
          const auto& a = items[i];
          const auto& b = items[j];
          const auto& cc = items[k];
          const Polynomial lhs = applyVectorField(anchorE(c, a), pairingE(b, cc));
          const Polynomial rhs =
              pairingE(bracketE(c, a, b) + dOperator(c, pairingE(a, b)), cc) +
              pairingE(b, bracketE(c, a, cc) + dOperator(c, pairingE(a, cc)));
          const Polynomial defect = lhs - rhs;
          if (!defect.isZero()) {
            pass = false;
            report.add(CheckResult::fail(
                "courant/5-pairing-invariance",
                witnessOf("rho(A)<B,C> - RHS at triple (" + std::to_string(i) + "," +
                              std::to_string(j) + "," + std::to_string(k) + ")",
                          defect, chart)));
          }
        }
      }
    }
    if (pass) report.add(CheckResult::ok("courant/5-pairing-invariance"));
  }

  report.finalize();
  return report;
}

CheckReport checkCourantAxioms(const CourantStructure& c) {
  return checkCourantAxioms(c, SectionBattery::standard(c.chart(), Rng(0x9e3779b9u)));
}

CourantSection gauge(const Form& omega, const CourantSection& s) {
  if (omega.degree() != 2) throw Error("gauge transform needs a 2-form");
  requireSameChart(omega.chart(), s.chart(), "gauge");
  return CourantSection(s.vec, contract(s.vec, omega) + s.form);
}

const Form& LagrangianGraph::twoForm() const {
  if (kind_ != Kind::GraphOfTwoForm) throw Error("not a graph subbundle");
  return b_;
}

std::vector<CourantSection> LagrangianGraph::frameSections() const {
  std::vector<CourantSection> out;
  for (int i = 0; i < chart_.dim(); ++i) {
    if (kind_ == Kind::GraphOfTwoForm) {
      const VectorField e = frameField(chart_, i);
      out.push_back(CourantSection(e, flat(b_, e)));
    } else {
      out.push_back(CourantSection::ofForm(coordinateForm(chart_, i)));
    }
  }
  return out;
}

LagrangianGraph graphSubbundle(const Form& b) {
  if (b.degree() != 2) throw Error("graph subbundle needs a 2-form");
  return LagrangianGraph(LagrangianGraph::Kind::GraphOfTwoForm, b.chart(), b);
}

LagrangianGraph cotangentFiber(const Chart& chart) {
  return LagrangianGraph(LagrangianGraph::Kind::CotangentFiber, chart, Form(chart, 2));
}

namespace {

// Component of a section transverse to L: for Gr(B) w.r.t. E = L + T*M the
// defect of Z + gamma is gamma - B.flat(Z); for T*M it is the vector part.
Form graphClosureDefect(const LagrangianGraph& l, const CourantSection& s) {
  return s.form - flat(l.twoForm(), s.vec);
}

}  // namespace

CheckReport isDirac(const CourantStructure& c, const LagrangianGraph& l) {
  requireSameChart(c.chart(), l.chart(), "isDirac");
  CheckReport report;
  const auto frame = l.frameSections();
  bool pass = true;
  for (std::size_t i = 0; i < frame.size() && pass; ++i) {
    for (std::size_t j = 0; j < frame.size() && pass; ++j) {
      const CourantSection br = bracketE(c, frame[i], frame[j]);
      if (l.kind() == LagrangianGraph::Kind::GraphOfTwoForm) {
        const Form defect = graphClosureDefect(l, br);
        if (!defect.isZero()) {
          pass = false;
          report.add(CheckResult::fail(
              "dirac/1-closure",
              witnessOf("transverse defect of [[s" + std::to_string(i + 1) + ",s" +
                            std::to_string(j + 1) + "]]",
                        defect)));
        }
      } else {
        if (!br.vec.isZero()) {
          pass = false;
          report.add(CheckResult::fail(
              "dirac/1-closure",
              witnessOf("vector part of [[dx" + std::to_string(i + 1) + ",dx" +
                            std::to_string(j + 1) + "]]",
                        br.vec)));
        }
      }
    }
  }
  if (pass) report.add(CheckResult::ok("dirac/1-closure"));

  // f-linearity guard for the closure defect of an isotropic subbundle.
  if (l.kind() == LagrangianGraph::Kind::GraphOfTwoForm && !frame.empty()) {
    const Chart& chart = c.chart();
    const Polynomial f =
        Polynomial::variable(chart.dim(), 0) +
        Polynomial::variable(chart.dim(), chart.dim() - 1) * Polynomial::variable(chart.dim(), 0);
    const CourantSection& s1 = frame.front();
    const CourantSection& s2 = frame.back();
    const Form guard = graphClosureDefect(l, bracketE(c, f * s1, s2)) -
                       f * graphClosureDefect(l, bracketE(c, s1, s2));
    if (guard.isZero()) {
      report.add(CheckResult::ok("dirac/2-tensoriality-guard"));
    } else {
      report.add(CheckResult::fail("dirac/2-tensoriality-guard",
                                   witnessOf("defect(f s1, s2) - f defect(s1, s2)", guard)));
    }
  }

  report.finalize();
  return report;
}

InducedQlba inducedQlba(const CourantStructure& c, const LagrangianGraph& l) {
  requireSameChart(c.chart(), l.chart(), "inducedQlba");
  if (l.kind() != LagrangianGraph::Kind::GraphOfTwoForm)
    throw PreconditionError("induced structure needs a Lagrangian transversal to T*M");
  const Chart& chart = c.chart();
  const int n = chart.dim();
  const Form& b = l.twoForm();

  // Identification X -> X + B.flat X; its bracket projected back to the
  // vector part realizes [.,.]_L under the identification.
  const auto lift = [&](const VectorField& x) { return CourantSection(x, flat(b, x)); };

  std::vector<CourantSection> liftedFrame;
  std::vector<VectorField> anchors;            // rho(lifted frame)
  std::vector<std::vector<VectorField>> lBr;   // vector part of [[~e_i, ~e_j]]
  for (int i = 0; i < n; ++i) {
    liftedFrame.push_back(lift(frameField(chart, i)));
    anchors.push_back(anchorE(c, liftedFrame.back()));
  }
  lBr.assign(n, std::vector<VectorField>(n, VectorField(chart, 1)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) lBr[i][j] = bracketE(c, liftedFrame[i], liftedFrame[j]).vec;

  const auto dL = [&](const Form& psi) {
    const int k = psi.degree();
    Form out(chart, k + 1);
    if (out.trivialByDegree()) return out;
    for (const auto& tuple : increasingTuples(n, k + 1)) {
      Polynomial acc = Polynomial::zero(n);
      for (int a = 0; a <= k; ++a) {
        IndexTuple rest;
        for (int t = 0; t <= k; ++t)
          if (t != a) rest.push_back(tuple[t]);
        Polynomial term = applyVectorField(anchors[tuple[a]], psi.component(rest));
        if (a % 2 == 1) term = -term;
        acc += term;
      }
      for (int a = 0; a <= k; ++a) {
        for (int bpos = a + 1; bpos <= k; ++bpos) {
          std::vector<VectorField> args;
          args.push_back(lBr[tuple[a]][tuple[bpos]]);
          for (int t = 0; t <= k; ++t)
            if (t != a && t != bpos) args.push_back(frameField(chart, tuple[t]));
          Polynomial term = evalOnVectors(psi, args);
          if ((a + bpos) % 2 == 1) term = -term;  // (-1)^{i+j} with 1-based i,j
          acc += term;
        }
      }
      out.accumulate(tuple, acc);
    }
    return out;
  };

  InducedQlba result{{}, Form(chart, 3)};

  // Spanning battery: basis forms with constant, linear and quadratic
  // coefficients, for every degree 0..n.
  for (int k = 0; k <= n; ++k) {
    for (const auto& idx : increasingTuples(n, k)) {
      std::vector<Polynomial> coeffs;
      coeffs.push_back(Polynomial::constant(n, Rational(1)));
      for (int m = 0; m < n; ++m) coeffs.push_back(Polynomial::variable(n, m));
      for (int m = 0; m < n; ++m)
        for (int m2 = m; m2 < n; ++m2)
          coeffs.push_back(Polynomial::variable(n, m) * Polynomial::variable(n, m2));
      for (auto& coeff : coeffs) {
        Form psi = Form::monomial(chart, idx, coeff);
        result.derivationTable.emplace_back(psi, dL(psi));
      }
    }
  }

  // Induced 3-form: phi_L(X1,X2,X3) = 2<[[~X1,~X2]], ~X3>.
  for (const auto& tuple : increasingTuples(n, 3)) {
    const CourantSection br = bracketE(c, liftedFrame[tuple[0]], liftedFrame[tuple[1]]);
    const Polynomial value = Rational(2) * pairingE(br, liftedFrame[tuple[2]]);
    result.phi.accumulate(tuple, value);
  }
  return result;
}

CheckReport verifyGraphBracket(const CourantStructure& c, const Form& omega) {
  requireSameChart(c.chart(), omega.chart(), "verifyGraphBracket");
  if (omega.degree() != 2) throw PreconditionError("graph bracket check needs a 2-form");
  if (!exteriorD(omega).isZero())
    throw PreconditionError("graph bracket check needs a closed 2-form");
  const Chart& chart = c.chart();
  CheckReport report;

  EndoField nHat = c.n();
  nHat += composeSharpFlat(c.pi(), omega);
  const Form phiHat =
      c.phi() + dN(c.n(), omega) + Rational(1, 2) * koszulBracket(omega, omega, c.pi());

  bool pass = true;
  for (int i = 0; i < chart.dim() && pass; ++i) {
    for (int j = 0; j < chart.dim() && pass; ++j) {
      const VectorField x = frameField(chart, i);
      const VectorField y = frameField(chart, j);
      const CourantSection lhs =
          bracketE(c, CourantSection(x, flat(omega, x)), CourantSection(y, flat(omega, y)));
      const VectorField bn = bracketN(nHat, x, y);
      const CourantSection rhs(bn, flat(omega, bn) + contractPair(x, y, phiHat));
      const CourantSection defect = lhs - rhs;
      if (!defect.isZero()) {
        pass = false;
        report.add(CheckResult::fail(
            "graph-bracket/frame",
            sectionWitness("[[~e" + std::to_string(i + 1) + ",~e" + std::to_string(j + 1) +
                               "]] - deformed RHS",
                           defect)));
      }
    }
  }
  if (pass) report.add(CheckResult::ok("graph-bracket/frame"));
  return report;
}

}  // namespace pqn
