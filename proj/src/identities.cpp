#include "pqn/identities.hpp"

#include <algorithm>
#include <functional>

namespace pqn {

namespace {

CheckResult loop(const std::string& id, int reps,
                 const std::function<std::optional<Witness>(int)>& body) {
  for (int rep = 0; rep < reps; ++rep) {
    auto defect = body(rep);
    if (defect) return CheckResult::fail(id, std::move(*defect));
  }
  return CheckResult::ok(id);
}

std::optional<Witness> formDefect(const std::string& name, const Form& defect, int rep) {
  if (defect.isZero()) return std::nullopt;
  return witnessOf(name + " (instance " + std::to_string(rep) + ")", defect);
}

std::optional<Witness> mvDefect(const std::string& name, const MultiVector& defect, int rep) {
  if (defect.isZero()) return std::nullopt;
  return witnessOf(name + " (instance " + std::to_string(rep) + ")", defect);
}

// (def:d_N)-style alternating expansion, evaluated on concrete fields.
Polynomial dnExpansion(const EndoField& n, const Form& eta, const std::vector<VectorField>& xs) {
  const Chart& chart = eta.chart();
  const int kp1 = static_cast<int>(xs.size());
  Polynomial acc = Polynomial::zero(chart.dim());
  for (int a = 0; a < kp1; ++a) {
    std::vector<VectorField> rest;
    for (int t = 0; t < kp1; ++t)
      if (t != a) rest.push_back(xs[t]);
    Polynomial term = applyVectorField(n.apply(xs[a]), evalOnVectors(eta, rest));
    if (a % 2 == 1) term = -term;
    acc += term;
  }
  for (int a = 0; a < kp1; ++a) {
    for (int b = a + 1; b < kp1; ++b) {
      std::vector<VectorField> args;
      args.push_back(bracketN(n, xs[a], xs[b]));
      for (int t = 0; t < kp1; ++t)
        if (t != a && t != b) args.push_back(xs[t]);
      Polynomial term = evalOnVectors(eta, args);
      if ((a + b) % 2 == 1) term = -term;  // (-1)^{i+j}, 1-based
      acc += term;
    }
  }
  return acc;
}

// Algebroid-differential expansion for the cotangent algebroid of pi.
Polynomial dPiExpansion(const MultiVector& pi, const MultiVector& p, const std::vector<Form>& alphas) {
  const Chart& chart = p.chart();
  const int kp1 = static_cast<int>(alphas.size());
  Polynomial acc = Polynomial::zero(chart.dim());
  for (int a = 0; a < kp1; ++a) {
    std::vector<Form> rest;
    for (int t = 0; t < kp1; ++t)
      if (t != a) rest.push_back(alphas[t]);
    Polynomial term = applyVectorField(sharp(pi, alphas[a]), evalOnForms(p, rest));
    if (a % 2 == 1) term = -term;
    acc += term;
  }
  for (int a = 0; a < kp1; ++a) {
    for (int b = a + 1; b < kp1; ++b) {
      std::vector<Form> args;
      args.push_back(koszulBracket(alphas[a], alphas[b], pi));
      for (int t = 0; t < kp1; ++t)
        if (t != a && t != b) args.push_back(alphas[t]);
      Polynomial term = evalOnForms(p, args);
      if ((a + b) % 2 == 1) term = -term;
      acc += term;
    }
  }
  return acc;
}

// [f, eta]_pi computed without the i_{pi# df} shortcut: peel monomials with
// the Leibniz rule down to the degree-1 base case [f, alpha] = -<df, pi# alpha>.
Form koszulFunctionBracketViaLeibniz(const Polynomial& f, const Form& eta, const MultiVector& pi) {
  const Chart& chart = eta.chart();
  if (eta.degree() == 0) return Form(chart, 0);
  if (eta.degree() == 1) {
    // [f, alpha] = -[alpha, f] = -<df, pi# alpha>
    return Form::scalar(chart, -pairing(exteriorD(f, chart), sharp(pi, eta)));
  }
  Form acc(chart, eta.degree() - 1);
  for (const auto& [idx, coeff] : eta.components()) {
    const Form head = Form::monomial(chart, {idx[0]}, coeff);
    const Form tail = Form::basis(chart, IndexTuple(idx.begin() + 1, idx.end()));
    // [f, u^w] = [f,u]^w - u^[f,w]
    acc += wedge(koszulFunctionBracketViaLeibniz(f, head, pi), tail);
    acc -= wedge(head, koszulFunctionBracketViaLeibniz(f, tail, pi));
  }
  return acc;
}

}  // namespace

CheckResult checkDSquared(const Chart& chart, Rng rng, int reps) {
  return loop("d-squared", reps, [&](int rep) {
    const int k = rng.range(0, chart.dim() - 1);
    const Form eta = rng.form(chart, k, 3);
    return formDefect("d(d eta)", exteriorD(exteriorD(eta)), rep);
  });
}

CheckResult checkCartan(const Chart& chart, Rng rng, int reps) {
  return loop("cartan", reps, [&](int rep) -> std::optional<Witness> {
    const int k = rng.range(0, chart.dim());
    const Form eta = rng.form(chart, k, 3);
    const VectorField x = rng.vectorField(chart, 3);
    const Form viaCartan = lieDerivativeForm(x, eta);
    std::vector<VectorField> ys;
    for (int i = 0; i < k; ++i) ys.push_back(rng.vectorField(chart, 2));
    // Frame-expansion route.
    Polynomial expansion = applyVectorField(x, evalOnVectors(eta, ys));
    for (int i = 0; i < k; ++i) {
      std::vector<VectorField> args = ys;
      args[i] = lieBracket(x, ys[i]);
      expansion -= evalOnVectors(eta, args);
    }
    const Polynomial defect = evalOnVectors(viaCartan, ys) - expansion;
    if (defect.isZero()) return std::nullopt;
    return witnessOf("(L_X eta)(Y..) - expansion (instance " + std::to_string(rep) + ")", defect,
                     chart);
  });
}

CheckResult checkCartanCommutator(const Chart& chart, Rng rng, int reps) {
  return loop("cartan-commutator", reps, [&](int rep) {
    const int k = rng.range(1, chart.dim());
    const Form eta = rng.form(chart, k, 3);
    const VectorField x = rng.vectorField(chart, 3);
    const VectorField y = rng.vectorField(chart, 3);
    const Form lhs =
        lieDerivativeForm(x, contract(y, eta)) - contract(y, lieDerivativeForm(x, eta));
    const Form defect = lhs - contract(lieBracket(x, y), eta);
    return formDefect("[L_X, i_Y] eta - i_{[X,Y]} eta", defect, rep);
  });
}

CheckResult checkK1(const Chart& chart, Rng rng, int reps) {
  return loop("k1-antisymmetry", reps, [&](int rep) {
    const MultiVector pi = rng.multiVector(chart, 2, 2);
    const int p = rng.range(0, std::min(chart.dim(), 2));
    const int q = rng.range(0, std::min(chart.dim(), 2));
    const Form a = rng.form(chart, p, 2);
    const Form b = rng.form(chart, q, 2);
    Form flipped = koszulBracket(b, a, pi);
    if (((p - 1) * (q - 1)) % 2 == 0) flipped = -flipped;
    const Form defect = koszulBracket(a, b, pi) - flipped;
    return formDefect("[a,b]_pi + (-1)^{(p-1)(q-1)}[b,a]_pi", defect, rep);
  });
}

CheckResult checkK3(const Chart& chart, Rng rng, int reps) {
  return loop("k3-leibniz", reps, [&](int rep) {
    const MultiVector pi = rng.multiVector(chart, 2, 2);
    const int p = rng.range(0, 2);
    const int q = rng.range(0, 2);
    const int r = rng.range(0, 2);
    const Form a = rng.form(chart, p, 2);
    const Form b = rng.form(chart, q, 2);
    const Form c = rng.form(chart, r, 2);
    // Degree-0 brackets collapse their nominal degree; accumulate only
    // nonzero terms against the true degree p+q+r-1.
    Form defect = koszulBracket(a, wedge(b, c), pi);
    if (defect.isZero()) defect = Form(chart, std::max(p + q + r - 1, 0));
    const Form first = wedge(koszulBracket(a, b, pi), c);
    Form mixed = wedge(b, koszulBracket(a, c, pi));
    if (((p - 1) * q) % 2 != 0) mixed = -mixed;  // note: negative odd products
    for (const Form* term : std::initializer_list<const Form*>{&first, &mixed}) {
      if (term->isZero()) continue;
      if (defect.isZero() && defect.degree() != term->degree())
        defect = Form(chart, term->degree());
      defect -= *term;
    }
    return formDefect("[a, b^c]_pi - Leibniz", defect, rep);
  });
}

CheckResult checkK2All(const Chart& chart, Rng rng, int reps) {
  return loop("k2-function-bracket", reps, [&](int rep) {
    const MultiVector pi = rng.multiVector(chart, 2, 2);
    const Polynomial f = rng.polynomial(chart, 3);
    const int q = rng.range(1, chart.dim());
    const Form eta = rng.form(chart, q, 2);
    const Form direct = contract(sharp(pi, exteriorD(f, chart)), eta);
    const Form viaLeibniz = koszulFunctionBracketViaLeibniz(f, eta, pi);
    const Form viaEngine = koszulBracket(Form::scalar(chart, f), eta, pi);
    const Form d1 = viaLeibniz - direct;
    if (!d1.isZero()) return formDefect("Leibniz route - i_{pi# df} eta", d1, rep);
    return formDefect("[f,eta]_pi - i_{pi# df} eta", viaEngine - direct, rep);
  });
}

namespace {

// Degree-0 pairs collapse the bracket's nominal degree (p+q-1 = -1 is stored
// as 0), so the three Jacobi terms can disagree on degree while being zero;
// only nonzero terms are accumulated.
template <Variance V, typename Bracket>
AltTensor<V> cyclicJacobiDefect(const AltTensor<V>& e1, const AltTensor<V>& e2,
                                const AltTensor<V>& e3, const Bracket& br) {
  const int q1 = e1.degree(), q2 = e2.degree(), q3 = e3.degree();
  struct Term {
    const AltTensor<V>* a;
    const AltTensor<V>* b;
    const AltTensor<V>* c;
    int sign;
  };
  const Term terms[3] = {
      {&e1, &e2, &e3, ((q1 - 1) * (q3 - 1)) % 2 == 0 ? 1 : -1},
      {&e2, &e3, &e1, ((q2 - 1) * (q1 - 1)) % 2 == 0 ? 1 : -1},
      {&e3, &e1, &e2, ((q3 - 1) * (q2 - 1)) % 2 == 0 ? 1 : -1},
  };
  AltTensor<V> acc(e1.chart(), std::max(q1 + q2 + q3 - 2, 0));
  for (const auto& t : terms) {
    AltTensor<V> outer = br(*t.a, br(*t.b, *t.c));
    if (outer.isZero()) continue;
    if (acc.isZero() && acc.degree() != outer.degree())
      acc = AltTensor<V>(e1.chart(), outer.degree());
    acc += (t.sign > 0) ? outer : -outer;
  }
  return acc;
}

Form jacobiDefect(const Form& e1, const Form& e2, const Form& e3, const MultiVector& pi) {
  return cyclicJacobiDefect(e1, e2, e3,
                            [&](const Form& a, const Form& b) { return koszulBracket(a, b, pi); });
}

MultiVector schoutenJacobiDefect(const MultiVector& e1, const MultiVector& e2,
                                 const MultiVector& e3, SchoutenSign sign) {
  return cyclicJacobiDefect(e1, e2, e3, [&](const MultiVector& a, const MultiVector& b) {
    return schouten(a, b, sign);
  });
}

}  // namespace

CheckResult checkGradedJacobiPoisson(const Chart& chart, Rng rng, int reps) {
  return loop("graded-jacobi", reps, [&](int rep) {
    const MultiVector pi = rng.poissonBivector(chart);
    const Form e1 = rng.form(chart, rng.range(0, 2), 2);
    const Form e2 = rng.form(chart, rng.range(0, 2), 2);
    const Form e3 = rng.form(chart, rng.range(0, 2), 2);
    return formDefect("graded Jacobi sum", jacobiDefect(e1, e2, e3, pi), rep);
  });
}

CheckResult checkGradedJacobiCounterexample(const Chart& chart, Rng rng, int reps) {
  const std::string id = "graded-jacobi-counterexample";
  if (chart.dim() < 3)
    return CheckResult::fail(id, witnessText("unsupported", "needs a chart of dim >= 3"));
  // A bivector with nonvanishing self-bracket.
  MultiVector pi(chart, 2);
  pi.accumulate({0, 1}, Polynomial::variable(chart.dim(), 0));
  pi.accumulate({0, 2}, Polynomial::variable(chart.dim(), 2));
  if (schouten(pi, pi).isZero())
    return CheckResult::fail(id, witnessText("fixture", "control bivector is Poisson"));
  // The coordinate 1-forms already expose the failure for this fixture; scan
  // a small battery and exhibit the first defect.
  std::vector<Form> battery;
  for (int i = 0; i < chart.dim(); ++i) battery.push_back(coordinateForm(chart, i));
  for (int r = 0; r < reps; ++r) battery.push_back(rng.form(chart, 1, 2));
  for (std::size_t i = 0; i < battery.size(); ++i)
    for (std::size_t j = 0; j < battery.size(); ++j)
      for (std::size_t k = 0; k < battery.size(); ++k) {
        const Form defect = jacobiDefect(battery[i], battery[j], battery[k], pi);
        if (!defect.isZero()) {
          auto w = witnessOf("Jacobi defect for non-Poisson pi", defect);
          return CheckResult{id, true, std::move(w)};  // pass: counterexample exhibited
        }
      }
  return CheckResult::fail(id, witnessText("search", "no Jacobi defect found on battery"));
}

CheckResult checkSchoutenJacobi(const Chart& chart, Rng rng, int reps) {
  return loop("schouten-jacobi", reps, [&](int rep) {
    const MultiVector e1 = rng.multiVector(chart, rng.range(0, 2), 2);
    const MultiVector e2 = rng.multiVector(chart, rng.range(0, 2), 2);
    const MultiVector e3 = rng.multiVector(chart, rng.range(1, 2), 2);
    return mvDefect("Schouten graded Jacobi sum",
                    schoutenJacobiDefect(e1, e2, e3, SchoutenSign::Standard), rep);
  });
}

CheckResult checkSchoutenFlipBreaksJacobi(const Chart& chart, Rng rng, int reps) {
  const std::string id = "schouten-flip-negative-control";
  // Deterministic counterexample (d1, x1 d2, x2): the flip shows only on
  // triples with a degree-0 member, and this one has flipped Jacobi sum 2.
  const MultiVector x = frameField(chart, 0);
  const MultiVector y = Polynomial::variable(chart.dim(), 0) * frameField(chart, 1);
  const MultiVector f =
      MultiVector::scalar(chart, Polynomial::variable(chart.dim(), 1));
  const MultiVector fixed = schoutenJacobiDefect(x, y, f, SchoutenSign::FlippedFunctionTerm);
  if (!fixed.isZero()) {
    if (!schoutenJacobiDefect(x, y, f, SchoutenSign::Standard).isZero())
      return CheckResult::fail(
          id, witnessText("control", "standard convention fails on the control triple"));
    auto w = witnessOf("Jacobi defect under flipped convention", fixed);
    return CheckResult{id, true, std::move(w)};  // pass: control failed as it must
  }
  for (int rep = 0; rep < std::max(reps, 8); ++rep) {
    const MultiVector e1 = MultiVector::scalar(chart, rng.polynomial(chart, 2));
    const MultiVector e2 = rng.multiVector(chart, rng.range(1, 2), 2);
    const MultiVector e3 = rng.multiVector(chart, rng.range(1, 2), 2);
    const MultiVector defect =
        schoutenJacobiDefect(e1, e2, e3, SchoutenSign::FlippedFunctionTerm);
    if (!defect.isZero()) {
      auto w = witnessOf("Jacobi defect under flipped convention", defect);
      return CheckResult{id, true, std::move(w)};
    }
  }
  return CheckResult::fail(
      id, witnessText("search", "flipped convention unexpectedly satisfied Jacobi"));
}

CheckResult checkDnTwoRoutes(const Chart& chart, Rng rng, int reps) {
  return loop("dN-two-routes", reps, [&](int rep) -> std::optional<Witness> {
    const EndoField n = rng.endo(chart, 2);
    // Top degree included: there the expansion must cancel identically.
    const int k = rng.range(0, chart.dim());
    const Form eta = rng.form(chart, k, 2);
    std::vector<VectorField> xs;
    for (int i = 0; i <= k; ++i) xs.push_back(rng.vectorField(chart, 2));
    const Polynomial viaOperators = evalOnVectors(dN(n, eta), xs);
    const Polynomial viaExpansion = dnExpansion(n, eta, xs);
    const Polynomial defect = viaOperators - viaExpansion;
    if (defect.isZero()) return std::nullopt;
    return witnessOf("(i_N d - d i_N)(eta) - expansion (instance " + std::to_string(rep) + ")",
                     defect, chart);
  });
}

CheckResult checkLichnerowiczTwoRoutes(const Chart& chart, Rng rng, int reps) {
  return loop("dpi-two-routes", reps, [&](int rep) -> std::optional<Witness> {
    const MultiVector pi = rng.poissonBivector(chart);
    const int k = rng.range(0, std::min(chart.dim() - 1, 2));
    const MultiVector p = rng.multiVector(chart, k, 2);
    std::vector<Form> alphas;
    for (int i = 0; i <= k; ++i) alphas.push_back(rng.form(chart, 1, 2));
    const Polynomial viaSchouten = evalOnForms(lichnerowiczD(pi, p), alphas);
    const Polynomial viaExpansion = dPiExpansion(pi, p, alphas);
    const Polynomial defect = viaSchouten - viaExpansion;
    if (defect.isZero()) return std::nullopt;
    return witnessOf("d_pi P - algebroid expansion (instance " + std::to_string(rep) + ")", defect,
                     chart);
  });
}

CheckResult checkDorfman(const Chart& chart, Rng rng, int reps) {
  return loop("dorfman", reps, [&](int rep) -> std::optional<Witness> {
    const MultiVector pi = rng.poissonBivector(chart);
    const Form omega = rng.form(chart, 2, 2);
    const VectorField x = rng.vectorField(chart, 2);
    const VectorField y = rng.vectorField(chart, 2);
    const VectorField z = rng.vectorField(chart, 2);
    const Polynomial lhs = evalOnVectors(koszulBracket(omega, omega, pi), {x, y, z});
    const VectorField* cyc[3][3] = {{&x, &y, &z}, {&y, &z, &x}, {&z, &x, &y}};
    Polynomial rhs = Polynomial::zero(chart.dim());
    for (auto& t : cyc) {
      const Form oa = flat(omega, *t[0]);
      const Form ob = flat(omega, *t[1]);
      rhs += pairing(koszulBracket(oa, ob, pi), *t[2]);
      rhs -= applyVectorField(sharp(pi, oa), evalOnVectors(omega, {*t[1], *t[2]}));
    }
    const Polynomial defect = lhs - Rational(2) * rhs;
    if (defect.isZero()) return std::nullopt;
    return witnessOf("[Om,Om]_pi(X,Y,Z) - 2 cyclic sum (instance " + std::to_string(rep) + ")",
                     defect, chart);
  });
}

CheckResult checkMonella(const Chart& chart, Rng rng, int reps) {
  return loop("monella", reps, [&](int rep) {
    const MultiVector pi = rng.poissonBivector(chart);
    const Form omega = rng.closedTwoForm(chart, 3);
    const EndoField n = composeSharpFlat(pi, omega);
    const int k = rng.range(0, chart.dim());
    const Form eta = rng.form(chart, k, 2);
    const Form defect = dN(n, eta) - koszulBracket(omega, eta, pi);
    return formDefect("d_{pi# Om.flat} eta - [Om, eta]_pi", defect, rep);
  });
}

CheckResult checkDnOmegaLemma(const Chart& chart, Rng rng, int reps) {
  return loop("dN-of-contracted-two-form", reps, [&](int rep) {
    const EndoField n = rng.endo(chart, 2);
    const Form omega = rng.form(chart, 2, 2);
    const VectorField x = rng.vectorField(chart, 2);
    const VectorField y = rng.vectorField(chart, 2);
    const Form lhs = dN(n, Form::scalar(chart, evalOnVectors(omega, {x, y})));
    Form rhs = contract(x, dN(n, flat(omega, y))) - contract(y, dN(n, flat(omega, x)));
    rhs -= contractPair(x, y, dN(n, omega));
    rhs -= contract(bracketN(n, x, y), omega);
    return formDefect("d_N(Om(X,Y)) - RHS", lhs - rhs, rep);
  });
}

CheckResult checkKoszulLemma(const Chart& chart, Rng rng, int reps) {
  return loop("koszul-graph-lemma", reps, [&](int rep) {
    const MultiVector pi = rng.poissonBivector(chart);
    const Form omega = rng.closedTwoForm(chart, 3);
    const VectorField x = rng.vectorField(chart, 2);
    const VectorField y = rng.vectorField(chart, 2);
    const EndoField n = composeSharpFlat(pi, omega);
    const Form lhs = koszulBracket(flat(omega, x), flat(omega, y), pi);
    const Form rhs = flat(omega, bracketN(n, x, y)) +
                     Rational(1, 2) * contractPair(x, y, koszulBracket(omega, omega, pi));
    return formDefect("[Om.X,Om.Y]_pi - graph RHS", lhs - rhs, rep);
  });
}

CheckResult checkKoszulBis(const Chart& chart, Rng rng, int reps) {
  return loop("koszul-graph-lemma-bis", reps, [&](int rep) {
    const MultiVector pi = rng.poissonBivector(chart);
    const Form omega = rng.form(chart, 2, 2);  // arbitrary, closed or not
    const VectorField x = rng.vectorField(chart, 2);
    const VectorField y = rng.vectorField(chart, 2);
    const Form lhs = koszulBracket(flat(omega, x), flat(omega, y), pi);
    const Form rhs = flat(omega, omegaPiBracket(x, y, omega, pi)) +
                     Rational(1, 2) * contractPair(x, y, koszulBracket(omega, omega, pi));
    return formDefect("[Om.X,Om.Y]_pi - omega-pi RHS", lhs - rhs, rep);
  });
}

CheckResult checkTorsionTensorial(const Chart& chart, Rng rng, int reps) {
  return loop("torsion-tensorial", reps, [&](int rep) {
    const EndoField n = rng.endo(chart, 2);
    const Polynomial f = rng.polynomial(chart, 3);
    const VectorField x = rng.vectorField(chart, 2);
    const VectorField y = rng.vectorField(chart, 2);
    const VectorField defect =
        nijenhuisTorsion(n, f * x, y) - f * nijenhuisTorsion(n, x, y);
    return mvDefect("T_N(fX,Y) - f T_N(X,Y)", defect, rep);
  });
}

CheckResult checkDnDerivationIffCompatible(const Chart& chart, Rng rng, int reps) {
  const std::string id = "dN-derivation-iff-compatible";
  const int dim = chart.dim();
  MultiVector pi(chart, 2);
  pi.accumulate({0, 1}, Polynomial::constant(dim, Rational(1)));
  // Incompatible fixture: N projects onto the first axis (fails N pi# = pi# N*).
  EndoField incompatible(chart);
  incompatible.setEntry(0, 0, Polynomial::constant(dim, Rational(1)));

  const auto derivationDefect = [&](const EndoField& n, const Form& a, const Form& b) {
    const int p = a.degree(), q = b.degree();
    // [f,g] is the zero element of true degree -1; d_N of it is the zero
    // scalar, not d_N applied to the clamped degree-0 zero.
    Form lhs = (p + q == 0) ? Form(chart, 0) : dN(n, koszulBracket(a, b, pi));
    Form rhs = koszulBracket(dN(n, a), b, pi);
    Form mixed = koszulBracket(a, dN(n, b), pi);
    rhs += (p % 2 == 1) ? mixed : -mixed;
    return lhs - rhs;
  };

  for (int rep = 0; rep < reps; ++rep) {
    // Id + pi# Om.flat is compatible with pi for every closed Omega; this
    // yields varied nonconstant compatible pairs.
    EndoField compatible = EndoField::identity(chart);
    compatible += composeSharpFlat(pi, rng.closedTwoForm(chart, 2));
    const Form a = rng.form(chart, rng.range(0, 2), 2);
    const Form b = rng.form(chart, rng.range(0, 2), 2);
    const Form defect = derivationDefect(compatible, a, b);
    if (!defect.isZero())
      return CheckResult::fail(
          id, witnessOf("derivation defect for a compatible pair (instance " +
                            std::to_string(rep) + ")",
                        defect));
  }
  // Reverse direction: some input must break the derivation rule. Functions
  // matter here: on (f, g) the derivation defect is <dg, (pi#N* - N pi#) df>,
  // which is what detects the sharp-intertwine condition.
  std::vector<Form> battery;
  for (int i = 0; i < dim; ++i) battery.push_back(Form::scalar(chart, Polynomial::variable(dim, i)));
  for (int i = 0; i < dim; ++i) battery.push_back(coordinateForm(chart, i));
  battery.push_back(Polynomial::variable(dim, 0) * coordinateForm(chart, dim - 1));
  for (int r = 0; r < 4; ++r) battery.push_back(rng.form(chart, 1, 2));
  for (const auto& a : battery)
    for (const auto& b : battery) {
      const Form defect = derivationDefect(incompatible, a, b);
      if (!defect.isZero()) return CheckResult::ok(id);
    }
  return CheckResult::fail(
      id, witnessText("reverse direction",
                      "d_N stayed a bracket derivation for an incompatible pair"));
}

CheckReport bracketIdentitySuite(const Chart& chart, Rng rng, int reps) {
  CheckReport report;
  const auto item = [&](const char* id, CheckResult r) {
    r.id = std::string(id) + "-" + r.id;
    report.add(std::move(r));
  };
  item("bracket/01", checkDSquared(chart, rng.fork("d2"), reps));
  item("bracket/02", checkCartan(chart, rng.fork("cartan"), reps));
  item("bracket/03", checkCartanCommutator(chart, rng.fork("cartan-comm"), reps));
  item("bracket/04", checkK1(chart, rng.fork("k1"), reps));
  item("bracket/05", checkK3(chart, rng.fork("k3"), reps));
  item("bracket/06", checkK2All(chart, rng.fork("k2"), reps));
  item("bracket/07", checkGradedJacobiPoisson(chart, rng.fork("jacobi"), reps));
  item("bracket/08", checkSchoutenJacobi(chart, rng.fork("schouten-jacobi"), std::max(reps / 2, 10)));
  item("bracket/09", checkDnTwoRoutes(chart, rng.fork("dn2"), reps));
  item("bracket/10", checkLichnerowiczTwoRoutes(chart, rng.fork("dpi2"), reps));
  item("bracket/11", checkDorfman(chart, rng.fork("dorfman"), reps));
  item("bracket/12", checkMonella(chart, rng.fork("monella"), reps));
  item("bracket/13", checkDnOmegaLemma(chart, rng.fork("dn-omega"), reps));
  item("bracket/14", checkKoszulLemma(chart, rng.fork("koszul"), reps));
  item("bracket/15", checkKoszulBis(chart, rng.fork("koszul-bis"), reps));
  item("bracket/16", checkTorsionTensorial(chart, rng.fork("torsion"), reps));
  item("bracket/17", checkDnDerivationIffCompatible(chart, rng.fork("dn-deriv"), reps));
  if (chart.dim() >= 3)
    item("bracket/18", checkGradedJacobiCounterexample(chart, rng.fork("jacobi-neg"), 2));
  item("bracket/19", checkSchoutenFlipBreaksJacobi(chart, rng.fork("flip-neg"), 10));
  report.finalize();
  return report;
}

}  // namespace pqn
