#include "pqn/pqn_structure.hpp"

#include "pqn/error.hpp"

namespace pqn {

PqnStructure::PqnStructure(Chart chart_, MultiVector pi_, EndoField n_, Form phi_)
    : chart(std::move(chart_)), pi(std::move(pi_)), n(std::move(n_)), phi(std::move(phi_)) {
  requireSameChart(chart, pi.chart(), "PqnStructure");
  requireSameChart(chart, n.chart(), "PqnStructure");
  requireSameChart(chart, phi.chart(), "PqnStructure");
  if (pi.degree() != 2) throw Error("pi must be a bivector");
  if (phi.degree() != 3) throw Error("phi must be a 3-form");
}

CheckReport checkPoisson(const MultiVector& pi) {
  CheckReport report;
  const MultiVector selfBracket = schouten(pi, pi);
  if (selfBracket.isZero()) {
    report.add(CheckResult::ok("poisson/self-bracket"));
  } else {
    report.add(CheckResult::fail("poisson/self-bracket", witnessOf("[pi,pi]", selfBracket)));
  }
  return report;
}

namespace {

// N pi# and pi# N* as matrices acting on coordinate 1-forms.
EndoField sharpComposedMatrix(const MultiVector& pi, const EndoField& n, bool transposeFirst) {
  const Chart& chart = pi.chart();
  EndoField m(chart);
  for (int j = 0; j < chart.dim(); ++j) {
    const Form dxj = coordinateForm(chart, j);
    const VectorField col = transposeFirst ? sharp(pi, n.applyTranspose(dxj))
                                           : n.apply(sharp(pi, dxj));
    for (int i = 0; i < chart.dim(); ++i) m.setEntry(i, j, col.component({i}));
  }
  return m;
}

}  // namespace

CheckReport checkCompatibility(const MultiVector& pi, const EndoField& n) {
  requireSameChart(pi.chart(), n.chart(), "checkCompatibility");
  const Chart& chart = pi.chart();
  CheckReport report;

  const EndoField lhs = sharpComposedMatrix(pi, n, false);
  const EndoField rhs = sharpComposedMatrix(pi, n, true);
  const EndoField sharpDefect = lhs - rhs;
  const bool sharpOk = sharpDefect.isZero();
  if (sharpOk) {
    report.add(CheckResult::ok("compat/1-sharp-intertwine"));
  } else {
    report.add(CheckResult::fail("compat/1-sharp-intertwine",
                                 witnessOf("N pi# - pi# N*", sharpDefect)));
  }

  if (!sharpOk) {
    report.add(CheckResult::fail(
        "compat/2-concomitant",
        witnessText("skipped", "pi_N undefined because N pi# != pi# N*")));
    return report;
  }

  const MultiVector piN = makePiN(pi, n);
  bool pass = true;
  for (int i = 0; i < chart.dim() && pass; ++i) {
    for (int j = i + 1; j < chart.dim() && pass; ++j) {
      const Form c = compatibilityConcomitant(pi, piN, n, coordinateForm(chart, i),
                                              coordinateForm(chart, j));
      if (!c.isZero()) {
        pass = false;
        report.add(CheckResult::fail(
            "compat/2-concomitant",
            witnessOf("C(dx" + std::to_string(i + 1) + ",dx" + std::to_string(j + 1) + ")", c)));
      }
    }
  }
  if (pass) report.add(CheckResult::ok("compat/2-concomitant"));

  // Guard that the concomitant really is C^inf-bilinear, which is what makes
  // the frame check above a decision procedure.
  const Polynomial f = Polynomial::variable(chart.dim(), 0) * Polynomial::variable(chart.dim(), 0) +
                       Polynomial::variable(chart.dim(), chart.dim() - 1);
  const Form a = coordinateForm(chart, 0);
  const Form b = coordinateForm(chart, chart.dim() - 1);
  const Form guard =
      compatibilityConcomitant(pi, piN, n, f * a, b) - f * compatibilityConcomitant(pi, piN, n, a, b);
  if (guard.isZero()) {
    report.add(CheckResult::ok("compat/3-bilinearity-guard"));
  } else {
    report.add(CheckResult::fail("compat/3-bilinearity-guard",
                                 witnessOf("C(f a, b) - f C(a, b)", guard)));
  }
  return report;
}

CheckReport checkPqn(const PqnStructure& s) {
  CheckReport report;
  for (auto& c : checkPoisson(s.pi).checks) report.add({"pqn/1-" + c.id, c.pass, c.witness});
  for (auto& c : checkCompatibility(s.pi, s.n).checks)
    report.add({"pqn/2-" + c.id, c.pass, c.witness});

  const Form dphi = exteriorD(s.phi);
  if (dphi.isZero()) {
    report.add(CheckResult::ok("pqn/3-phi-closed"));
  } else {
    report.add(CheckResult::fail("pqn/3-phi-closed", witnessOf("d phi", dphi)));
  }

  const Form diNphi = exteriorD(insertN(s.n, s.phi));
  if (diNphi.isZero()) {
    report.add(CheckResult::ok("pqn/4-iN-phi-closed"));
  } else {
    report.add(CheckResult::fail("pqn/4-iN-phi-closed", witnessOf("d(i_N phi)", diNphi)));
  }

  bool torsionOk = true;
  for (const auto& [pair, torsion] : nijenhuisTorsionFrame(s.n)) {
    const VectorField ei = frameField(s.chart, pair[0]);
    const VectorField ej = frameField(s.chart, pair[1]);
    const VectorField defect = torsion - sharp(s.pi, contractPair(ei, ej, s.phi));
    if (!defect.isZero()) {
      torsionOk = false;
      const std::string name = "T_N(e" + std::to_string(pair[0] + 1) + ",e" +
                               std::to_string(pair[1] + 1) + ") - pi#(i_{e" +
                               std::to_string(pair[0] + 1) + "^e" +
                               std::to_string(pair[1] + 1) + "} phi)";
      report.add(CheckResult::fail("pqn/5-torsion", witnessOf(name, defect)));
      break;
    }
  }
  if (torsionOk) report.add(CheckResult::ok("pqn/5-torsion"));

  // Torsion is tensorial; this guard makes the frame check above sound.
  {
    const Polynomial f =
        Polynomial::variable(s.chart.dim(), 0) +
        Polynomial::variable(s.chart.dim(), s.chart.dim() - 1) * Polynomial::variable(s.chart.dim(), 0);
    const VectorField x = frameField(s.chart, 0);
    const VectorField y = frameField(s.chart, s.chart.dim() - 1);
    const VectorField guard =
        nijenhuisTorsion(s.n, f * x, y) - f * nijenhuisTorsion(s.n, x, y);
    if (guard.isZero()) {
      report.add(CheckResult::ok("pqn/6-torsion-tensorial-guard"));
    } else {
      report.add(CheckResult::fail("pqn/6-torsion-tensorial-guard",
                                   witnessOf("T_N(f X, Y) - f T_N(X, Y)", guard)));
    }
  }

  report.finalize();
  return report;
}

MultiVector makePiN(const MultiVector& pi, const EndoField& n) {
  requireSameChart(pi.chart(), n.chart(), "makePiN");
  const Chart& chart = pi.chart();
  const EndoField defect = sharpComposedMatrix(pi, n, false) - sharpComposedMatrix(pi, n, true);
  if (!defect.isZero())
    throw PreconditionError("pi_N is not a bivector: N pi# != pi# N*, defect " + defect.str());
  MultiVector piN(chart, 2);
  // (pi_N)^{ij} = <dx_j, N pi# dx_i>
  for (int i = 0; i < chart.dim(); ++i) {
    const VectorField col = n.apply(sharp(pi, coordinateForm(chart, i)));
    for (int j = i + 1; j < chart.dim(); ++j) piN.accumulate({i, j}, col.component({j}));
  }
  return piN;
}

PqnStructure deform(const PqnStructure& s, const Form& omega) {
  requireSameChart(s.chart, omega.chart(), "deform");
  if (omega.degree() != 2) throw PreconditionError("deformation needs a 2-form");
  const Form dOmega = exteriorD(omega);
  if (!dOmega.isZero())
    throw PreconditionError("deformation form is not closed: d Omega = " + dOmega.str());
  if (!checkPqn(s).allPass()) throw PreconditionError("structure fails its axiom checks");
  EndoField nHat = s.n;
  nHat += composeSharpFlat(s.pi, omega);
  Form phiHat = s.phi + dN(s.n, omega) + Rational(1, 2) * koszulBracket(omega, omega, s.pi);
  return PqnStructure(s.chart, s.pi, std::move(nHat), std::move(phiHat));
}

Form mcResidual(const PqnStructure& s, const Form& omega) {
  requireSameChart(s.chart, omega.chart(), "mcResidual");
  if (omega.degree() != 2) throw PreconditionError("Maurer-Cartan residual needs a 2-form");
  if (!exteriorD(omega).isZero())
    throw PreconditionError("Maurer-Cartan residual needs a closed 2-form");
  return dN(s.n, omega) + Rational(1, 2) * koszulBracket(omega, omega, s.pi) + s.phi;
}

CheckReport actionCompose(const PqnStructure& s, const Form& omega1, const Form& omega2) {
  CheckReport report;
  const PqnStructure lhs = deform(deform(s, omega2), omega1);
  const PqnStructure rhs = deform(s, omega1 + omega2);
  if (lhs.n == rhs.n) {
    report.add(CheckResult::ok("action/1-endomorphism"));
  } else {
    report.add(CheckResult::fail("action/1-endomorphism",
                                 witnessOf("N(step) - N(sum)", lhs.n - rhs.n)));
  }
  if (lhs.phi == rhs.phi) {
    report.add(CheckResult::ok("action/2-three-form"));
  } else {
    report.add(CheckResult::fail("action/2-three-form",
                                 witnessOf("phi(step) - phi(sum)", lhs.phi - rhs.phi)));
  }
  return report;
}

namespace {

// Battery of forms spanning degrees 0..n with constant, linear and seeded
// random coefficients.
std::vector<Form> formBattery(const Chart& chart, Rng& rng) {
  std::vector<Form> battery;
  const int n = chart.dim();
  for (int k = 0; k <= n; ++k) {
    for (const auto& idx : increasingTuples(n, k)) {
      battery.push_back(Form::basis(chart, idx));
      battery.push_back(Form::monomial(chart, idx, Polynomial::variable(n, idx.empty() ? 0 : idx[0])));
    }
    battery.push_back(rng.form(chart, k, 2));
  }
  return battery;
}

CheckResult batteryCheck(const std::string& id, const std::string& defectName,
                         const std::vector<Form>& defects) {
  for (const auto& d : defects)
    if (!d.isZero()) return CheckResult::fail(id, witnessOf(defectName, d));
  return CheckResult::ok(id);
}

}  // namespace

CheckReport checkQuasiLieBialgebroidLaws(const PqnStructure& s, Rng rng) {
  CheckReport report;
  const Chart& chart = s.chart;
  const int n = chart.dim();
  const auto battery = formBattery(chart, rng);

  {
    // d_N (a ^ b) = d_N a ^ b + (-1)^|a| a ^ d_N b
    std::vector<Form> defects;
    Rng wedgeRng = rng.fork("wedge");
    for (int rep = 0; rep < 12; ++rep) {
      const int p = wedgeRng.range(0, n - 1);
      const int q = wedgeRng.range(0, n - p);
      const Form a = wedgeRng.form(chart, p, 2);
      const Form b = wedgeRng.form(chart, q, 2);
      Form rhs = wedge(dN(s.n, a), b);
      const Form mixed = wedge(a, dN(s.n, b));
      rhs += (p % 2 == 0) ? mixed : -mixed;
      defects.push_back(dN(s.n, wedge(a, b)) - rhs);
    }
    report.add(batteryCheck("qlba/1-dN-wedge-derivation", "d_N(a^b) - Leibniz", defects));
  }

  {
    // d_N [a,b]_pi = [d_N a, b]_pi + (-1)^{|a|-1} [a, d_N b]_pi. Degree-0
    // pairs matter: on two functions the defect detects N pi# = pi# N*.
    std::vector<Form> defects;
    Rng brRng = rng.fork("koszul-derivation");
    for (int rep = 0; rep < 10; ++rep) {
      const int p = brRng.range(0, 2);
      const int q = brRng.range(0, std::min(2, n));
      const Form a = brRng.form(chart, p, 2);
      const Form b = brRng.form(chart, q, 2);
      Form lhs = (p + q == 0) ? Form(chart, 0) : dN(s.n, koszulBracket(a, b, s.pi));
      Form rhs = koszulBracket(dN(s.n, a), b, s.pi);
      const Form mixed = koszulBracket(a, dN(s.n, b), s.pi);
      rhs += (p % 2 == 1) ? mixed : -mixed;
      defects.push_back(lhs - rhs);
    }
    report.add(batteryCheck("qlba/2-dN-bracket-derivation", "d_N[a,b] - Leibniz", defects));
  }

  {
    const Form d = dN(s.n, s.phi);
    report.add(d.isZero() ? CheckResult::ok("qlba/3-dN-phi-zero")
                          : CheckResult::fail("qlba/3-dN-phi-zero", witnessOf("d_N phi", d)));
  }

  {
    // d_N^2 = [phi, .]_pi on the spanning battery
    std::vector<Form> defects;
    for (const auto& eta : battery)
      defects.push_back(dN(s.n, dN(s.n, eta)) - koszulBracket(s.phi, eta, s.pi));
    report.add(batteryCheck("qlba/4-dN-squared", "d_N^2 eta - [phi,eta]_pi", defects));
  }

  {
    // Recovered anchor: <d_N f, X> = <df, NX> on frame fields and functions.
    std::vector<Form> defects;
    Rng fnRng = rng.fork("anchor");
    for (int rep = 0; rep < 8; ++rep) {
      const Polynomial f = fnRng.polynomial(chart, 2);
      for (int i = 0; i < n; ++i) {
        const VectorField x = frameField(chart, i);
        const Polynomial lhs = pairing(dN(s.n, Form::scalar(chart, f)), x);
        const Polynomial rhs = pairing(exteriorD(f, chart), s.n.apply(x));
        defects.push_back(Form::scalar(chart, lhs - rhs));
      }
    }
    report.add(batteryCheck("qlba/5-recovered-anchor", "<d_N f, X> - <df, NX>", defects));
  }

  {
    // Recovered bracket: NX<a,Y> - NY<a,X> - (d_N a)(X,Y) = <a, [X,Y]_N>.
    std::vector<Form> defects;
    Rng brRng = rng.fork("recovered-bracket");
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const VectorField x = frameField(chart, i);
        const VectorField y = frameField(chart, j);
        const Form alpha = brRng.form(chart, 1, 2);
        const Polynomial lhs = applyVectorField(s.n.apply(x), pairing(alpha, y)) -
                               applyVectorField(s.n.apply(y), pairing(alpha, x)) -
                               evalOnVectors(dN(s.n, alpha), {x, y});
        const Polynomial rhs = pairing(alpha, bracketN(s.n, x, y));
        defects.push_back(Form::scalar(chart, lhs - rhs));
      }
    }
    report.add(batteryCheck("qlba/6-recovered-bracket", "Astar bracket - [X,Y]_N", defects));
  }

  report.finalize();
  return report;
}

}  // namespace pqn
