#include "pqn/suite.hpp"

#include <chrono>
#include <cstdlib>
#include <future>

#include "pqn/courant.hpp"
#include "pqn/error.hpp"
#include "pqn/identities.hpp"

namespace pqn {

Json RunReport::toJson() const {
  Json doc;
  doc["tool"] = kToolName;
  doc["tool_version"] = toolVersion;
  doc["input_digest"] = digest;
  doc["seed"] = seed;
  doc["degree_cap"] = degreeCap;
  Json suites = Json::array();
  for (const auto id : suitesRun) suites.push_back(suiteName(id));
  doc["suites"] = std::move(suites);
  doc["pass"] = allPass();
  doc["checks"] = checks.toJson();
  doc["timing_ms"] = timingMs;
  return doc;
}

std::string RunReport::toText() const {
  std::string out;
  for (const auto& c : checks.checks) {
    out += c.pass ? "[PASS] " : "[FAIL] ";
    out += c.id;
    out += "\n";
    // Witnesses attach to failures and to informational/exhibit entries.
    if (c.witness) out += "       " + std::string(c.pass ? "" : "witness ") + c.witness->text + "\n";
  }
  out += allPass() ? "all checks passed\n" : "CHECKS FAILED\n";
  return out;
}

std::vector<SuiteId> applicableSuites(const SpecFile& spec) {
  std::vector<SuiteId> suites = {SuiteId::PqnAxioms, SuiteId::BracketIdentities,
                                 SuiteId::LemmaIdentities, SuiteId::CourantAxioms};
  if (spec.omega) {
    suites.push_back(SuiteId::DeformTheorem);
    suites.push_back(SuiteId::ThmCourant);
  }
  return suites;
}

namespace {

void addPrefixed(CheckReport& into, const std::string& prefix, const CheckReport& from) {
  for (const auto& c : from.checks) into.add({prefix + "/" + c.id, c.pass, c.witness});
}

void addBool(CheckReport& report, const std::string& id, bool pass, Witness witnessOnFail) {
  if (pass)
    report.add(CheckResult::ok(id));
  else
    report.add(CheckResult::fail(id, std::move(witnessOnFail)));
}

CheckReport runPqnAxioms(const SpecFile& spec, Rng rng) {
  CheckReport report;
  const PqnStructure s = spec.structure();
  const CheckReport base = checkPqn(s);
  addPrefixed(report, "pqn-axioms", base);
  if (base.allPass())
    addPrefixed(report, "pqn-axioms", checkQuasiLieBialgebroidLaws(s, rng.fork("qlba")));
  return report;
}

CheckReport runDeformTheorem(const SpecFile& spec, Rng rng) {
  CheckReport report;
  const std::string p = "deform-theorem";
  if (!spec.omega) {
    report.add(CheckResult::fail(p + "/0-input",
                                 witnessText("missing omega", "suite needs an \"omega\" entry")));
    return report;
  }
  const Form& omega = *spec.omega;
  const Form dOmega = exteriorD(omega);
  if (!dOmega.isZero()) {
    report.add(CheckResult::fail(p + "/1-omega-closed", witnessOf("d omega", dOmega)));
    return report;
  }
  report.add(CheckResult::ok(p + "/1-omega-closed"));

  const PqnStructure s = spec.structure();
  const CheckReport base = checkPqn(s);
  if (!base.allPass()) {
    addPrefixed(report, p + "/2-base", base);
    return report;
  }
  report.add(CheckResult::ok(p + "/2-base"));

  const PqnStructure deformed = deform(s, omega);
  addPrefixed(report, p + "/3-deformed", checkPqn(deformed));
  addPrefixed(report, p + "/4-deformed",
              checkQuasiLieBialgebroidLaws(deformed, rng.fork("deformed-qlba")));

  addBool(report, p + "/5-action-identity", deform(s, Form(spec.chart, 2)) == s,
          witnessText("deform(S, 0) != S", "zero deformation must be the identity"));

  const Form omega2 = rng.fork("action-omega").closedTwoForm(spec.chart, 2);
  addPrefixed(report, p + "/6-action-compose", actionCompose(s, omega, omega2));
  addPrefixed(report, p + "/7-action-compose-self", actionCompose(s, omega, omega));

  addBool(report, p + "/8-mc-residual", mcResidual(s, omega) == deformed.phi,
          witnessOf("residual - deformed phi", mcResidual(s, omega) - deformed.phi));

  // Informational: the deformed structure itself, so reports show N-hat and
  // phi-hat explicitly.
  {
    Witness w = witnessOf("deformed structure N-hat", deformed.n);
    w.payload["phi_hat"] = componentsJson(deformed.phi);
    w.text += "; phi-hat: " + deformed.phi.str();
    report.add(CheckResult{p + "/9-deformed-structure", true, std::move(w)});
  }
  return report;
}

CheckReport runBracketIdentities(const SpecFile& spec, Rng rng, int reps) {
  CheckReport report;
  addPrefixed(report, "bracket-identities", bracketIdentitySuite(spec.chart, rng, reps));
  return report;
}

CheckReport runCourantAxioms(const SpecFile& spec, Rng rng) {
  CheckReport report;
  const std::string p = "courant-axioms";
  try {
    const CourantStructure e = CourantStructure::fromPqn(spec.structure());
    report.add(CheckResult::ok(p + "/0-assembly"));
    const SectionBattery battery = SectionBattery::standard(spec.chart, rng.fork("battery"));
    addPrefixed(report, p, checkCourantAxioms(e, battery));
    addPrefixed(report, p + "/cotangent", isDirac(e, cotangentFiber(spec.chart)));
  } catch (const PreconditionError& err) {
    report.add(CheckResult::fail(p + "/0-assembly", witnessText("assembly", err.what())));
  }
  return report;
}

CheckReport runThmCourant(const SpecFile& spec, Rng rng) {
  (void)rng;
  CheckReport report;
  const std::string p = "thm-courant";
  if (!spec.omega) {
    report.add(CheckResult::fail(p + "/0-input",
                                 witnessText("missing omega", "suite needs an \"omega\" entry")));
    return report;
  }
  const Form& omega = *spec.omega;
  if (!exteriorD(omega).isZero()) {
    report.add(
        CheckResult::fail(p + "/1-omega-closed", witnessOf("d omega", exteriorD(omega))));
    return report;
  }
  report.add(CheckResult::ok(p + "/1-omega-closed"));

  const PqnStructure s = spec.structure();
  if (!checkPqn(s).allPass()) {
    report.add(CheckResult::fail(
        p + "/2-assembly", witnessText("assembly", "structure fails its axiom checks")));
    return report;
  }
  report.add(CheckResult::ok(p + "/2-assembly"));

  const CourantStructure e = CourantStructure::fromPqn(s);
  const PqnStructure deformed = deform(s, omega);
  const InducedQlba induced = inducedQlba(e, graphSubbundle(omega));

  bool tableOk = true;
  for (const auto& [input, dl] : induced.derivationTable) {
    const Form expected = dN(deformed.n, input);
    if (dl != expected) {
      tableOk = false;
      report.add(CheckResult::fail(
          p + "/3-induced-differential",
          witnessOf("(d_L - d_Nhat)(" + input.str() + ")", dl - expected)));
      break;
    }
  }
  if (tableOk) report.add(CheckResult::ok(p + "/3-induced-differential"));

  addBool(report, p + "/4-induced-three-form", induced.phi == deformed.phi,
          witnessOf("phi_L - phi-hat", induced.phi - deformed.phi));

  addPrefixed(report, p + "/5", verifyGraphBracket(e, omega));

  // Fixed point: with trivial pi and N = Id the induced pair reproduces the
  // original (d, phi) unchanged.
  if (spec.pi.isZero() && spec.n == EndoField::identity(spec.chart)) {
    bool fixedOk = true;
    for (const auto& [input, dl] : induced.derivationTable) {
      if (dl != exteriorD(input)) {
        fixedOk = false;
        report.add(CheckResult::fail(p + "/6-fixed-point-differential",
                                     witnessOf("(d_L - d)(" + input.str() + ")",
                                               dl - exteriorD(input))));
        break;
      }
    }
    if (fixedOk) report.add(CheckResult::ok(p + "/6-fixed-point-differential"));
    addBool(report, p + "/7-fixed-point-three-form", induced.phi == spec.phi,
            witnessOf("phi_L - phi", induced.phi - spec.phi));
  }
  return report;
}

CheckReport runLemmaIdentities(const SpecFile& spec, Rng rng, int reps) {
  CheckReport report;
  const std::string p = "lemma-identities";
  report.add([&] {
    auto r = checkDnOmegaLemma(spec.chart, rng.fork("dn-omega"), reps);
    r.id = p + "/1-" + r.id;
    return r;
  }());
  report.add([&] {
    auto r = checkKoszulLemma(spec.chart, rng.fork("koszul"), reps);
    r.id = p + "/2-" + r.id;
    return r;
  }());
  report.add([&] {
    auto r = checkKoszulBis(spec.chart, rng.fork("koszul-bis"), reps);
    r.id = p + "/3-" + r.id;
    return r;
  }());
  // Graph-bracket lemma on the assembled algebroid with a seeded exact form.
  try {
    const CourantStructure e = CourantStructure::fromPqn(spec.structure());
    const Form omega = rng.fork("graph-omega").closedTwoForm(spec.chart, 2);
    addPrefixed(report, p + "/4", verifyGraphBracket(e, omega));
  } catch (const PreconditionError& err) {
    report.add(CheckResult::fail(p + "/4-assembly", witnessText("assembly", err.what())));
  }
  return report;
}

}  // namespace

RunReport runSuite(const SpecFile& spec, const RunOptions& options) {
  const auto started = std::chrono::steady_clock::now();

  RunReport report;
  report.toolVersion = kToolVersion;
  report.digest = inputDigest(printSpec(spec));
  report.seed = options.seed.value_or(spec.seed);
  report.degreeCap = options.degreeCap.value_or(spec.degreeCap);

  std::vector<SuiteId> suites = options.suites;
  if (suites.empty()) suites = spec.suites;
  if (suites.empty()) suites = applicableSuites(spec);
  report.suitesRun = suites;

  setPolynomialDegreeCap(report.degreeCap);

  // Suite items are pure; fan out and join in input order so the report is a
  // deterministic ordered reduction.
  std::vector<std::future<CheckReport>> futures;
  for (const auto id : suites) {
    futures.push_back(std::async(std::launch::async, [&, id]() -> CheckReport {
      Rng rng = Rng(report.seed).fork(suiteName(id));
      try {
        switch (id) {
          case SuiteId::PqnAxioms: return runPqnAxioms(spec, rng);
          case SuiteId::DeformTheorem: return runDeformTheorem(spec, rng);
          case SuiteId::BracketIdentities:
            return runBracketIdentities(spec, rng, options.identityReps);
          case SuiteId::CourantAxioms: return runCourantAxioms(spec, rng);
          case SuiteId::ThmCourant: return runThmCourant(spec, rng);
          case SuiteId::LemmaIdentities:
            return runLemmaIdentities(spec, rng, options.identityReps);
        }
        throw Error("unknown suite");
      } catch (const std::exception& e) {
        CheckReport failed;
        failed.add(CheckResult::fail(suiteName(id) + "/error",
                                     witnessText("unexpected error", e.what())));
        return failed;
      }
    }));
  }
  for (auto& f : futures) report.checks.merge(f.get());
  report.checks.finalize();

  const auto elapsed = std::chrono::steady_clock::now() - started;
  const char* timing = std::getenv("PQN_TIMING");
  if (timing && std::string(timing) == "1")
    report.timingMs =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  return report;
}

SpecFile generateSpec(std::uint64_t seed, int dim, int thetaDegree) {
  if (dim < 2 || dim > 6)
    throw PreconditionError("generate supports dim in 2..6, got " + std::to_string(dim));
  if (thetaDegree < 1) throw PreconditionError("theta degree must be >= 1");
  const Chart chart = Chart::standard(dim);
  Rng rng = Rng(seed).fork("generate-" + std::to_string(dim));

  // Constant canonical pi of rank 2k, possibly degenerate.
  const int k = rng.range(1, dim / 2);
  MultiVector pi(chart, 2);
  for (int a = 0; a < k; ++a)
    pi.accumulate({2 * a, 2 * a + 1}, Polynomial::constant(dim, Rational(1)));

  // Constant N with N pi# = pi# N*: the first 2k columns come from a random
  // antisymmetric matrix A via N pi# = A; columns beyond the rank are free.
  std::vector<std::vector<long>> a(dim, std::vector<long>(dim, 0));
  for (int i = 0; i < 2 * k; ++i)
    for (int j = i + 1; j < 2 * k; ++j) {
      a[i][j] = rng.range(-2, 2);
      a[j][i] = -a[i][j];
    }
  EndoField n(chart);
  for (int i = 0; i < dim; ++i) {
    for (int pair = 0; pair < k; ++pair) {
      n.setEntry(i, 2 * pair, Polynomial::constant(dim, Rational(-a[i][2 * pair + 1])));
      n.setEntry(i, 2 * pair + 1, Polynomial::constant(dim, Rational(a[i][2 * pair])));
    }
    for (int j = 2 * k; j < dim; ++j)
      n.setEntry(i, j, Polynomial::constant(dim, Rational(rng.range(-2, 2))));
  }

  SpecFile spec(chart, std::move(pi), std::move(n), Form(chart, 3));
  spec.seed = seed;

  Form theta(chart, 1);
  Form omega(chart, 2);
  do {
    theta = Form(chart, 1);
    for (int i = 0; i < dim; ++i)
      theta.accumulate({i}, rng.polynomial(chart, thetaDegree, 2));
    omega = exteriorD(theta);
  } while (omega.isZero());
  spec.omega = omega;

  Json provenance;
  provenance["construction"] = "constant-pn-plus-exact-two-form";
  provenance["rank"] = 2 * k;
  provenance["theta_degree"] = thetaDegree;
  Json thetaJson = Json::object();
  for (const auto& [idx, c] : theta.components())
    thetaJson["(" + std::to_string(idx[0] + 1) + ")"] = c.str(chart.varNames());
  provenance["theta"] = std::move(thetaJson);
  spec.provenance = std::move(provenance);
  return spec;
}

}  // namespace pqn
