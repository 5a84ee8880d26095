// Acceptance suite: exact polynomial-identity verification at desk scale.
// Prints one PASS/FAIL line per criterion and exits nonzero on any failure.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "pqn/courant.hpp"
#include "pqn/identities.hpp"
#include "pqn/poly_parser.hpp"
#include "pqn/suite.hpp"

using namespace pqn;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, bool pass, const std::string& detail = "") {
  std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion-" << number << ": " << label;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!pass) ++failures;
}

long msSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               start)
      .count();
}

std::string firstFailure(const CheckReport& report) {
  for (const auto& c : report.checks)
    if (!c.pass) return c.id + (c.witness ? ": " + c.witness->text : "");
  return "";
}

// Shared instance pool for criteria 2, 3, 4 and 5: generated structures with
// their first deformation data.
struct Instance {
  SpecFile spec;
  Form omega2;
};

std::vector<Instance> generatePool() {
  std::vector<Instance> pool;
  const int dims[3] = {2, 3, 4};
  for (std::uint64_t seed = 1; seed <= 7; ++seed) {
    for (const int dim : dims) {
      SpecFile spec = generateSpec(seed, dim, seed % 2 == 0 ? 3 : 2);
      Rng rng = Rng(seed).fork("acceptance-omega2");
      Form omega2 = rng.closedTwoForm(spec.chart, 2);
      pool.push_back(Instance{std::move(spec), std::move(omega2)});
    }
  }
  return pool;  // 21 instances over dims {2,3,4}
}

bool runCriterion1() {
  const auto start = std::chrono::steady_clock::now();
  bool pass = true;
  std::string detail;
  const int reps = 50;
  for (const int dim : {2, 3}) {
    const Chart chart = Chart::standard(dim);
    CheckReport report = bracketIdentitySuite(chart, Rng(0xACCE57ull + dim), reps);
    if (!report.allPass()) {
      pass = false;
      detail = "dim " + std::to_string(dim) + ": " + firstFailure(report);
      break;
    }
  }
  criterion(1, "bracket-calculus identities, 50 seeded inputs each on n=2,3", pass,
            detail.empty() ? std::to_string(msSince(start)) + " ms" : detail);
  return pass;
}

bool runCriterion2(const std::vector<Instance>& pool) {
  const auto start = std::chrono::steady_clock::now();
  bool pass = true;
  std::string detail;
  int deformations = 0;
  for (const auto& inst : pool) {
    const PqnStructure s = inst.spec.structure();
    if (!checkPqn(s).allPass()) {
      pass = false;
      detail = "seed structure invalid";
      break;
    }
    const Form& omega1 = *inst.spec.omega;
    const PqnStructure d1 = deform(s, omega1);
    const PqnStructure d2 = deform(s, inst.omega2);
    const PqnStructure d12 = deform(d1, inst.omega2);  // deform a non-PN structure too
    deformations += 3;
    for (const PqnStructure* d : {&d1, &d2, &d12}) {
      const CheckReport report = checkPqn(*d);
      if (!report.allPass()) {
        pass = false;
        detail = firstFailure(report);
        break;
      }
    }
    if (!pass) break;
    const CheckReport compose = actionCompose(s, omega1, inst.omega2);
    if (!compose.allPass()) {
      pass = false;
      detail = "action composition: " + firstFailure(compose);
      break;
    }
  }
  criterion(2,
            "deformation theorem end-to-end, " + std::to_string(pool.size()) + " instances / " +
                std::to_string(deformations) + " deformations",
            pass, detail.empty() ? std::to_string(msSince(start)) + " ms" : detail);
  return pass;
}

bool runCriterion3(const std::vector<Instance>& pool) {
  const auto start = std::chrono::steady_clock::now();
  bool pass = true;
  std::string detail;
  int structures = 0;
  for (const auto& inst : pool) {
    const PqnStructure s = inst.spec.structure();
    const PqnStructure d1 = deform(s, *inst.spec.omega);
    for (const PqnStructure* t : {&s, &d1}) {
      const CheckReport report = checkQuasiLieBialgebroidLaws(*t, Rng(0x91BAull + structures));
      ++structures;
      if (!report.allPass()) {
        pass = false;
        detail = firstFailure(report);
        break;
      }
    }
    if (!pass) break;
  }
  criterion(3,
            "quasi-Lie bialgebroid laws on " + std::to_string(structures) + " structures",
            pass, detail.empty() ? std::to_string(msSince(start)) + " ms" : detail);
  return pass;
}

bool runCriterion4(const std::vector<Instance>& pool) {
  const auto start = std::chrono::steady_clock::now();
  bool pass = true;
  std::string detail;
  int count = 0;

  const auto check = [&](const CourantStructure& e, const std::string& what) {
    if (!pass) return;
    const CheckReport report =
        checkCourantAxioms(e, SectionBattery::standard(e.chart(), Rng(0xC0A7ull + count)));
    ++count;
    if (!report.allPass()) {
      pass = false;
      detail = what + ": " + firstFailure(report);
    }
  };

  // (a) standard plane algebroid
  check(CourantStructure::twistedStandard(Chart(2, {"x", "y"}), Form(Chart(2, {"x", "y"}), 3)),
        "standard TR2");
  // (b) twisted three-chart algebroid, two distinct closed twists
  {
    const Chart c3(3, {"x", "y", "z"});
    Form phiA(c3, 3), phiB(c3, 3);
    phiA.accumulate({0, 1, 2}, parsePolynomial("x", c3));
    phiB.accumulate({0, 1, 2}, parsePolynomial("1", c3));
    check(CourantStructure::twistedStandard(c3, phiA), "TR3 twisted by x dx^dy^dz");
    check(CourantStructure::twistedStandard(c3, phiB), "TR3 twisted by dx^dy^dz");
  }
  // (c) assembled from generated instances
  int assembled = 0;
  for (const auto& inst : pool) {
    if (assembled >= 10 || !pass) break;
    check(CourantStructure::fromPqn(inst.spec.structure()),
          "generated instance " + std::to_string(assembled));
    ++assembled;
  }
  criterion(4, "Courant axioms (i)-(v) on " + std::to_string(count) + " algebroids", pass,
            detail.empty() ? std::to_string(msSince(start)) + " ms" : detail);
  return pass;
}

bool runCriterion5(const std::vector<Instance>& pool) {
  const auto start = std::chrono::steady_clock::now();
  bool pass = true;
  std::string detail;
  for (const auto& inst : pool) {
    const PqnStructure s = inst.spec.structure();
    const Form& omega = *inst.spec.omega;
    const CourantStructure e = CourantStructure::fromPqn(s);
    const PqnStructure expected = deform(s, omega);
    const InducedQlba induced = inducedQlba(e, graphSubbundle(omega));
    if (induced.phi != expected.phi) {
      pass = false;
      detail = "induced three-form mismatch";
      break;
    }
    bool tableOk = true;
    for (const auto& [input, dl] : induced.derivationTable)
      if (dl != dN(expected.n, input)) {
        tableOk = false;
        break;
      }
    if (!tableOk) {
      pass = false;
      detail = "induced differential mismatch";
      break;
    }
    const CheckReport graph = verifyGraphBracket(e, omega);
    if (!graph.allPass()) {
      pass = false;
      detail = "graph bracket: " + firstFailure(graph);
      break;
    }
  }
  // Fixed point: trivial pi, N = Id reproduces (d, phi) unchanged.
  if (pass) {
    const Chart c3(3, {"x", "y", "z"});
    Form phi(c3, 3);
    phi.accumulate({0, 1, 2}, parsePolynomial("x", c3));
    const CourantStructure tw = CourantStructure::twistedStandard(c3, phi);
    const Form omega = Rng(0xF1EDull).closedTwoForm(c3, 2);
    const InducedQlba induced = inducedQlba(tw, graphSubbundle(omega));
    if (induced.phi != phi) {
      pass = false;
      detail = "fixed point: three-form moved";
    } else {
      for (const auto& [input, dl] : induced.derivationTable)
        if (dl != exteriorD(input)) {
          pass = false;
          detail = "fixed point: differential moved";
          break;
        }
    }
  }
  criterion(5, "induced structure of graphs matches the deformation, all instances", pass,
            detail.empty() ? std::to_string(msSince(start)) + " ms" : detail);
  return pass;
}

bool runCriterion6() {
  bool pass = true;
  std::string detail;

  // (a) torsion fixture fails with witness -d/dx2
  {
    const Chart c2(2, {"x", "y"});
    MultiVector pi(c2, 2);
    pi.accumulate({0, 1}, Polynomial::constant(2, Rational(1)));
    EndoField n(c2);
    n.setEntry(1, 0, parsePolynomial("1", c2));
    n.setEntry(0, 1, parsePolynomial("x", c2));
    const CheckReport report = checkPqn(PqnStructure(c2, pi, n, Form(c2, 3)));
    const CheckResult* torsion = report.find("pqn/5-torsion");
    if (report.allPass() || torsion == nullptr || torsion->pass || !torsion->witness ||
        torsion->witness->payload["components"]["e2"] != "-1") {
      pass = false;
      detail = "torsion fixture did not fail with the -d/dx2 witness";
    }
  }

  // (b) non-closed graph fails Dirac closure in the untwisted standard
  if (pass) {
    const Chart c3(3, {"x", "y", "z"});
    const CourantStructure std3 = CourantStructure::twistedStandard(c3, Form(c3, 3));
    Form omega(c3, 2);
    omega.accumulate({0, 1}, parsePolynomial("z", c3));
    const CheckReport report = isDirac(std3, graphSubbundle(omega));
    const CheckResult* closure = report.find("dirac/1-closure");
    if (report.allPass() || closure == nullptr || closure->pass || !closure->witness ||
        closure->witness->payload["components"].empty()) {
      pass = false;
      detail = "non-closed graph did not fail Dirac closure with a witness";
    }
  }

  // (c) sign-flipped Schouten convention breaks graded Jacobi
  if (pass) {
    const CheckResult control =
        checkSchoutenFlipBreaksJacobi(Chart(2, {"x", "y"}), Rng(0xF11Full), 10);
    if (!control.pass || !control.witness || control.witness->payload["components"].empty()) {
      pass = false;
      detail = "flipped convention did not produce a nonzero Jacobi defect";
    }
  }

  criterion(6, "negative controls fail with nonzero printed witnesses", pass, detail);
  return pass;
}

bool runCriterion7() {
  bool pass = true;
  std::string detail;
  const SpecFile a = generateSpec(5, 3, 3);
  const SpecFile b = generateSpec(5, 3, 3);
  if (printSpec(a) != printSpec(b)) {
    pass = false;
    detail = "generate not byte-identical";
  }
  if (pass) {
    const std::string r1 = runSuite(a).toJson().dump(2);
    const std::string r2 = runSuite(b).toJson().dump(2);
    if (r1 != r2) {
      pass = false;
      detail = "runSuite not byte-identical";
    }
  }
  criterion(7, "generate and runSuite outputs are byte-identical for a fixed seed", pass, detail);
  return pass;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  std::cout << "acceptance suite: exact identities, zero tolerance" << std::endl;

  const std::vector<Instance> pool = generatePool();

  runCriterion1();
  runCriterion2(pool);
  runCriterion3(pool);
  runCriterion4(pool);
  runCriterion5(pool);
  runCriterion6();
  runCriterion7();

  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << " ("
            << msSince(start) << " ms total)" << std::endl;
  return failures == 0 ? 0 : 1;
}
