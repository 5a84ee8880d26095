#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pqn/error.hpp"
#include "pqn/pqn_structure.hpp"
#include "pqn/poly_parser.hpp"
#include "pqn/suite.hpp"

using namespace pqn;

namespace {

const Chart kC2(2, {"x", "y"});
const Chart kC3(3, {"x", "y", "z"});

Polynomial px(const Chart& chart, const std::string& text) {
  return parsePolynomial(text, chart);
}

MultiVector canonicalPi(const Chart& chart) {
  MultiVector pi(chart, 2);
  pi.accumulate({0, 1}, Polynomial::constant(chart.dim(), Rational(1)));
  return pi;
}

PqnStructure canonicalPn(const Chart& chart) {
  return PqnStructure(chart, canonicalPi(chart), EndoField::identity(chart), Form(chart, 3));
}

EndoField torsionFixtureN(const Chart& chart) {
  EndoField n(chart);  // e1 -> e2, e2 -> x e1
  n.setEntry(1, 0, px(chart, "1"));
  n.setEntry(0, 1, px(chart, "x"));
  return n;
}

}  // namespace

TEST_SUITE_BEGIN("poisson check");

TEST_CASE("bivectors on the plane are always Poisson") {
  CHECK(checkPoisson(canonicalPi(kC2)).allPass());
  MultiVector any(kC2, 2);
  any.accumulate({0, 1}, px(kC2, "x^2*y - 1/3"));
  CHECK(checkPoisson(any).allPass());
}

TEST_CASE("computed verdicts on the 3-chart") {
  MultiVector pi(kC3, 2);
  pi.accumulate({0, 1}, px(kC3, "z"));
  pi.accumulate({0, 2}, px(kC3, "1"));
  CHECK(checkPoisson(pi).allPass());

  MultiVector bad(kC3, 2);
  bad.accumulate({0, 1}, px(kC3, "x"));
  bad.accumulate({0, 2}, px(kC3, "z"));
  const CheckReport report = checkPoisson(bad);
  CHECK(!report.allPass());
  REQUIRE(report.checks.size() == 1);
  REQUIRE(report.checks[0].witness.has_value());
  CHECK(report.checks[0].witness->payload["components"].size() > 0);
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("compatibility check");

TEST_CASE("identity and conformal pairs on the plane pass") {
  CHECK(checkCompatibility(canonicalPi(kC2), EndoField::identity(kC2)).allPass());
  CHECK(checkCompatibility(canonicalPi(kC2), EndoField::scaled(kC2, px(kC2, "x"))).allPass());
}

TEST_CASE("projection fails the sharp intertwine") {
  EndoField proj(kC2);
  proj.setEntry(0, 0, px(kC2, "1"));
  const CheckReport report = checkCompatibility(canonicalPi(kC2), proj);
  CHECK(!report.allPass());
  const CheckResult* sharpCheck = report.find("compat/1-sharp-intertwine");
  REQUIRE(sharpCheck != nullptr);
  CHECK(!sharpCheck->pass);
  REQUIRE(sharpCheck->witness.has_value());
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("full axiom battery");

TEST_CASE("PN structures pass") {
  CHECK(checkPqn(canonicalPn(kC2)).allPass());
  CHECK(checkPqn(PqnStructure(kC2, canonicalPi(kC2), EndoField::scaled(kC2, px(kC2, "x")),
                              Form(kC2, 3)))
            .allPass());
}

TEST_CASE("torsion fixture fails with the exact defect") {
  const PqnStructure bad(kC2, canonicalPi(kC2), torsionFixtureN(kC2), Form(kC2, 3));
  const CheckReport report = checkPqn(bad);
  CHECK(!report.allPass());
  const CheckResult* torsion = report.find("pqn/5-torsion");
  REQUIRE(torsion != nullptr);
  CHECK(!torsion->pass);
  REQUIRE(torsion->witness.has_value());
  CHECK(torsion->witness->payload["components"]["e2"] == "-1");
}

TEST_CASE("ordering of report entries is deterministic by id") {
  const CheckReport report = checkPqn(canonicalPn(kC2));
  for (std::size_t i = 1; i < report.checks.size(); ++i)
    CHECK(report.checks[i - 1].id < report.checks[i].id);
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("pi_N");

TEST_CASE("examples") {
  CHECK(makePiN(canonicalPi(kC2), EndoField::identity(kC2)) == canonicalPi(kC2));
  MultiVector expected(kC2, 2);
  expected.accumulate({0, 1}, px(kC2, "x"));
  CHECK(makePiN(canonicalPi(kC2), EndoField::scaled(kC2, px(kC2, "x"))) == expected);
}

TEST_CASE("rejects a non-intertwining N with a witness") {
  EndoField proj(kC2);
  proj.setEntry(0, 0, px(kC2, "1"));
  CHECK_THROWS_AS(makePiN(canonicalPi(kC2), proj), PreconditionError);
  try {
    makePiN(canonicalPi(kC2), proj);
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("defect") != std::string::npos);
  }
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("deformation");

TEST_CASE("constant symplectic form cancels the identity") {
  const PqnStructure s = canonicalPn(kC2);
  const PqnStructure d = deform(s, Form::basis(kC2, {0, 1}));
  CHECK(d.n == EndoField(kC2));
  CHECK(d.phi.isZero());
  CHECK(d.pi == s.pi);
}

TEST_CASE("linear-coefficient form gives the conformal family") {
  const PqnStructure s = canonicalPn(kC2);
  const PqnStructure d = deform(s, Form::monomial(kC2, {0, 1}, px(kC2, "x")));
  CHECK(d.n == EndoField::scaled(kC2, px(kC2, "1 - x")));
  CHECK(d.phi.isZero());
}

TEST_CASE("zero form is the identity of the action") {
  const PqnStructure s = canonicalPn(kC2);
  CHECK(deform(s, Form(kC2, 2)) == s);
}

TEST_CASE("preconditions are enforced") {
  const PqnStructure s = canonicalPn(kC3);
  Form nonClosed(kC3, 2);
  nonClosed.accumulate({0, 1}, px(kC3, "z"));
  CHECK_THROWS_AS(deform(s, nonClosed), PreconditionError);
  const PqnStructure bad(kC2, canonicalPi(kC2), torsionFixtureN(kC2), Form(kC2, 3));
  CHECK_THROWS_AS(deform(bad, Form(kC2, 2)), PreconditionError);
}

TEST_CASE("deformed structures pass the axiom battery end to end") {
  Rng rng(20240801);
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    for (int dim = 2; dim <= 4; ++dim) {
      const SpecFile spec = generateSpec(seed, dim, 2);
      const PqnStructure s = spec.structure();
      REQUIRE(checkPqn(s).allPass());
      const PqnStructure d1 = deform(s, *spec.omega);
      CHECK(checkPqn(d1).allPass());
      // deforming an already non-PN structure keeps validity
      const Form omega2 = rng.closedTwoForm(spec.chart, 2);
      CHECK(checkPqn(deform(d1, omega2)).allPass());
    }
  }
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("Maurer-Cartan residual");

TEST_CASE("trivial and phi-only cases") {
  const PqnStructure s = canonicalPn(kC2);
  CHECK(mcResidual(s, Form(kC2, 2)).isZero());
  // pi = 0, N = Id, phi closed is a valid structure with nonzero phi
  Form phi(kC3, 3);
  phi.accumulate({0, 1, 2}, px(kC3, "x"));
  const PqnStructure twisted(kC3, MultiVector(kC3, 2), EndoField::identity(kC3), phi);
  REQUIRE(checkPqn(twisted).allPass());
  CHECK(mcResidual(twisted, Form(kC3, 2)) == phi);
}

TEST_CASE("plane case vanishes by degree") {
  const PqnStructure s = canonicalPn(kC2);
  CHECK(mcResidual(s, Form::monomial(kC2, {0, 1}, px(kC2, "x"))).isZero());
}

TEST_CASE("residual equals the deformed three-form") {
  const SpecFile spec = generateSpec(11, 3, 2);
  const PqnStructure s = spec.structure();
  CHECK(mcResidual(s, *spec.omega) == deform(s, *spec.omega).phi);
}

TEST_CASE("rejects non-closed input") {
  Form nonClosed(kC3, 2);
  nonClosed.accumulate({0, 1}, px(kC3, "z"));
  CHECK_THROWS_AS(mcResidual(canonicalPn(kC3), nonClosed), PreconditionError);
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("group action");

TEST_CASE("zero forms compose trivially") {
  const PqnStructure s = canonicalPn(kC2);
  CHECK(actionCompose(s, Form(kC2, 2), Form(kC2, 2)).allPass());
}

TEST_CASE("plane example lands on minus x identity") {
  const PqnStructure s = canonicalPn(kC2);
  const Form omega1 = Form::basis(kC2, {0, 1});
  const Form omega2 = Form::monomial(kC2, {0, 1}, px(kC2, "x"));
  CHECK(actionCompose(s, omega1, omega2).allPass());
  const PqnStructure stepped = deform(deform(s, omega2), omega1);
  CHECK(stepped.n == EndoField::scaled(kC2, px(kC2, "-x")));
  CHECK(stepped.phi.isZero());
}

TEST_CASE("exact forms on the 3-chart compose") {
  const SpecFile spec = generateSpec(5, 3, 2);
  const PqnStructure s = spec.structure();
  Rng rng(55);
  const Form omega2 = rng.closedTwoForm(spec.chart, 2);
  CHECK(actionCompose(s, *spec.omega, omega2).allPass());
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("induced algebroid laws");

TEST_CASE("canonical and twisted structures satisfy every law") {
  CHECK(checkQuasiLieBialgebroidLaws(canonicalPn(kC2), Rng(1)).allPass());
  Form phi(kC3, 3);
  phi.accumulate({0, 1, 2}, px(kC3, "x"));
  const PqnStructure twisted(kC3, MultiVector(kC3, 2), EndoField::identity(kC3), phi);
  CHECK(checkQuasiLieBialgebroidLaws(twisted, Rng(2)).allPass());
}

TEST_CASE("laws hold on deformed structures (twist closure)") {
  for (std::uint64_t seed : {3ull, 9ull}) {
    const SpecFile spec = generateSpec(seed, 3, 2);
    const PqnStructure d = deform(spec.structure(), *spec.omega);
    CHECK(checkQuasiLieBialgebroidLaws(d, Rng(seed)).allPass());
  }
}

TEST_SUITE_END();
