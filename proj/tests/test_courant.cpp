#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pqn/courant.hpp"
#include "pqn/error.hpp"
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

CourantStructure canonicalE(const Chart& chart) {
  return CourantStructure::fromPqn(
      PqnStructure(chart, canonicalPi(chart), EndoField::identity(chart), Form(chart, 3)));
}

CourantSection vec(const Chart& chart, int axis) {
  return CourantSection::ofVector(frameField(chart, axis));
}

CourantSection form(const Chart& chart, int axis) {
  return CourantSection::ofForm(coordinateForm(chart, axis));
}

CourantSection randomSection(Rng& rng, const Chart& chart) {
  return CourantSection(rng.vectorField(chart, 2), rng.form(chart, 1, 2));
}

}  // namespace

TEST_SUITE_BEGIN("assembly");

TEST_CASE("only verified structures assemble") {
  CHECK_NOTHROW(canonicalE(kC2));
  EndoField bad(kC2);  // torsion fixture
  bad.setEntry(1, 0, px(kC2, "1"));
  bad.setEntry(0, 1, px(kC2, "x"));
  CHECK_THROWS_AS(
      CourantStructure::fromPqn(PqnStructure(kC2, canonicalPi(kC2), bad, Form(kC2, 3))),
      PreconditionError);
  Form nonClosed(kC3, 3);
  nonClosed.accumulate({0, 1, 2}, px(kC3, "x"));
  CHECK_NOTHROW(CourantStructure::twistedStandard(kC3, nonClosed));  // d of a top form is 0
  // a genuinely non-closed 3-form needs dim 4
  const Chart c4 = Chart::standard(4);
  Form reallyNonClosed(c4, 3);
  reallyNonClosed.accumulate({0, 1, 2}, parsePolynomial("x4", c4));
  CHECK_THROWS_AS(CourantStructure::twistedStandard(c4, reallyNonClosed), PreconditionError);
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("pairing and anchor");

TEST_CASE("pairing examples") {
  const CourantSection s1(frameField(kC2, 0), coordinateForm(kC2, 1));
  const CourantSection s2(frameField(kC2, 1), coordinateForm(kC2, 0));
  CHECK(pairingE(s1, s2) == px(kC2, "1"));
  CHECK(pairingE(vec(kC2, 0), vec(kC2, 1)).isZero());
  CHECK(pairingE(form(kC2, 0), form(kC2, 1)).isZero());
  Rng rng(7);
  const CourantSection a = randomSection(rng, kC3);
  const CourantSection b = randomSection(rng, kC3);
  CHECK(pairingE(a, b) == pairingE(b, a));
}

TEST_CASE("anchor examples") {
  const CourantStructure std2 = CourantStructure::twistedStandard(kC2, Form(kC2, 3));
  Rng rng(9);
  const CourantSection s = randomSection(rng, kC2);
  CHECK(anchorE(std2, s) == s.vec);  // projection for the standard algebroid
  const CourantStructure ex = CourantStructure::fromPqn(
      PqnStructure(kC2, canonicalPi(kC2), EndoField::scaled(kC2, px(kC2, "x")), Form(kC2, 3)));
  CHECK(anchorE(ex, CourantSection(frameField(kC2, 0), coordinateForm(kC2, 1))) ==
        VectorField::monomial(kC2, {0}, px(kC2, "x - 1")));
  CHECK(anchorE(ex, CourantSection::zero(kC2)).isZero());
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("bracket");

TEST_CASE("standard untwisted examples") {
  const CourantStructure std2 = CourantStructure::twistedStandard(kC2, Form(kC2, 3));
  const CourantSection br = bracketE(std2, vec(kC2, 0),
                                     CourantSection::ofForm(Form::monomial(kC2, {0}, px(kC2, "y"))));
  CHECK(br.vec.isZero());
  CHECK(br.form == Form::monomial(kC2, {1}, px(kC2, "-1/2")));
}

TEST_CASE("twisted bracket picks up the three-form") {
  Form phi(kC3, 3);
  phi.accumulate({0, 1, 2}, px(kC3, "x"));
  const CourantStructure tw = CourantStructure::twistedStandard(kC3, phi);
  const CourantSection br = bracketE(tw, vec(kC3, 0), vec(kC3, 1));
  CHECK(br.vec.isZero());
  CHECK(br.form == Form::monomial(kC3, {2}, px(kC3, "x")));
}

TEST_CASE("two forms bracket through the Koszul bracket") {
  const CourantStructure e = canonicalE(kC2);
  const CourantSection br = bracketE(e, form(kC2, 0), form(kC2, 1));
  CHECK(br.vec.isZero());
  CHECK(br.form.isZero());
}

TEST_CASE("antisymmetry on random sections") {
  const CourantStructure e = canonicalE(kC3);
  Rng rng(21);
  for (int rep = 0; rep < 15; ++rep) {
    const CourantSection a = randomSection(rng, kC3);
    const CourantSection b = randomSection(rng, kC3);
    const CourantSection sum = bracketE(e, a, b) + bracketE(e, b, a);
    CHECK(sum.isZero());
  }
}

TEST_CASE("standard bracket formula on random sections") {
  const CourantStructure std3 = CourantStructure::twistedStandard(kC3, Form(kC3, 3));
  Rng rng(23);
  for (int rep = 0; rep < 15; ++rep) {
    const CourantSection a = randomSection(rng, kC3);
    const CourantSection b = randomSection(rng, kC3);
    const CourantSection lhs = bracketE(std3, a, b);
    // [X,Y] + L_X beta - L_Y alpha + (1/2) d(<alpha,Y> - <beta,X>)
    const VectorField v = lieBracket(a.vec, b.vec);
    const Form f = lieDerivativeForm(a.vec, b.form) - lieDerivativeForm(b.vec, a.form) +
                   Rational(1, 2) * exteriorD(pairing(a.form, b.vec) - pairing(b.form, a.vec),
                                              kC3);
    CHECK(lhs.vec == v);
    CHECK(lhs.form == f);
  }
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("D operator");

TEST_CASE("standard case is the differential") {
  const CourantStructure std2 = CourantStructure::twistedStandard(kC2, Form(kC2, 3));
  const CourantSection d = dOperator(std2, px(kC2, "x*y"));
  CHECK(d.vec.isZero());
  CHECK(d.form == exteriorD(px(kC2, "x*y"), kC2));
}

TEST_CASE("assembled case splits into both factors") {
  const CourantStructure e = canonicalE(kC2);
  const CourantSection d = dOperator(e, px(kC2, "x"));
  CHECK(d.vec == -frameField(kC2, 1));
  CHECK(d.form == coordinateForm(kC2, 0));
  CHECK(dOperator(e, px(kC2, "1")).isZero());
}

TEST_CASE("defining relation on a battery of sections") {
  const CourantStructure e = canonicalE(kC3);
  Rng rng(31);
  for (int rep = 0; rep < 15; ++rep) {
    const Polynomial f = rng.polynomial(kC3, 3);
    const CourantSection df = dOperator(e, f);
    const CourantSection a = randomSection(rng, kC3);
    CHECK(pairingE(df, a) == Rational(1, 2) * applyVectorField(anchorE(e, a), f));
  }
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("axioms");

TEST_CASE("standard plane algebroid") {
  const CourantStructure std2 = CourantStructure::twistedStandard(kC2, Form(kC2, 3));
  CHECK(checkCourantAxioms(std2).allPass());
}

TEST_CASE("twisted three-chart algebroid") {
  Form phi(kC3, 3);
  phi.accumulate({0, 1, 2}, px(kC3, "x"));
  const CourantStructure tw = CourantStructure::twistedStandard(kC3, phi);
  CHECK(checkCourantAxioms(tw, SectionBattery::standard(kC3, Rng(77))).allPass());
}

TEST_CASE("assembled from a generated structure") {
  const SpecFile spec = generateSpec(13, 3, 2);
  const CourantStructure e = CourantStructure::fromPqn(spec.structure());
  CHECK(checkCourantAxioms(e, SectionBattery::standard(spec.chart, Rng(78))).allPass());
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("gauge and graphs");

TEST_CASE("gauge examples") {
  const Form omega = Form::basis(kC2, {0, 1});
  CHECK(gauge(omega, vec(kC2, 0)) ==
        CourantSection(frameField(kC2, 0), coordinateForm(kC2, 1)));
  CHECK(gauge(omega, form(kC2, 0)) == form(kC2, 0));
  const CourantSection mixed(frameField(kC2, 1), coordinateForm(kC2, 0));
  CHECK(gauge(omega, mixed) == vec(kC2, 1));
}

TEST_CASE("gauge preserves the pairing") {
  Rng rng(41);
  for (int rep = 0; rep < 15; ++rep) {
    const Form omega = rng.form(kC3, 2, 2);
    const CourantSection a = randomSection(rng, kC3);
    const CourantSection b = randomSection(rng, kC3);
    CHECK(pairingE(gauge(omega, a), gauge(omega, b)) == pairingE(a, b));
  }
}

TEST_CASE("graph frames") {
  const LagrangianGraph tm = graphSubbundle(Form(kC2, 2));
  const auto tmFrame = tm.frameSections();
  REQUIRE(tmFrame.size() == 2);
  CHECK(tmFrame[0] == vec(kC2, 0));
  CHECK(tmFrame[1] == vec(kC2, 1));
  const LagrangianGraph gr = graphSubbundle(Form::basis(kC2, {0, 1}));
  const auto grFrame = gr.frameSections();
  CHECK(grFrame[0] == CourantSection(frameField(kC2, 0), coordinateForm(kC2, 1)));
  CHECK(grFrame[1] == CourantSection(frameField(kC2, 1), -coordinateForm(kC2, 0)));
}

TEST_CASE("graphs are isotropic for every two-form") {
  Rng rng(43);
  for (int rep = 0; rep < 10; ++rep) {
    const Form b = rng.form(kC3, 2, 2);
    const auto frame = graphSubbundle(b).frameSections();
    for (const auto& s1 : frame)
      for (const auto& s2 : frame) CHECK(pairingE(s1, s2).isZero());
  }
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("Dirac closure");

TEST_CASE("cotangent fiber is always Dirac") {
  CHECK(isDirac(canonicalE(kC3), cotangentFiber(kC3)).allPass());
  Form phi(kC3, 3);
  phi.accumulate({0, 1, 2}, px(kC3, "x"));
  CHECK(isDirac(CourantStructure::twistedStandard(kC3, phi), cotangentFiber(kC3)).allPass());
}

TEST_CASE("graphs of closed forms are Dirac in the untwisted standard") {
  const CourantStructure std3 = CourantStructure::twistedStandard(kC3, Form(kC3, 3));
  Rng rng(47);
  for (int rep = 0; rep < 5; ++rep)
    CHECK(isDirac(std3, graphSubbundle(rng.closedTwoForm(kC3, 2))).allPass());
}

TEST_CASE("non-closed graph fails with the contraction defect") {
  const CourantStructure std3 = CourantStructure::twistedStandard(kC3, Form(kC3, 3));
  Form omega(kC3, 2);
  omega.accumulate({0, 1}, px(kC3, "z"));
  const CheckReport report = isDirac(std3, graphSubbundle(omega));
  CHECK(!report.allPass());
  const CheckResult* closure = report.find("dirac/1-closure");
  REQUIRE(closure != nullptr);
  REQUIRE(closure->witness.has_value());
  // defect for the (e1, e2) pair is i_{e1^e2} d omega = dx3
  CHECK(closure->witness->payload["components"]["dx3"] == "1");
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("induced structure");

TEST_CASE("plane deformation matches the conformal family") {
  const CourantStructure e = canonicalE(kC2);
  const InducedQlba induced = inducedQlba(e, graphSubbundle(Form::monomial(kC2, {0, 1}, px(kC2, "x"))));
  CHECK(induced.phi.isZero());
  const EndoField nHat = EndoField::scaled(kC2, px(kC2, "1 - x"));
  for (const auto& [input, dl] : induced.derivationTable) CHECK(dl == dN(nHat, input));
}

TEST_CASE("zero graph reproduces the original differential") {
  const CourantStructure e = canonicalE(kC2);
  const InducedQlba induced = inducedQlba(e, graphSubbundle(Form(kC2, 2)));
  CHECK(induced.phi.isZero());
  for (const auto& [input, dl] : induced.derivationTable)
    CHECK(dl == dN(EndoField::identity(kC2), input));
}

TEST_CASE("fixed point of the twisted standard algebroid") {
  Form phi(kC3, 3);
  phi.accumulate({0, 1, 2}, px(kC3, "x"));
  const CourantStructure tw = CourantStructure::twistedStandard(kC3, phi);
  Rng rng(53);
  const Form omega = rng.closedTwoForm(kC3, 2);
  const InducedQlba induced = inducedQlba(tw, graphSubbundle(omega));
  CHECK(induced.phi == phi);
  for (const auto& [input, dl] : induced.derivationTable) CHECK(dl == exteriorD(input));
}

TEST_CASE("cotangent fiber is rejected as non-transversal input") {
  CHECK_THROWS_AS(inducedQlba(canonicalE(kC2), cotangentFiber(kC2)), PreconditionError);
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("graph bracket lemma");

TEST_CASE("zero form reduces to the deformed bracket plus twist") {
  const CourantStructure e = canonicalE(kC3);
  CHECK(verifyGraphBracket(e, Form(kC3, 2)).allPass());
}

TEST_CASE("plane fixture and generated instance") {
  CHECK(verifyGraphBracket(canonicalE(kC2), Form::basis(kC2, {0, 1})).allPass());
  const SpecFile spec = generateSpec(17, 3, 2);
  const CourantStructure e = CourantStructure::fromPqn(spec.structure());
  CHECK(verifyGraphBracket(e, *spec.omega).allPass());
}

TEST_CASE("non-closed input is rejected") {
  Form omega(kC3, 2);
  omega.accumulate({0, 1}, px(kC3, "z"));
  CHECK_THROWS_AS(verifyGraphBracket(canonicalE(kC3), omega), PreconditionError);
}

TEST_CASE("pure-form bracket realizes the closed-graph Koszul identity") {
  // The 1-form part of [[Om.flat X, Om.flat Y]] is the Koszul bracket, so on
  // frames it must equal Om.flat [X,Y]_{pi# Om.flat} + (1/2) i_{X^Y}[Om,Om]_pi.
  const CourantStructure e = canonicalE(kC3);
  Rng rng(59);
  for (int rep = 0; rep < 5; ++rep) {
    const Form omega = rng.closedTwoForm(kC3, 2);
    const EndoField n = composeSharpFlat(e.pi(), omega);
    const Form selfBracket = koszulBracket(omega, omega, e.pi());
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const VectorField x = frameField(kC3, i);
        const VectorField y = frameField(kC3, j);
        const CourantSection br =
            bracketE(e, CourantSection::ofForm(flat(omega, x)), CourantSection::ofForm(flat(omega, y)));
        CHECK(br.vec.isZero());
        CHECK(br.form == flat(omega, bracketN(n, x, y)) +
                             Rational(1, 2) * contractPair(x, y, selfBracket));
      }
    }
  }
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("serialization");

TEST_CASE("section JSON shape") {
  const CourantSection s(VectorField::monomial(kC2, {0}, px(kC2, "x")),
                         Form::monomial(kC2, {1}, px(kC2, "-1/2")));
  const Json j = s.toJson();
  CHECK(j["vec"]["e1"] == "x");
  CHECK(j["form"]["dx2"] == "-1/2");
}

TEST_SUITE_END();
