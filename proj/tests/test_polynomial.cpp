#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pqn/error.hpp"
#include "pqn/poly_parser.hpp"
#include "pqn/polynomial.hpp"
#include "pqn/rng.hpp"

using namespace pqn;

namespace {

const Chart kChart2(2, {"x", "y"});

Polynomial parse2(const std::string& text) { return parsePolynomial(text, kChart2); }

}  // namespace

TEST_SUITE_BEGIN("rational");

TEST_CASE("construction keeps lowest terms and positive denominator") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(1, -3).str() == "-1/3");
  CHECK(Rational(-2, -8).str() == "1/4");
  CHECK(Rational(0, 7).str() == "0");
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("string round trip and arithmetic") {
  CHECK(Rational::fromString("-7/21").str() == "-1/3");
  CHECK(Rational::fromString("12").str() == "12");
  CHECK_THROWS_AS(Rational::fromString("a/b"), Error);
  CHECK_THROWS_AS(Rational::fromString("1/0"), Error);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(-Rational(1, 2) == Rational(-1, 2));
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("no overflow at scale long arithmetic would break") {
  Rational big(1);
  for (int i = 0; i < 50; ++i) big *= Rational(10);
  Rational third = big / Rational(3);
  CHECK(third * Rational(3) == big);
  CHECK(big.str() == "1" + std::string(50, '0'));
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("polynomial");

TEST_CASE("addition examples") {
  CHECK(parse2("x + y") + parse2("x - y") == parse2("2*x"));
  const Polynomial p = parse2("x^2*y - 1/3");
  CHECK(p + Polynomial::zero(2) == p);
  CHECK(parse2("x^2*y") + parse2("-x^2*y") == Polynomial::zero(2));
}

TEST_CASE("multiplication examples") {
  CHECK(parse2("x + y") * parse2("x - y") == parse2("x^2 - y^2"));
  const Polynomial p = parse2("3*x*y - y^2");
  CHECK(p * parse2("1") == p);
  CHECK((p * Polynomial::zero(2)).isZero());
}

TEST_CASE("partial derivative examples") {
  CHECK(parse2("x^2*y").partialDerivative(0) == parse2("2*x*y"));
  CHECK(parse2("x^2").partialDerivative(1).isZero());
  CHECK(parse2("x*y + y^2").partialDerivative(0) == parse2("y"));
  CHECK_THROWS_AS(parse2("x").partialDerivative(2), Error);
  CHECK_THROWS_AS(parse2("x").partialDerivative(-1), Error);
}

TEST_CASE("evaluation examples") {
  CHECK(parse2("x^2 + y").evaluate({Rational(2), Rational(3)}) == Rational(7));
  CHECK(Polynomial::zero(2).evaluate({Rational(5), Rational(-1)}) == Rational(0));
  CHECK(parse2("x*y").evaluate({Rational(1, 2), Rational(2, 3)}) == Rational(1, 3));
  CHECK_THROWS_AS(parse2("x").evaluate({Rational(1)}), Error);
}

TEST_CASE("dimension mismatch is rejected") {
  const Polynomial q = Polynomial::variable(3, 0);
  CHECK_THROWS_AS(parse2("x") + q, ChartMismatchError);
  CHECK_THROWS_AS(parse2("x") * q, ChartMismatchError);
}

TEST_CASE("ring axioms on random polynomials") {
  Rng rng(2024);
  for (int rep = 0; rep < 40; ++rep) {
    const Polynomial a = rng.polynomial(kChart2, 3);
    const Polynomial b = rng.polynomial(kChart2, 3);
    const Polynomial c = rng.polynomial(kChart2, 3);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("Leibniz rule and commuting mixed partials") {
  Rng rng(7);
  const Chart c3 = Chart::standard(3);
  for (int rep = 0; rep < 40; ++rep) {
    const Polynomial p = rng.polynomial(c3, 4);
    const Polynomial q = rng.polynomial(c3, 4);
    const int axis = rng.range(0, 2);
    CHECK((p * q).partialDerivative(axis) ==
          p.partialDerivative(axis) * q + p * q.partialDerivative(axis));
    const int other = rng.range(0, 2);
    CHECK(p.partialDerivative(axis).partialDerivative(other) ==
          p.partialDerivative(other).partialDerivative(axis));
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  Rng rng(99);
  const std::vector<Rational> point = {Rational(1, 2), Rational(-2, 3)};
  for (int rep = 0; rep < 40; ++rep) {
    const Polynomial p = rng.polynomial(kChart2, 3);
    const Polynomial q = rng.polynomial(kChart2, 3);
    CHECK((p + q).evaluate(point) == p.evaluate(point) + q.evaluate(point));
    CHECK((p * q).evaluate(point) == p.evaluate(point) * q.evaluate(point));
  }
}

TEST_CASE("degree guardrail") {
  const int saved = polynomialDegreeCap();
  setPolynomialDegreeCap(6);
  const Polynomial cube = parse2("x^3 + 1");
  CHECK_NOTHROW(cube * cube);
  CHECK_THROWS_AS(cube * cube * cube, DegreeCapError);
  setPolynomialDegreeCap(saved);
  CHECK_THROWS_AS(setPolynomialDegreeCap(0), Error);
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("printing and parsing");

TEST_CASE("canonical graded-lex rendering") {
  CHECK(parse2("2*x^2*y - 1/3").str({"x", "y"}) == "2*x^2*y - 1/3");
  CHECK(Polynomial::zero(2).str({"x", "y"}) == "0");
  CHECK(parse2("y + x^2 + x*y^2").str({"x", "y"}) == "x*y^2 + x^2 + y");
  CHECK(parse2("-x").str({"x", "y"}) == "-x");
  CHECK(parse2("y^1").str({"x", "y"}) == "y");
  CHECK(parse2("x - x + 5/10").str({"x", "y"}) == "1/2");
}

TEST_CASE("parser grammar") {
  CHECK(parse2("(x+y)*(x-y)") == parse2("x^2 - y^2"));
  CHECK(parse2("  x \n + 2 ") == parse2("x+2"));
  CHECK(parse2("3/2*x") == Rational(3, 2) * Polynomial::variable(2, 0));
  CHECK(parse2("-x^2") == -parse2("x^2"));
  CHECK(parse2("x^0") == parse2("1"));
  CHECK(parse2("2^3") == parse2("8"));
  CHECK(parse2("((x))") == parse2("x"));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse2("x +"), ParseError);
  CHECK_THROWS_AS(parse2("x/y"), ParseError);  // '/' only in rational literals
  CHECK_THROWS_AS(parse2("z"), ParseError);
  CHECK_THROWS_AS(parse2("x^y"), ParseError);
  CHECK_THROWS_AS(parse2("1/0"), ParseError);
  CHECK_THROWS_AS(parse2(""), ParseError);
  CHECK_THROWS_AS(parse2("x & y"), ParseError);
  try {
    parse2("x +\n@");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.column == 1);
  }
}

TEST_CASE("parse of printed form is the identity") {
  Rng rng(314);
  const Chart c3 = Chart::standard(3);
  for (int rep = 0; rep < 30; ++rep) {
    const Polynomial p = rng.polynomial(c3, 4);
    CHECK(parsePolynomial(p.str(c3.varNames()), c3) == p);
  }
}

TEST_SUITE_END();
