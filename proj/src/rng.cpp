#include "pqn/rng.hpp"

#include "pqn/calculus.hpp"

namespace pqn {

namespace {
std::uint64_t splitmix(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}
}  // namespace

Rng Rng::fork(const std::string& label) const {
  return Rng(state_ ^ fnv1a(label));
}

std::uint64_t Rng::next() { return splitmix(state_); }

int Rng::range(int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next() % span);
}

Rational Rng::rational(int maxAbs) {
  // Mostly small integers, occasionally a proper fraction.
  const long num = range(-maxAbs, maxAbs);
  const long den = (range(0, 3) == 0) ? range(2, 3) : 1;
  return Rational(num, den);
}

Polynomial Rng::polynomial(const Chart& chart, int maxDegree, int maxTerms) {
  const int n = chart.dim();
  Polynomial p = Polynomial::zero(n);
  const int terms = range(1, maxTerms);
  for (int t = 0; t < terms; ++t) {
    Exponents e(n, 0);
    const int deg = range(0, maxDegree);
    for (int d = 0; d < deg; ++d) e[range(0, n - 1)] += 1;
    p += Polynomial::monomial(n, e, rational());
  }
  return p;
}

Form Rng::form(const Chart& chart, int degree, int maxCoeffDegree) {
  Form r(chart, degree);
  for (const auto& idx : increasingTuples(chart.dim(), degree))
    if (range(0, 2) != 0) r.accumulate(idx, polynomial(chart, maxCoeffDegree, 2));
  return r;
}

MultiVector Rng::multiVector(const Chart& chart, int degree, int maxCoeffDegree) {
  MultiVector r(chart, degree);
  for (const auto& idx : increasingTuples(chart.dim(), degree))
    if (range(0, 2) != 0) r.accumulate(idx, polynomial(chart, maxCoeffDegree, 2));
  return r;
}

VectorField Rng::vectorField(const Chart& chart, int maxCoeffDegree) {
  return multiVector(chart, 1, maxCoeffDegree);
}

EndoField Rng::endo(const Chart& chart, int maxCoeffDegree) {
  EndoField n(chart);
  for (int i = 0; i < chart.dim(); ++i)
    for (int j = 0; j < chart.dim(); ++j)
      if (range(0, 2) != 0) n.setEntry(i, j, polynomial(chart, maxCoeffDegree, 2));
  return n;
}

Form Rng::closedTwoForm(const Chart& chart, int maxCoeffDegree) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Form theta = form(chart, 1, maxCoeffDegree);
    Form omega = exteriorD(theta);
    if (!omega.isZero()) return omega;
  }
  // Every draw was closed already (tiny charts / unlucky stream): fall back
  // to a constant symplectic-type form.
  Form omega(chart, 2);
  omega.accumulate({0, 1}, Polynomial::constant(chart.dim(), Rational(1)));
  return omega;
}

MultiVector Rng::poissonBivector(const Chart& chart) {
  const int n = chart.dim();
  MultiVector pi(chart, 2);
  switch (n >= 3 ? range(0, 2) : 1) {
    case 0: {
      // Lie-Poisson so(3) type on the first three axes.
      pi.accumulate({0, 1}, Polynomial::variable(n, 2));
      pi.accumulate({1, 2}, Polynomial::variable(n, 0));
      pi.accumulate({2, 0}, Polynomial::variable(n, 1));
      break;
    }
    case 1: {
      // Constant bivectors are always Poisson.
      for (const auto& idx : increasingTuples(n, 2))
        pi.accumulate(idx, Polynomial::constant(n, rational()));
      if (pi.isZero()) pi.accumulate({0, 1}, Polynomial::constant(n, Rational(1)));
      break;
    }
    default: {
      // pi = x3 d1^d2: the coefficient depends only on a kernel direction.
      pi.accumulate({0, 1}, Polynomial::variable(n, 2));
      break;
    }
  }
  return pi;
}

}  // namespace pqn
