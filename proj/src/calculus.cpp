#include "pqn/calculus.hpp"

#include "pqn/error.hpp"

namespace pqn {

Form exteriorD(const Form& eta) {
  const Chart& chart = eta.chart();
  const int n = chart.dim();
  Form r(chart, eta.degree() + 1);
  if (r.trivialByDegree()) return r;
  for (const auto& [idx, c] : eta.components()) {
    for (int axis = 0; axis < n; ++axis) {
      Polynomial dc = c.partialDerivative(axis);
      if (dc.isZero()) continue;
      IndexTuple target;
      target.reserve(idx.size() + 1);
      target.push_back(axis);
      target.insert(target.end(), idx.begin(), idx.end());
      r.accumulate(target, dc);
    }
  }
  return r;
}

Form exteriorD(const Polynomial& f, const Chart& chart) {
  return exteriorD(Form::scalar(chart, f));
}

Polynomial applyVectorField(const VectorField& x, const Polynomial& f) {
  if (x.chart().dim() != f.dim())
    throw ChartMismatchError("vector field and function dimension mismatch");
  if (x.degree() != 1) throw Error("vector field must have degree 1");
  Polynomial acc = Polynomial::zero(f.dim());
  for (const auto& [idx, c] : x.components()) acc += c * f.partialDerivative(idx[0]);
  return acc;
}

VectorField lieBracket(const VectorField& x, const VectorField& y) {
  requireSameChart(x.chart(), y.chart(), "Lie bracket");
  if (x.degree() != 1 || y.degree() != 1) throw Error("Lie bracket needs vector fields");
  const Chart& chart = x.chart();
  VectorField r(chart, 1);
  for (int i = 0; i < chart.dim(); ++i) {
    Polynomial acc = applyVectorField(x, y.component({i})) - applyVectorField(y, x.component({i}));
    r.accumulate({i}, acc);
  }
  return r;
}

Form lieDerivativeForm(const VectorField& x, const Form& eta) {
  requireSameChart(x.chart(), eta.chart(), "Lie derivative");
  const int k = eta.degree();
  if (k == 0) return Form::scalar(eta.chart(), applyVectorField(x, eta.scalarValue()));
  // Cartan: L_X = i_X d + d i_X.
  return contract(x, exteriorD(eta)) + exteriorD(contract(x, eta));
}

namespace {

// Reduction engine shared by the Schouten and Koszul brackets: monomial
// decomposition of the right argument via the graded Leibniz rule, graded
// antisymmetry to flip, and policy-supplied base cases on degrees (1,1),
// (1,0) and (0,q).
template <Variance V, typename Policy>
AltTensor<V> bracketRec(const AltTensor<V>& u, const AltTensor<V>& v, const Policy& pol) {
  const int p = u.degree(), q = v.degree();
  const Chart& chart = u.chart();
  const int resDeg = p + q > 0 ? p + q - 1 : 0;
  if (u.isZero() || v.isZero()) return AltTensor<V>(chart, resDeg);
  if (p == 0 && q == 0) return AltTensor<V>(chart, 0);
  if (p == 0) return pol.functionBracket(u.scalarValue(), v);
  if (q == 0) {
    // [u, f] = (-1)^p [f, u]
    AltTensor<V> r = pol.functionBracket(v.scalarValue(), u);
    return (p % 2 == 0) ? r : -r;
  }
  if (p == 1 && q == 1) return pol.oneOne(u, v);
  if (q >= 2) {
    AltTensor<V> acc(chart, resDeg);
    for (const auto& [idx, coeff] : v.components()) {
      // g e_{j1}^...^e_{jq} = (g e_{j1}) ^ (e_{j2}^...^e_{jq})
      AltTensor<V> head = AltTensor<V>::monomial(chart, {idx[0]}, coeff);
      AltTensor<V> tail = AltTensor<V>::basis(chart, IndexTuple(idx.begin() + 1, idx.end()));
      acc += wedge(bracketRec(u, head, pol), tail);
      AltTensor<V> t = wedge(head, bracketRec(u, tail, pol));
      acc += (p % 2 == 1) ? t : -t;  // Leibniz sign (-1)^{(p-1)*1}
    }
    return acc;
  }
  // p >= 2, q == 1: [u,v] = -(-1)^{(p-1)(q-1)}[v,u] = -[v,u]
  return -bracketRec(v, u, pol);
}

struct SchoutenPolicy {
  SchoutenSign sign;

  MultiVector functionBracket(const Polynomial& f, const MultiVector& p) const {
    // [f, P] = -i_{df} P (flipped variant negates this, as a Jacobi-breaking
    // control).
    MultiVector r = contract(exteriorD(f, p.chart()), p);
    return sign == SchoutenSign::Standard ? -r : r;
  }
  MultiVector oneOne(const VectorField& x, const VectorField& y) const {
    return lieBracket(x, y);
  }
};

struct KoszulPolicy {
  const MultiVector& pi;

  Form functionBracket(const Polynomial& f, const Form& eta) const {
    // [f, eta]_pi = i_{pi# df} eta
    return contract(sharp(pi, exteriorD(f, eta.chart())), eta);
  }
  Form oneOne(const Form& a, const Form& b) const {
    // [a,b]_pi = L_{pi#a} b - L_{pi#b} a - d<b, pi#a>
    const VectorField sa = sharp(pi, a);
    const VectorField sb = sharp(pi, b);
    return lieDerivativeForm(sa, b) - lieDerivativeForm(sb, a) -
           exteriorD(pairing(b, sa), a.chart());
  }
};

}  // namespace

MultiVector schouten(const MultiVector& p, const MultiVector& q, SchoutenSign sign) {
  requireSameChart(p.chart(), q.chart(), "Schouten bracket");
  return bracketRec(p, q, SchoutenPolicy{sign});
}

Form koszulBracket(const Form& eta1, const Form& eta2, const MultiVector& pi) {
  requireSameChart(eta1.chart(), eta2.chart(), "Koszul bracket");
  requireSameChart(eta1.chart(), pi.chart(), "Koszul bracket");
  if (pi.degree() != 2) throw Error("Koszul bracket needs a bivector");
  return bracketRec(eta1, eta2, KoszulPolicy{pi});
}

Form dN(const EndoField& n, const Form& eta) {
  requireSameChart(n.chart(), eta.chart(), "dN");
  return insertN(n, exteriorD(eta)) - exteriorD(insertN(n, eta));
}

VectorField bracketN(const EndoField& n, const VectorField& x, const VectorField& y) {
  requireSameChart(n.chart(), x.chart(), "bracketN");
  requireSameChart(n.chart(), y.chart(), "bracketN");
  return lieBracket(n.apply(x), y) + lieBracket(x, n.apply(y)) - n.apply(lieBracket(x, y));
}

VectorField nijenhuisTorsion(const EndoField& n, const VectorField& x, const VectorField& y) {
  return lieBracket(n.apply(x), n.apply(y)) - n.apply(bracketN(n, x, y));
}

std::vector<std::pair<IndexTuple, VectorField>> nijenhuisTorsionFrame(const EndoField& n) {
  std::vector<std::pair<IndexTuple, VectorField>> out;
  const Chart& chart = n.chart();
  for (const auto& pair : increasingTuples(chart.dim(), 2))
    out.emplace_back(pair,
                     nijenhuisTorsion(n, frameField(chart, pair[0]), frameField(chart, pair[1])));
  return out;
}

MultiVector lichnerowiczD(const MultiVector& pi, const MultiVector& p) {
  if (pi.degree() != 2) throw Error("Lichnerowicz differential needs a bivector");
  return schouten(pi, p);
}

VectorField piLieDerivative(const Form& alpha, const VectorField& y, const MultiVector& pi) {
  requireSameChart(alpha.chart(), y.chart(), "pi-Lie derivative");
  return lieBracket(sharp(pi, alpha), y) + sharp(pi, contract(y, exteriorD(alpha)));
}

VectorField omegaPiBracket(const VectorField& x, const VectorField& y, const Form& omega,
                           const MultiVector& pi) {
  if (omega.degree() != 2) throw Error("omega-pi bracket needs a 2-form");
  const Polynomial oxy = evalOnVectors(omega, {x, y});
  return piLieDerivative(flat(omega, x), y, pi) - piLieDerivative(flat(omega, y), x, pi) -
         lichnerowiczD(pi, MultiVector::scalar(x.chart(), oxy));
}

Form compatibilityConcomitant(const MultiVector& pi, const MultiVector& piN, const EndoField& n,
                              const Form& alpha, const Form& beta) {
  return koszulBracket(alpha, beta, piN) -
         koszulBracket(n.applyTranspose(alpha), beta, pi) -
         koszulBracket(alpha, n.applyTranspose(beta), pi) +
         n.applyTranspose(koszulBracket(alpha, beta, pi));
}

}  // namespace pqn
