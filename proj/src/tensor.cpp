#include "pqn/tensor.hpp"

#include <algorithm>

#include "pqn/error.hpp"

namespace pqn {

void requireSameChart(const Chart& a, const Chart& b, const char* where) {
  if (a != b) throw ChartMismatchError(std::string("chart mismatch in ") + where);
}

template <Variance V>
AltTensor<V>::AltTensor(Chart chart, int degree) : chart_(std::move(chart)), degree_(degree) {
  if (degree_ < 0) throw Error("tensor degree must be >= 0");
}

template <Variance V>
AltTensor<V> AltTensor<V>::scalar(Chart chart, Polynomial value) {
  if (value.dim() != chart.dim()) throw ChartMismatchError("scalar coefficient dimension mismatch");
  AltTensor t(std::move(chart), 0);
  if (!value.isZero()) t.comps_.emplace(IndexTuple{}, std::move(value));
  return t;
}

template <Variance V>
AltTensor<V> AltTensor<V>::basis(Chart chart, const IndexTuple& indices) {
  const int dim = chart.dim();
  return monomial(std::move(chart), indices, Polynomial::constant(dim, Rational(1)));
}

template <Variance V>
AltTensor<V> AltTensor<V>::monomial(Chart chart, const IndexTuple& indices, Polynomial coeff) {
  AltTensor t(std::move(chart), static_cast<int>(indices.size()));
  if (coeff.dim() != t.chart_.dim()) throw ChartMismatchError("monomial coefficient dimension mismatch");
  t.accumulate(indices, coeff);
  return t;
}

template <Variance V>
void AltTensor<V>::checkTuple(const IndexTuple& indices) const {
  if (static_cast<int>(indices.size()) != degree_)
    throw Error("index tuple length " + std::to_string(indices.size()) +
                " does not match tensor degree " + std::to_string(degree_));
  for (int i : indices)
    if (i < 0 || i >= chart_.dim())
      throw Error("tensor index " + std::to_string(i + 1) + " out of range");
}

template <Variance V>
Polynomial AltTensor<V>::component(const IndexTuple& indices) const {
  checkTuple(indices);
  auto sorted = sortWithSign(indices);
  if (!sorted) return Polynomial::zero(chart_.dim());
  auto it = comps_.find(sorted->first);
  if (it == comps_.end()) return Polynomial::zero(chart_.dim());
  return sorted->second > 0 ? it->second : -it->second;
}

template <Variance V>
Polynomial AltTensor<V>::scalarValue() const {
  if (degree_ != 0) throw Error("scalarValue on tensor of degree " + std::to_string(degree_));
  if (comps_.empty()) return Polynomial::zero(chart_.dim());
  return comps_.begin()->second;
}

template <Variance V>
void AltTensor<V>::accumulate(const IndexTuple& indices, const Polynomial& c) {
  checkTuple(indices);
  if (c.isZero()) return;
  auto sorted = sortWithSign(indices);
  if (!sorted) return;  // repeated index: antisymmetry kills the term
  Polynomial signedC = sorted->second > 0 ? c : -c;
  auto it = comps_.find(sorted->first);
  if (it == comps_.end()) {
    comps_.emplace(std::move(sorted->first), std::move(signedC));
  } else {
    it->second += signedC;
    if (it->second.isZero()) comps_.erase(it);
  }
}

template <Variance V>
AltTensor<V>& AltTensor<V>::operator+=(const AltTensor& o) {
  requireSameChart(chart_, o.chart_, "tensor sum");
  if (degree_ != o.degree_) throw Error("tensor degree mismatch in sum");
  for (const auto& [i, c] : o.comps_) accumulate(i, c);
  return *this;
}

template <Variance V>
AltTensor<V>& AltTensor<V>::operator-=(const AltTensor& o) {
  requireSameChart(chart_, o.chart_, "tensor difference");
  if (degree_ != o.degree_) throw Error("tensor degree mismatch in difference");
  for (const auto& [i, c] : o.comps_) accumulate(i, -c);
  return *this;
}

template <Variance V>
std::string AltTensor<V>::componentName(const IndexTuple& indices) {
  if (indices.empty()) return "scalar";
  const char* stem = (V == Variance::Covariant) ? "dx" : "e";
  std::string out;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (k > 0) out += "^";
    out += stem + std::to_string(indices[k] + 1);
  }
  return out;
}

template <Variance V>
std::string AltTensor<V>::str() const {
  if (comps_.empty()) {
    return trivialByDegree() ? "0 (trivially zero: degree > dim)" : "0";
  }
  std::string out;
  for (const auto& [i, c] : comps_) {
    if (!out.empty()) out += ", ";
    out += componentName(i) + " -> " + c.str(chart_.varNames());
  }
  return out;
}

template class AltTensor<Variance::Covariant>;
template class AltTensor<Variance::Contravariant>;

EndoField::EndoField(Chart chart) : chart_(std::move(chart)) {
  mat_.assign(chart_.dim(), std::vector<Polynomial>(chart_.dim(), Polynomial::zero(chart_.dim())));
}

EndoField::EndoField(Chart chart, std::vector<std::vector<Polynomial>> matrix)
    : chart_(std::move(chart)), mat_(std::move(matrix)) {
  const int n = chart_.dim();
  if (static_cast<int>(mat_.size()) != n) throw Error("endomorphism matrix must be n x n");
  for (const auto& row : mat_) {
    if (static_cast<int>(row.size()) != n) throw Error("endomorphism matrix must be n x n");
    for (const auto& p : row)
      if (p.dim() != n) throw ChartMismatchError("endomorphism entry dimension mismatch");
  }
}

EndoField EndoField::identity(const Chart& chart) {
  return scaled(chart, Polynomial::constant(chart.dim(), Rational(1)));
}

EndoField EndoField::scaled(const Chart& chart, const Polynomial& f) {
  EndoField n(chart);
  for (int i = 0; i < chart.dim(); ++i) n.mat_[i][i] = f;
  return n;
}

VectorField EndoField::apply(const VectorField& x) const {
  requireSameChart(chart_, x.chart(), "endomorphism application");
  if (x.degree() != 1) throw Error("endomorphism applies to vector fields");
  const int n = chart_.dim();
  VectorField r(chart_, 1);
  for (int i = 0; i < n; ++i) {
    Polynomial acc = Polynomial::zero(n);
    for (int j = 0; j < n; ++j) acc += mat_[i][j] * x.component({j});
    r.accumulate({i}, acc);
  }
  return r;
}

Form EndoField::applyTranspose(const Form& alpha) const {
  requireSameChart(chart_, alpha.chart(), "transpose application");
  if (alpha.degree() != 1) throw Error("transpose applies to 1-forms");
  const int n = chart_.dim();
  Form r(chart_, 1);
  for (int i = 0; i < n; ++i) {
    Polynomial acc = Polynomial::zero(n);
    for (int j = 0; j < n; ++j) acc += mat_[j][i] * alpha.component({j});
    r.accumulate({i}, acc);
  }
  return r;
}

EndoField EndoField::transpose() const {
  EndoField r(chart_);
  const int n = chart_.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.mat_[i][j] = mat_[j][i];
  return r;
}

EndoField& EndoField::operator+=(const EndoField& o) {
  requireSameChart(chart_, o.chart_, "endomorphism sum");
  const int n = chart_.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mat_[i][j] += o.mat_[i][j];
  return *this;
}

EndoField operator-(const EndoField& a, const EndoField& b) {
  requireSameChart(a.chart_, b.chart_, "endomorphism difference");
  EndoField r(a.chart_);
  const int n = a.chart_.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.mat_[i][j] = a.mat_[i][j] - b.mat_[i][j];
  return r;
}

bool EndoField::isZero() const {
  for (const auto& row : mat_)
    for (const auto& p : row)
      if (!p.isZero()) return false;
  return true;
}

std::string EndoField::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < mat_.size(); ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < mat_[i].size(); ++j) {
      if (j) out += ", ";
      out += mat_[i][j].str(chart_.varNames());
    }
  }
  return out + "]";
}

namespace {

// Sign of dx_I ^ dx_J for disjoint increasing I, J: parity of the number of
// pairs (i in I, j in J) with j < i.
int shuffleSign(const IndexTuple& a, const IndexTuple& b) {
  int inversions = 0;
  for (int i : a)
    for (int j : b)
      if (j < i) ++inversions;
  return (inversions % 2 == 0) ? 1 : -1;
}

bool disjoint(const IndexTuple& a, const IndexTuple& b) {
  for (int i : a)
    for (int j : b)
      if (i == j) return false;
  return true;
}

}  // namespace

template <Variance V>
AltTensor<V> wedge(const AltTensor<V>& a, const AltTensor<V>& b) {
  requireSameChart(a.chart(), b.chart(), "wedge");
  AltTensor<V> r(a.chart(), a.degree() + b.degree());
  if (r.trivialByDegree()) return r;
  for (const auto& [ia, ca] : a.components()) {
    for (const auto& [ib, cb] : b.components()) {
      if (!disjoint(ia, ib)) continue;
      IndexTuple merged;
      merged.reserve(ia.size() + ib.size());
      std::merge(ia.begin(), ia.end(), ib.begin(), ib.end(), std::back_inserter(merged));
      Polynomial c = ca * cb;
      if (shuffleSign(ia, ib) < 0) c = -c;
      r.accumulate(merged, c);
    }
  }
  return r;
}

template Form wedge<Variance::Covariant>(const Form&, const Form&);
template MultiVector wedge<Variance::Contravariant>(const MultiVector&, const MultiVector&);

namespace {

// Shared contraction body: first-slot insertion of a degree-1 tensor of the
// opposite variance, i.e. (i_v t)(w...) = t(v, w...).
template <Variance VT, Variance VX>
AltTensor<VT> contractImpl(const AltTensor<VX>& x, const AltTensor<VT>& t, const char* what) {
  requireSameChart(x.chart(), t.chart(), what);
  if (x.degree() != 1) throw Error(std::string(what) + ": contractor must have degree 1");
  if (t.degree() < 1)
    throw PreconditionError(std::string(what) + " is rejected on degree-0 arguments");
  AltTensor<VT> r(t.chart(), t.degree() - 1);
  for (const auto& [idx, c] : t.components()) {
    for (std::size_t pos = 0; pos < idx.size(); ++pos) {
      const Polynomial xi = x.component({idx[pos]});
      if (xi.isZero()) continue;
      IndexTuple rest;
      rest.reserve(idx.size() - 1);
      for (std::size_t k = 0; k < idx.size(); ++k)
        if (k != pos) rest.push_back(idx[k]);
      Polynomial term = xi * c;
      if (pos % 2 == 1) term = -term;
      r.accumulate(rest, term);
    }
  }
  return r;
}

}  // namespace

Form contract(const VectorField& x, const Form& eta) {
  return contractImpl(x, eta, "contraction i_X");
}

MultiVector contract(const Form& alpha, const MultiVector& p) {
  return contractImpl(alpha, p, "contraction i_alpha");
}

Form contractPair(const VectorField& x, const VectorField& y, const Form& eta) {
  return contract(y, contract(x, eta));
}

Form insertN(const EndoField& n, const Form& eta) {
  requireSameChart(n.chart(), eta.chart(), "insertN");
  const int k = eta.degree();
  Form r(eta.chart(), k);
  if (k == 0 || r.trivialByDegree()) return r;  // i_N f = 0
  const int dim = eta.chart().dim();
  for (const auto& target : increasingTuples(dim, k)) {
    Polynomial acc = Polynomial::zero(dim);
    for (int slot = 0; slot < k; ++slot) {
      for (int m = 0; m < dim; ++m) {
        const Polynomial& nm = n.entry(m, target[slot]);
        if (nm.isZero()) continue;
        IndexTuple probe = target;
        probe[slot] = m;
        Polynomial comp = eta.component(probe);
        if (!comp.isZero()) acc += nm * comp;
      }
    }
    if (!acc.isZero()) r.accumulate(target, acc);
  }
  return r;
}

VectorField sharp(const MultiVector& pi, const Form& alpha) {
  requireSameChart(pi.chart(), alpha.chart(), "sharp");
  if (pi.degree() != 2) throw Error("sharp needs a bivector");
  if (alpha.degree() != 1) throw Error("sharp applies to 1-forms");
  VectorField r(pi.chart(), 1);
  // (pi# a)^j = sum_i pi^{ij} a_i over full antisymmetric components.
  for (const auto& [idx, p] : pi.components()) {
    const int i = idx[0], j = idx[1];
    r.accumulate({j}, p * alpha.component({i}));
    r.accumulate({i}, -(p * alpha.component({j})));
  }
  return r;
}

Form flat(const Form& omega, const VectorField& x) {
  if (omega.degree() != 2) throw Error("flat needs a 2-form");
  return contract(x, omega);
}

EndoField composeSharpFlat(const MultiVector& pi, const Form& omega) {
  requireSameChart(pi.chart(), omega.chart(), "composeSharpFlat");
  const Chart& chart = pi.chart();
  EndoField r(chart);
  for (int j = 0; j < chart.dim(); ++j) {
    const VectorField col = sharp(pi, flat(omega, frameField(chart, j)));
    for (int i = 0; i < chart.dim(); ++i) r.setEntry(i, j, col.component({i}));
  }
  return r;
}

Polynomial pairing(const Form& alpha, const VectorField& x) {
  requireSameChart(alpha.chart(), x.chart(), "pairing");
  if (alpha.degree() != 1 || x.degree() != 1) throw Error("pairing needs a 1-form and a vector field");
  Polynomial acc = Polynomial::zero(alpha.chart().dim());
  for (const auto& [idx, c] : alpha.components()) acc += c * x.component(idx);
  return acc;
}

namespace {

Polynomial detPoly(const std::vector<std::vector<Polynomial>>& m, std::vector<int> cols, int row) {
  const int dim = m.empty() ? 1 : m[0][0].dim();
  if (cols.empty()) return Polynomial::constant(dim, Rational(1));
  Polynomial acc = Polynomial::zero(dim);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const Polynomial& pivot = m[row][cols[k]];
    if (pivot.isZero()) continue;
    std::vector<int> rest;
    for (std::size_t t = 0; t < cols.size(); ++t)
      if (t != k) rest.push_back(cols[t]);
    Polynomial minor = detPoly(m, rest, row + 1);
    Polynomial term = pivot * minor;
    if (k % 2 == 1) term = -term;
    acc += term;
  }
  return acc;
}

template <Variance VT, Variance VA>
Polynomial evalImpl(const AltTensor<VT>& t, const std::vector<AltTensor<VA>>& args, const char* what) {
  const int k = t.degree();
  const int dim = t.chart().dim();
  if (static_cast<int>(args.size()) != k)
    throw Error(std::string(what) + ": argument count must equal tensor degree");
  for (const auto& a : args) {
    requireSameChart(t.chart(), a.chart(), what);
    if (a.degree() != 1) throw Error(std::string(what) + ": arguments must have degree 1");
  }
  if (k == 0) return t.scalarValue();
  Polynomial acc = Polynomial::zero(dim);
  for (const auto& [idx, c] : t.components()) {
    // det M with M[a][b] = args[b]^{idx[a]}.
    std::vector<std::vector<Polynomial>> m(k, std::vector<Polynomial>(k, Polynomial::zero(dim)));
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) m[a][b] = args[b].component({idx[a]});
    std::vector<int> cols(k);
    for (int i = 0; i < k; ++i) cols[i] = i;
    acc += c * detPoly(m, cols, 0);
  }
  return acc;
}

}  // namespace

Polynomial evalOnVectors(const Form& eta, const std::vector<VectorField>& xs) {
  return evalImpl(eta, xs, "form evaluation");
}

Polynomial evalOnForms(const MultiVector& p, const std::vector<Form>& alphas) {
  return evalImpl(p, alphas, "multivector evaluation");
}

VectorField frameField(const Chart& chart, int axis) {
  return VectorField::basis(chart, {axis});
}

Form coordinateForm(const Chart& chart, int axis) {
  return Form::basis(chart, {axis});
}

}  // namespace pqn
