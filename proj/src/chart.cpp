#include "pqn/chart.hpp"

#include <algorithm>
#include <set>

#include "pqn/error.hpp"

namespace pqn {

Chart::Chart(int dim, std::vector<std::string> varNames)
    : dim_(dim), names_(std::move(varNames)) {
  if (dim_ < 1) throw Error("chart dimension must be >= 1");
  if (static_cast<int>(names_.size()) != dim_)
    throw Error("chart needs exactly " + std::to_string(dim_) + " variable names");
  std::set<std::string> unique(names_.begin(), names_.end());
  if (static_cast<int>(unique.size()) != dim_) throw Error("chart variable names must be distinct");
  for (const auto& n : names_)
    if (n.empty()) throw Error("empty variable name");
}

Chart Chart::standard(int dim) {
  std::vector<std::string> names;
  names.reserve(dim);
  for (int i = 1; i <= dim; ++i) names.push_back("x" + std::to_string(i));
  return Chart(dim, std::move(names));
}

std::optional<int> Chart::axisOf(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<int>(it - names_.begin());
}

std::vector<Rational> Chart::samplePoint() const {
  std::vector<Rational> p;
  p.reserve(dim_);
  for (int i = 0; i < dim_; ++i) p.emplace_back(1, i + 2);
  return p;
}

std::optional<std::pair<IndexTuple, int>> sortWithSign(IndexTuple idx) {
  int sign = 1;
  // Insertion sort, counting transpositions; tuples have length <= dim.
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx[j] < idx[j - 1]; --j) {
      std::swap(idx[j], idx[j - 1]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i] == idx[i - 1]) return std::nullopt;
  return std::make_pair(std::move(idx), sign);
}

std::vector<IndexTuple> increasingTuples(int n, int k) {
  std::vector<IndexTuple> out;
  if (k < 0 || k > n) return out;
  IndexTuple cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int pos = k - 1;
    while (pos >= 0 && cur[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++cur[pos];
    for (int i = pos + 1; i < k; ++i) cur[i] = cur[i - 1] + 1;
  }
  return out;
}

}  // namespace pqn
