#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pqn/rational.hpp"

namespace pqn {

/// Polynomial coordinate chart: a dimension and distinct variable names.
/// All tensors remember their chart; values on different charts never mix.
class Chart {
 public:
  Chart(int dim, std::vector<std::string> varNames);

  /// Chart with variables x1..xn.
  static Chart standard(int dim);

  int dim() const { return dim_; }
  const std::vector<std::string>& varNames() const { return names_; }
  const std::string& varName(int axis) const { return names_.at(axis); }
  /// Index of a named variable, if declared.
  std::optional<int> axisOf(const std::string& name) const;

  /// Fixed sample point (1/2, 1/3, ..., 1/(n+1)) used by report rendering.
  std::vector<Rational> samplePoint() const;

  friend bool operator==(const Chart& a, const Chart& b) {
    return a.dim_ == b.dim_ && a.names_ == b.names_;
  }
  friend bool operator!=(const Chart& a, const Chart& b) { return !(a == b); }

 private:
  int dim_;
  std::vector<std::string> names_;
};

/// Index tuple of a tensor component, 0-based internally.
using IndexTuple = std::vector<int>;

/// Sorts a tuple into strictly increasing order, returning the permutation
/// sign, or nullopt if an index repeats.
std::optional<std::pair<IndexTuple, int>> sortWithSign(IndexTuple idx);

/// All strictly increasing k-tuples in {0..n-1}, in lexicographic order.
std::vector<IndexTuple> increasingTuples(int n, int k);

}  // namespace pqn
