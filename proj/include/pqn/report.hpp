#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pqn/tensor.hpp"

namespace pqn {

using Json = nlohmann::ordered_json;

/// Exact defect carried by a failed check: a named tensor rendered in
/// canonical term order plus one sample-point evaluation.
struct Witness {
  std::string name;
  std::string text;  // console rendering
  Json payload;      // structured rendering for reports
};

struct CheckResult {
  std::string id;
  bool pass = false;
  std::optional<Witness> witness;

  static CheckResult ok(std::string id) { return {std::move(id), true, std::nullopt}; }
  static CheckResult fail(std::string id, Witness w) {
    return {std::move(id), false, std::move(w)};
  }
};

/// Ordered list of check results; ordering is deterministic by checkId.
struct CheckReport {
  std::vector<CheckResult> checks;

  void add(CheckResult r) { checks.push_back(std::move(r)); }
  void merge(const CheckReport& other);
  /// Sorts by id. Ids are chosen so that lexicographic = logical order.
  void finalize();
  bool allPass() const;
  const CheckResult* find(const std::string& id) const;
  Json toJson() const;
};

Json componentsJson(const Form& t);
Json componentsJson(const MultiVector& t);

Witness witnessOf(std::string name, const Form& defect);
Witness witnessOf(std::string name, const MultiVector& defect);
Witness witnessOf(std::string name, const EndoField& defect);
Witness witnessOf(std::string name, const Polynomial& defect, const Chart& chart);
Witness witnessText(std::string name, std::string text);

}  // namespace pqn
