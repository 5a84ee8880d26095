#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pqn/pqn_structure.hpp"
#include "pqn/report.hpp"

namespace pqn {

/// Names of the verification suites the runner knows.
enum class SuiteId {
  PqnAxioms,
  DeformTheorem,
  BracketIdentities,
  CourantAxioms,
  ThmCourant,
  LemmaIdentities,
};

const std::vector<std::pair<SuiteId, std::string>>& suiteNames();
std::optional<SuiteId> suiteFromName(const std::string& name);
const std::string& suiteName(SuiteId id);

/// Parsed structure-specification file. Polynomial components are stored as
/// exact tensors on the declared chart; `provenance` is carried opaquely.
struct SpecFile {
  Chart chart;
  MultiVector pi;
  EndoField n;
  Form phi;
  std::optional<Form> omega;
  std::vector<SuiteId> suites;  // empty = default selection per verb
  std::uint64_t seed = 0;
  int degreeCap = 24;
  Json provenance = Json(nullptr);

  SpecFile(Chart chart_, MultiVector pi_, EndoField n_, Form phi_);

  PqnStructure structure() const { return PqnStructure(chart, pi, n, phi); }

  friend bool operator==(const SpecFile& a, const SpecFile& b);
};

/// Parses and validates a spec file. Unknown keys are rejected; polynomial
/// strings must parse under the expression grammar; index tuples must be
/// 1-based, in range and strictly increasing. Errors carry positions where
/// available.
SpecFile parseSpec(const std::string& text);

/// Canonical serialization; parseSpec(printSpec(s)) == s.
std::string printSpec(const SpecFile& spec);
Json specToJson(const SpecFile& spec);

/// FNV-1a 64 digest of raw input bytes, as "fnv1a64:<hex>".
std::string inputDigest(const std::string& bytes);

}  // namespace pqn
