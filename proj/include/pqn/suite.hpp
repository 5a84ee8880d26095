#pragma once

#include "pqn/specfile.hpp"

namespace pqn {

inline constexpr const char* kToolName = "pqn-verify";
inline constexpr const char* kToolVersion = "1.0.0";

/// Result of a suite run; serializes byte-stably for a fixed (input, seed,
/// tool version). Wall-clock timing is reported only when PQN_TIMING=1.
struct RunReport {
  std::string toolVersion;
  std::string digest;
  std::uint64_t seed = 0;
  int degreeCap = 24;
  std::vector<SuiteId> suitesRun;
  CheckReport checks;
  long timingMs = 0;

  bool allPass() const { return checks.allPass(); }
  Json toJson() const;
  std::string toText() const;  // one console line per check
};

struct RunOptions {
  std::vector<SuiteId> suites;        // empty: take from spec / default
  std::optional<std::uint64_t> seed;  // override
  std::optional<int> degreeCap;       // override
  int identityReps = 30;
};

/// Executes the selected suites against the spec. Items are independent and
/// pure; they are fanned out and joined in deterministic order.
RunReport runSuite(const SpecFile& spec, const RunOptions& options = {});

/// Default suite selection when neither the file nor the caller names any:
/// every suite applicable to the spec (omega-dependent ones only with omega).
std::vector<SuiteId> applicableSuites(const SpecFile& spec);

/// Deterministic pseudo-random valid PqN spec: constant canonical pi,
/// constant compatible N, omega = d(theta) for a random 1-form theta with
/// coefficient degree <= thetaDegree. dim must be in 2..6.
SpecFile generateSpec(std::uint64_t seed, int dim, int thetaDegree);

}  // namespace pqn
