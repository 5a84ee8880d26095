#pragma once

#include <cstdint>
#include <string>

#include "pqn/tensor.hpp"

namespace pqn {

/// Deterministic splitmix64 generator. Hand-rolled so that streams are
/// byte-stable across platforms and standard-library versions (the
/// std::uniform_* distributions are not portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  /// Independent substream for a named suite item; insensitive to the order
  /// in which items run.
  Rng fork(const std::string& label) const;

  std::uint64_t next();
  /// Uniform-ish integer in [lo, hi], inclusive.
  int range(int lo, int hi);

  Rational rational(int maxAbs = 3);
  Polynomial polynomial(const Chart& chart, int maxDegree, int maxTerms = 3);
  Form form(const Chart& chart, int degree, int maxCoeffDegree);
  MultiVector multiVector(const Chart& chart, int degree, int maxCoeffDegree);
  VectorField vectorField(const Chart& chart, int maxCoeffDegree);
  EndoField endo(const Chart& chart, int maxCoeffDegree);
  /// Exact (hence closed) 2-form d(theta) for a random 1-form theta; retries
  /// until nonzero.
  Form closedTwoForm(const Chart& chart, int maxCoeffDegree);

  /// A bivector from a fixed battery of Poisson structures (random constant
  /// ones plus linear Lie-Poisson type entries).
  MultiVector poissonBivector(const Chart& chart);

 private:
  std::uint64_t state_;
};

}  // namespace pqn
