#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exact/exact_spectrum.hpp"
#include "oracle/rng.hpp"
#include "rep/rep.hpp"

namespace rootsplit::oracle {

enum class Ensemble { Generic, Unitary, RationalAngle, BlockUpperTriangular, Decomposable };

const char* ensembleName(Ensemble e);
std::optional<Ensemble> parseEnsemble(const std::string& name);

struct SampleSpec {
  int count = 1000;
  int dim = 2;
  Ensemble ensemble = Ensemble::Generic;
  std::uint64_t seed = 1;
  int maxDenominator = 12;         // rationalAngle
  std::vector<int> split;          // decomposable part dimensions, e.g. {2, 1}
};

struct Sample {
  std::string label;
  Matrix m0;
  Matrix m1;
  std::optional<exact::ExactMatrix> exact0;  // rationalAngle only
  std::optional<exact::ExactMatrix> exact1;
  int plantedSubDim = 0;                     // blockUpperTriangular
  std::vector<MonodromyRep> parts;           // decomposable
};

Matrix genericMatrix(Rng& rng, int n);
Matrix unitaryMatrix(Rng& rng, int n);
// Random matrix with 2-norm condition number at most maxCond.
Matrix conjugator(Rng& rng, int n, double maxCond = 100.0);

// Deterministic sample `index` of a spec.
Sample drawSample(const SampleSpec& spec, std::uint64_t index);

}  // namespace rootsplit::oracle
