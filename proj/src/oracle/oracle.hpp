#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "classify/classify.hpp"
#include "oracle/ensembles.hpp"

namespace rootsplit::oracle {

enum class CheckId {
  Integrality,       // |rawSum - c1| < eps_int, no NonIntegerChern
  Coherence,         // ln-moduli over the poles cancel
  ChernBound,        // n = 2: 0 >= c1 >= -4
  UnitaryStrict,     // n = 2 unitary irreducible: c1 < 0
  RootBound,         // n = 2: roots in [-2, 0]
  ReducibleBound,    // n = 3 reducible: roots in (-3, 0]
  NonRoots,          // n = 3 reducible: never (0,-1,-3)
  SumRule,           // every option sums to c1
  RoundTrip,         // exp(log M) = M and branch confinement
  OracleAgreement,   // decomposable: classify equals the direct-sum oracle
  ExactFloat,        // rationalAngle: exact and floating c1 agree
  PlantedDetection,  // blockUpperTriangular: reducibility with the planted dimension is found
};

const char* checkName(CheckId id);
std::vector<CheckId> parseChecks(const std::vector<std::string>& names);
std::vector<CheckId> defaultChecks(const SampleSpec& spec);

struct Violation {
  std::string check;
  std::string label;
  nlohmann::json input;
  std::string expected;
  std::string got;
};

struct OracleReport {
  SampleSpec spec;
  std::vector<std::string> checks;
  long checksRun = 0;
  long skipped = 0;  // samples outside a check's hypothesis (e.g. reducible in UnitaryStrict)
  std::vector<Violation> violations;
  std::map<int, long> c1Histogram;
  std::map<std::string, long> tallies;
  double maxIntegerResidual = 0.0;
  double maxRoundTripError = 0.0;
  std::vector<std::string> findings;  // conjectural observations, never failures

  nlohmann::json toJson() const;
  std::string summary() const;
};

// Ground truth for direct sums: the multiset union of part roots.
// Throws AmbiguousPart when a part is not determined.
SplittingType directSumOracle(const std::vector<MonodromyRep>& parts, const Tolerances& tol = {});

OracleReport sampleAndCheck(const SampleSpec& spec, const std::vector<CheckId>& checks,
                            const Tolerances& tol = {});

// Tallies roots outside the conjectured window (-3, 0]; findings only.
OracleReport conjectureScan(const SampleSpec& spec, const Tolerances& tol = {});

// Matrices as [[re, im], ...] rows, for violation records.
nlohmann::json matrixJson(const Matrix& m);

}  // namespace rootsplit::oracle
