#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "linalg/principal_log.hpp"
#include "rep/rep.hpp"

namespace rootsplit {

struct PoleData {
  int pole = 0;  // 0, 1, 2 (= infinity)
  Complex traceOfLog;
  double qSum = 0.0;
  double lnModulusSum = 0.0;
  std::vector<linalg::BranchedEigenvalue> eigenvalues;
};

struct ChernData {
  int c1 = 0;
  double rawSum = 0.0;  // q-sum total before rounding; c1 = -round(rawSum)
  std::array<PoleData, 3> perPole;
  // round(sum q at 0 and 1 - sum q of M0 M1), then one per infinity
  // eigenvalue that is not 1; c1 = -(sum of wrap integers).
  std::vector<int> wrapIntegers;
  double lnModulusTotal = 0.0;  // should vanish (determinant coherence)
  bool branchSensitive = false;
  bool lowConfidence = false;
  // All angles came from exactly verified rational data.
  bool exact = false;
  std::optional<std::string> exactQSum;  // "p/s" total when exact
};

// c1 = -sum over poles of Tr(Res) with residues the principal logs of
// M0, M1 and (M0 M1)^-1. Throws NonIntegerChern.
ChernData chernClass(const MonodromyRep& rep, const Tolerances& tol = {});

struct BoundReport {
  std::string name;
  std::string statement;
  bool applicable = true;
  bool holds = true;
  bool conjectural = false;
};

// Proven bounds for n = 2 (a violation throws ProvenBoundViolated unless
// `throwOnViolation` is false); the n = 3 window is reported as conjectural.
std::vector<BoundReport> chernBoundCheck(const MonodromyRep& rep, const ChernData& data,
                                         const Tolerances& tol = {}, bool throwOnViolation = true);

// Both generators unitary within eps_recon.
bool unitarityTest(const MonodromyRep& rep, const Tolerances& tol = {});

}  // namespace rootsplit
