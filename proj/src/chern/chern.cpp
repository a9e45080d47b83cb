#include "chern/chern.hpp"

#include <cmath>
#include <sstream>

#include "core/error.hpp"
#include "rep/composition.hpp"

namespace rootsplit {

ChernData chernClass(const MonodromyRep& rep, const Tolerances& tol) {
  ChernData data;
  bool allExact = true;
  RationalSum exactSum;
  for (int p = 0; p < 3; ++p) {
    PoleData& pd = data.perPole[static_cast<std::size_t>(p)];
    pd.pole = p;
    const linalg::PrincipalLog log = linalg::principalLog(rep.local(p), tol, rep.exactPool(p));
    pd.eigenvalues = log.eigenvalues;
    pd.traceOfLog = log.traceOfLog;
    data.lowConfidence = data.lowConfidence || log.lowConfidence;
    for (const auto& ev : log.eigenvalues) {
      pd.qSum += ev.multiplicity * ev.angle;
      pd.lnModulusSum += ev.multiplicity * std::log(ev.modulus);
      data.branchSensitive = data.branchSensitive || ev.branchSensitive;
      if (ev.exactAngle)
        exactSum.add(*ev.exactAngle, ev.multiplicity);
      else
        allExact = false;
    }
    data.rawSum += pd.qSum;
    data.lnModulusTotal += pd.lnModulusSum;
  }

  if (std::abs(data.rawSum - std::round(data.rawSum)) > tol.integer) {
    std::ostringstream msg;
    msg << "q-sum " << data.rawSum << " is not within eps_int of an integer; try exact angle input";
    throw Error(ErrorCode::NonIntegerChern, msg.str());
  }
  data.c1 = -static_cast<int>(std::lround(data.rawSum));

  if (allExact) {
    if (!exactSum.isInteger())
      throw Error(ErrorCode::NonIntegerChern, "exact q-sum is not an integer");
    data.exact = true;
    const auto exactC1 = -exactSum.num / exactSum.den;
    if (exactC1 != data.c1) {
      data.c1 = static_cast<int>(exactC1);
      data.branchSensitive = true;
    }
    data.exactQSum = std::to_string(exactSum.num / exactSum.den);
  }

  // Diagnostic wrap integers: angles add modulo 1 under multiplication of
  // determinants, the integer parts are what the three poles disagree by.
  const auto prodEig = linalg::eigenvalues(rep.m0() * rep.m1(), tol);
  double prodQ = 0.0;
  for (const auto& ev : prodEig) prodQ += ev.multiplicity * ev.angle;
  const int a = static_cast<int>(std::lround(data.perPole[0].qSum + data.perPole[1].qSum - prodQ));
  data.wrapIntegers.push_back(a);
  int infWraps = 0;
  for (const auto& ev : data.perPole[2].eigenvalues)
    if (ev.angle > 0.0)
      for (int k = 0; k < ev.multiplicity; ++k) {
        data.wrapIntegers.push_back(1);
        ++infWraps;
      }
  // A mismatch here only happens when a branch snap moved one side.
  if (a + infWraps != -data.c1) data.branchSensitive = true;
  return data;
}

std::vector<BoundReport> chernBoundCheck(const MonodromyRep& rep, const ChernData& data, const Tolerances& tol,
                                         bool throwOnViolation) {
  std::vector<BoundReport> out;
  const int n = rep.n();
  const int c1 = data.c1;
  if (n == 2) {
    BoundReport general{"chern-bound", "0 >= c1 >= -4", true, c1 <= 0 && c1 >= -4, false};
    out.push_back(general);
    const bool unitaryIrreducible = unitarityTest(rep, tol) && isIrreducible(rep, tol);
    BoundReport strict{"chern-bound-unitary-irreducible", "0 > c1 >= -4", unitaryIrreducible,
                       !unitaryIrreducible || (c1 < 0 && c1 >= -4), false};
    out.push_back(strict);
    if (throwOnViolation)
      for (const BoundReport& b : out)
        if (b.applicable && !b.holds)
          throw Error(ErrorCode::ProvenBoundViolated,
                      "c1 = " + std::to_string(c1) + " violates " + b.name + " (" + b.statement + ")");
  } else if (n == 3) {
    out.push_back({"chern-window-dim3", "-6 < c1 <= 0", true, c1 <= 0 && c1 > -6, true});
  } else {
    out.push_back({"chern-character", "0 >= c1 >= -2", true, c1 <= 0 && c1 >= -2, false});
  }
  return out;
}

bool unitarityTest(const MonodromyRep& rep, const Tolerances& tol) {
  const Matrix id = linalg::identity(rep.n());
  for (const Matrix* m : {&rep.m0(), &rep.m1()})
    if (linalg::spectralNorm(m->adjoint() * (*m) - id) >= tol.recon) return false;
  return true;
}

}  // namespace rootsplit
