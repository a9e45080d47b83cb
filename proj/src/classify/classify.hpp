#pragma once

#include <optional>
#include <vector>

#include "chern/chern.hpp"
#include "classify/splitting.hpp"
#include "rep/composition.hpp"

namespace rootsplit {

// Root of a rank-1 representation, which must lie in {0, -1, -2}.
int characterRoot(const MonodromyRep& chi, const Tolerances& tol = {});
int checkedCharacterRoot(int c1);

// True iff every quotient root exceeds every sub root by less than 2, so
// that H^1(Hom(quotient, sub)) = 0 and the extension splits.
bool extSplits(const SplittingType& subRoots, const SplittingType& quotientRoots);

// Table outcome for one short exact sequence with given sub and quotient
// roots (one side of rank 1, the other of rank 2).
SplittingResult reducibleTable(const SplittingType& sub, const SplittingType& quotient);

SplittingResult rootsDim2(const MonodromyRep& rep, const Tolerances& tol = {});
SplittingResult rootsDim3Reducible(const MonodromyRep& rep, const CompositionData& comp,
                                   const Tolerances& tol = {});
// Pure case table of the irreducible rank-3 classification.
SplittingResult rootsDim3Irreducible(int zeta);
SplittingResult rootsDim3Irreducible(const MonodromyRep& rep, const Tolerances& tol = {});

struct CandidateTree {
  std::vector<std::vector<int>> patterns;   // offsets from -xi_min, non-increasing
  std::vector<SplittingType> concrete;      // when c1 is given
  bool proven = false;                      // m = 3, d <= 3
};

CandidateTree candidateTree(int m, int d, std::optional<int> c1 = std::nullopt);

struct Classification {
  ChernData chern;
  CompositionData composition;
  SplittingResult result;
  std::vector<BoundReport> bounds;
};

// Full pipeline: Chern class, bounds, composition, roots; checks the sum
// rule and the proven ranges before returning.
Classification classify(const MonodromyRep& rep, const Tolerances& tol = {});

}  // namespace rootsplit
