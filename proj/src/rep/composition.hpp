#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rep/rep.hpp"

namespace rootsplit {

struct InvariantSubspace {
  int dim = 0;
  Matrix basis;           // n x dim, orthonormal columns
  double residual = 0.0;  // relative invariance residual
  bool nonIsolated = false;
};

// Common invariant subspaces of dimension k (1 <= k < n). Lines come from a
// common-eigenvector search; (n-1)-planes are annihilators of common
// eigenvectors of the transposed pair. Non-isolated families are returned as
// canonical representatives with nonIsolated set.
std::vector<InvariantSubspace> commonInvariantSubspaces(const MonodromyRep& rep, int k,
                                                        const Tolerances& tol = {});

// Common eigenvectors of (M0^T, M1^T), each normalized.
std::vector<InvariantSubspace> transposedCommonEigenvectors(const MonodromyRep& rep,
                                                            const Tolerances& tol = {});

enum class CompositionKind { Irreducible, Sub1, Sub2, Both, Decomposable };

const char* kindName(CompositionKind k);

// 0 -> sub -> rep -> quotient -> 0, realized by a basis change T whose
// first subDim columns span the invariant subspace.
struct ExactSequence {
  int subDim = 0;
  Matrix basisChange;
  MonodromyRep sub;
  MonodromyRep quotient;
  double blockResidual = 0.0;  // relative size of the lower-left blocks
};

struct CompositionData {
  CompositionKind kind = CompositionKind::Irreducible;
  std::vector<InvariantSubspace> lines;
  std::vector<InvariantSubspace> hyperplanes;  // dimension n-1 (only when n = 3)
  // Sequences with an (n-1)-dimensional sub first, then 1-dimensional subs.
  std::vector<ExactSequence> sequences;
  // For decomposable reps: the summands, 1-dimensional first.
  std::vector<MonodromyRep> summands;
  Matrix basisChange;  // of the preferred sequence or decomposition
  std::optional<Complex> sigma;
  bool borderline = false;
  bool nonIsolated = false;
  std::vector<std::string> notes;
};

CompositionData analyze(const MonodromyRep& rep, const Tolerances& tol = {});

// Dimension-2 certificate: sigma for both eigenvalue pairings, and the
// eigenvalue-free form det(M0 M1 - M1 M0) = -sigma_a sigma_b.
struct SigmaCertificate {
  Complex sigma;            // the pairing of smaller magnitude
  double relativeCommutator;  // |det[M0, M1]| / (||M0|| ||M1||)^2
};
SigmaCertificate sigmaCertificate(const MonodromyRep& rep, const Tolerances& tol = {});

// True iff there is no common invariant subspace. For n = 2 the search is
// cross-checked against the sigma certificate; a clear disagreement throws
// InconsistentCertificate.
bool isIrreducible(const MonodromyRep& rep, const Tolerances& tol = {});

// Builds the representation gamma_0 -> S, gamma_1 -> T with
// T = diag(tEigenvalues), after checking S^2 = I and (ST)^3 = I.
MonodromyRep buildFromPSL2Z(const std::vector<Complex>& tEigenvalues, const Matrix& sMatrix,
                            const Tolerances& tol = {}, std::string label = {});

}  // namespace rootsplit
