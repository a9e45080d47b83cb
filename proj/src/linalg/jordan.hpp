#pragma once

#include <span>
#include <vector>

#include "linalg/eigen.hpp"

namespace rootsplit::linalg {

struct JordanBlock {
  int eigenIndex = 0;  // into JordanDecomposition::eigenvalues
  int size = 1;
};

struct JordanDecomposition {
  Matrix P;
  Matrix J;
  std::vector<BranchedEigenvalue> eigenvalues;
  std::vector<JordanBlock> blocks;
  double condition = 1.0;          // cond(P)
  double reconstructionError = 0;  // ||A - P J P^-1|| / ||A||
  bool lowConfidence = false;      // cond(P) > condMax or reconstruction above eps_recon

  std::vector<int> blockSizes() const;
};

// A = P J P^-1 with Jordan blocks ordered by (q, r) and, within one
// eigenvalue, larger blocks first. Throws SingularMatrix.
JordanDecomposition jordanForm(const Matrix& a, const Tolerances& tol = {},
                               std::span<const Angle> exactPool = {});

}  // namespace rootsplit::linalg
