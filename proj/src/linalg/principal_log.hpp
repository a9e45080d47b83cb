#pragma once

#include <span>
#include <vector>

#include "linalg/jordan.hpp"

namespace rootsplit::linalg {

struct PrincipalLog {
  Matrix L;
  std::vector<BranchedEigenvalue> eigenvalues;
  Complex traceOfLog;  // sum of (ln r + 2 pi i q) with multiplicity
  bool lowConfidence = false;
};

// Principal matrix logarithm: each Jordan block with eigenvalue
// r e^{2 pi i q} maps to (ln r + 2 pi i q) I + log(I + N / lambda).
PrincipalLog principalLog(const Matrix& a, const Tolerances& tol = {},
                          std::span<const Angle> exactPool = {});

// Sum of (ln r + 2 pi i q) over an eigenvalue list, with multiplicity.
Complex traceOfLog(std::span<const BranchedEigenvalue> eigenvalues);

}  // namespace rootsplit::linalg
