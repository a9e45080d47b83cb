#pragma once

#include <optional>
#include <span>
#include <vector>

#include "core/tolerances.hpp"
#include "linalg/angle.hpp"
#include "linalg/matrix.hpp"

namespace rootsplit::linalg {

// An eigenvalue r e^{2 pi i q} with its principal-branch data, 0 <= q < 1.
struct BranchedEigenvalue {
  Complex value;
  double modulus = 1.0;
  double angle = 0.0;
  std::optional<Angle> exactAngle;
  int multiplicity = 1;
  // The computed angle was within the branch tolerance of the cut and got
  // snapped to 0; c1 may then be off by an integer unless exact data is used.
  bool branchSensitive = false;

  // Principal logarithm ln r + 2 pi i q.
  Complex log() const { return {std::log(modulus), kTwoPi * angle}; }
};

// Roots of the characteristic polynomial, with multiplicity, unclustered.
// Closed-form quadratic/cubic formulas followed by Newton polishing.
std::vector<Complex> characteristicRoots(const Matrix& a);

// Principal-branch angle of a nonzero complex number, in [0, 1).
double principalAngle(Complex z);

// Clustered eigenvalues with branch data, ordered by (angle, modulus).
// `exactPool` holds verified rational angles; a cluster whose unit-circle
// position matches one of them takes that angle exactly.
// Throws SingularMatrix when |det a| <= tol.singular.
std::vector<BranchedEigenvalue> eigenvalues(const Matrix& a, const Tolerances& tol = {},
                                            std::span<const Angle> exactPool = {});

}  // namespace rootsplit::linalg
