#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "core/tolerances.hpp"
#include "linalg/angle.hpp"
#include "linalg/matrix.hpp"

namespace rootsplit::exact {

// One matrix entry as given in an input document: either an exact dyadic
// complex number (doubles convert to rationals without loss) or
// modulus * e^{2 pi i angle}.
struct ExactEntry {
  mpq_class re = 0;
  mpq_class im = 0;
  std::optional<Angle> angle;
  mpq_class modulus = 1;

  static ExactEntry fromComplex(double re, double im);
  static ExactEntry fromAngle(const Angle& a, double modulus = 1.0);
  Complex toComplex() const;
};

struct ExactMatrix {
  int n = 0;
  std::vector<ExactEntry> entries;  // row-major

  const ExactEntry& at(int i, int j) const { return entries[static_cast<std::size_t>(i * n + j)]; }
  Matrix toMatrix() const;
};

// Verified rational eigen-angles per pole (0, 1, infinity), with
// multiplicity. Eigenvalues that are not provably roots of unity are absent
// from the pools; `complete[p]` says whether the pool covers pole p fully.
struct ExactSpectra {
  std::array<std::vector<Angle>, 3> angles;
  std::array<bool, 3> complete{false, false, false};

  bool allComplete() const { return complete[0] && complete[1] && complete[2]; }
};

// Recognizes roots of unity among the floating eigenvalues of M0, M1 and
// M0 M1 and confirms each one (with its multiplicity) by exact evaluation of
// the characteristic polynomial and its derivatives in a cyclotomic field.
// Returns nothing, with a note, when the field needed is too large.
std::optional<ExactSpectra> exactSpectra(const ExactMatrix& m0, const ExactMatrix& m1,
                                         std::string* note = nullptr);

}  // namespace rootsplit::exact
