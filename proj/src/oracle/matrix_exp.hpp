#pragma once

#include "linalg/matrix.hpp"

namespace rootsplit::oracle {

// Scaling and squaring with a truncated Taylor series; shares no code with
// the logarithm so it can check it.
Matrix matrixExp(const Matrix& a);

}  // namespace rootsplit::oracle
