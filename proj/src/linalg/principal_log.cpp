#include "linalg/principal_log.hpp"

namespace rootsplit::linalg {

Complex traceOfLog(std::span<const BranchedEigenvalue> eigenvalues) {
  Complex t = 0.0;
  for (const BranchedEigenvalue& ev : eigenvalues) t += static_cast<double>(ev.multiplicity) * ev.log();
  return t;
}

PrincipalLog principalLog(const Matrix& a, const Tolerances& tol, std::span<const Angle> exactPool) {
  const JordanDecomposition jd = jordanForm(a, tol, exactPool);
  const int n = static_cast<int>(a.rows());
  Matrix logJ = Matrix::Zero(n, n);
  int offset = 0;
  for (const JordanBlock& b : jd.blocks) {
    const BranchedEigenvalue& ev = jd.eigenvalues[b.eigenIndex];
    const int s = b.size;
    Matrix block = ev.log() * identity(s);
    // N / lambda is the superdiagonal shift scaled by 1/lambda.
    Matrix shift = Matrix::Zero(s, s);
    for (int j = 0; j + 1 < s; ++j) shift(j, j + 1) = 1.0 / ev.value;
    Matrix term = shift;
    for (int k = 1; k < s; ++k) {
      const double sign = (k % 2 == 1) ? 1.0 : -1.0;
      block += (sign / k) * term;
      term = term * shift;
    }
    logJ.block(offset, offset, s, s) = block;
    offset += s;
  }

  PrincipalLog out;
  out.L = jd.P * logJ * inverse(jd.P);
  out.eigenvalues = jd.eigenvalues;
  out.traceOfLog = traceOfLog(jd.eigenvalues);
  out.lowConfidence = jd.lowConfidence;
  return out;
}

}  // namespace rootsplit::linalg
