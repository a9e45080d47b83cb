#include "linalg/jordan.hpp"

#include <algorithm>
#include <cmath>

namespace rootsplit::linalg {

namespace {

Matrix power(const Matrix& a, int k) {
  Matrix r = identity(static_cast<int>(a.rows()));
  for (int i = 0; i < k; ++i) r = r * a;
  return r;
}

// Null space of `a` with a prescribed dimension: the right singular vectors
// of the `nullity` smallest singular values.
Matrix nullSpaceOfDim(const Matrix& a, int nullity) {
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeFullV);
  return svd.matrixV().rightCols(nullity);
}

int nullityAt(const Matrix& a, double threshold) {
  Eigen::JacobiSVD<Matrix> svd(a);
  int k = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) <= threshold) ++k;
  return k;
}

// Component of v orthogonal to the column span of `basis` (may be empty).
Vector residual(const Vector& v, const Matrix& basis) {
  if (basis.cols() == 0) return v;
  Eigen::ColPivHouseholderQR<Matrix> qr(basis);
  const int r = static_cast<int>(qr.rank());
  Matrix q = qr.householderQ();
  Matrix qr_ = q.leftCols(r);
  return v - qr_ * (qr_.adjoint() * v);
}

Matrix appendColumns(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() == 0 ? b.rows() : a.rows(), a.cols() + b.cols());
  if (a.cols() > 0) out.leftCols(a.cols()) = a;
  if (b.cols() > 0) out.rightCols(b.cols()) = b;
  return out;
}

}  // namespace

std::vector<int> JordanDecomposition::blockSizes() const {
  std::vector<int> out;
  for (const JordanBlock& b : blocks) out.push_back(b.size);
  return out;
}

JordanDecomposition jordanForm(const Matrix& a, const Tolerances& tol,
                               std::span<const Angle> exactPool) {
  const int n = static_cast<int>(a.rows());
  JordanDecomposition jd;
  jd.eigenvalues = eigenvalues(a, tol, exactPool);
  jd.P = Matrix::Zero(n, n);
  jd.J = Matrix::Zero(n, n);
  const double scale = std::max(1.0, spectralNorm(a));

  int col = 0;
  for (std::size_t e = 0; e < jd.eigenvalues.size(); ++e) {
    const BranchedEigenvalue& ev = jd.eigenvalues[e];
    const int m = ev.multiplicity;
    const Matrix nmat = a - ev.value * identity(n);

    // nullity[k] = dim ker N^k, forced monotone and capped so that the
    // generalized eigenspace has exactly the algebraic multiplicity.
    std::vector<int> nullity(m + 1, 0);
    for (int k = 1; k <= m; ++k) {
      const int raw = nullityAt(power(nmat, k), tol.rank * std::pow(scale, k));
      nullity[k] = std::min(m, std::max(raw, nullity[k - 1] + 1));
    }
    nullity[m] = m;

    // Number of blocks of size exactly s.
    std::vector<int> sizes;
    for (int s = m; s >= 1; --s) {
      const int atLeastS = nullity[s] - nullity[s - 1];
      const int atLeastNext = s < m ? nullity[s + 1] - nullity[s] : 0;
      for (int c = 0; c < atLeastS - atLeastNext; ++c) sizes.push_back(s);
    }

    Matrix chosen(n, 0);
    for (int s : sizes) {
      const Matrix ker = nullSpaceOfDim(power(nmat, s), nullity[s]);
      const Matrix lower = s > 1 ? nullSpaceOfDim(power(nmat, s - 1), nullity[s - 1]) : Matrix(n, 0);
      const Matrix avoid = appendColumns(lower, chosen);
      Vector best = ker.col(0);
      double bestNorm = -1.0;
      for (Eigen::Index c = 0; c < ker.cols(); ++c) {
        const Vector r = residual(ker.col(c), avoid);
        if (r.norm() > bestNorm) {
          bestNorm = r.norm();
          best = r;
        }
      }
      best.normalize();
      // Chain N^{s-1} v, ..., N v, v.
      Matrix chain(n, s);
      Vector v = best;
      for (int j = s - 1; j >= 0; --j) {
        chain.col(j) = v;
        v = nmat * v;
      }
      for (int j = 0; j < s; ++j) {
        jd.P.col(col + j) = chain.col(j);
        jd.J(col + j, col + j) = ev.value;
        if (j + 1 < s) jd.J(col + j, col + j + 1) = 1.0;
      }
      chosen = appendColumns(chosen, chain);
      jd.blocks.push_back({static_cast<int>(e), s});
      col += s;
    }
  }

  jd.condition = conditionNumber(jd.P);
  if (std::isfinite(jd.condition) && std::abs(determinant(jd.P)) > 0.0) {
    const Matrix recon = jd.P * jd.J * inverse(jd.P);
    jd.reconstructionError = spectralNorm(a - recon) / spectralNorm(a);
  } else {
    jd.reconstructionError = INFINITY;
  }
  jd.lowConfidence = !(jd.condition <= tol.condMax) || !(jd.reconstructionError < tol.recon);
  return jd;
}

}  // namespace rootsplit::linalg
