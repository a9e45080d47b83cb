#include "linalg/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "core/error.hpp"

namespace rootsplit::linalg {

Complex determinant(const Matrix& a) {
  switch (a.rows()) {
    case 1:
      return a(0, 0);
    case 2:
      return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    case 3:
      return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
             a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
             a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
    default:
      throw Error(ErrorCode::DimensionError, "determinant: dimension must be 1, 2 or 3");
  }
}

Matrix inverse(const Matrix& a) {
  const Complex det = determinant(a);
  if (det == Complex(0.0))
    throw Error(ErrorCode::SingularMatrix, "inverse: matrix is singular");
  const int n = static_cast<int>(a.rows());
  Matrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1.0;
  } else if (n == 2) {
    adj(0, 0) = a(1, 1);
    adj(0, 1) = -a(0, 1);
    adj(1, 0) = -a(1, 0);
    adj(1, 1) = a(0, 0);
  } else {
    adj(0, 0) = a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1);
    adj(0, 1) = a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2);
    adj(0, 2) = a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1);
    adj(1, 0) = a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2);
    adj(1, 1) = a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0);
    adj(1, 2) = a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2);
    adj(2, 0) = a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0);
    adj(2, 1) = a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1);
    adj(2, 2) = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  }
  return adj / det;
}

Matrix identity(int n) { return Matrix::Identity(n, n); }

double spectralNorm(const Matrix& a) {
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues()(0);
}

double conditionNumber(const Matrix& a) {
  Eigen::JacobiSVD<Matrix> svd(a);
  const auto& s = svd.singularValues();
  const double smin = s(s.size() - 1);
  if (smin <= 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / smin;
}

int rank(const Matrix& a, double rel) {
  Eigen::JacobiSVD<Matrix> svd(a);
  const auto& s = svd.singularValues();
  const double smax = s(0);
  if (smax <= rel) return 0;
  int r = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > rel * smax) ++r;
  return r;
}

Matrix nullSpace(const TallMatrix& a, double threshold) {
  const int cols = static_cast<int>(a.cols());
  Eigen::JacobiSVD<TallMatrix> svd(a, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  // Singular values beyond the row count are implicitly zero.
  std::vector<int> nullIdx;
  for (int i = 0; i < cols; ++i) {
    const double si = i < s.size() ? s(i) : 0.0;
    if (si <= threshold) nullIdx.push_back(i);
  }
  Matrix basis(cols, static_cast<int>(nullIdx.size()));
  for (std::size_t k = 0; k < nullIdx.size(); ++k)
    basis.col(static_cast<int>(k)) = svd.matrixV().col(nullIdx[k]);
  return basis;
}

Matrix canonicalBasis(const Matrix& subspace) {
  const int n = static_cast<int>(subspace.rows());
  const int k = static_cast<int>(subspace.cols());
  Matrix q = subspace.householderQr().householderQ() * Matrix::Identity(n, k);
  Matrix out(n, k);
  std::vector<bool> used(n, false);
  for (int c = 0; c < k; ++c) {
    int best = -1;
    double bestNorm = -1.0;
    Vector bestVec;
    for (int i = 0; i < n; ++i) {
      if (used[i]) continue;
      Vector e = Vector::Zero(n);
      e(i) = 1.0;
      Vector p = q * (q.adjoint() * e);
      for (int j = 0; j < c; ++j) p -= out.col(j) * (out.col(j).adjoint() * p)(0);
      const double norm = p.norm();
      if (norm > bestNorm + 1e-12) {
        best = i;
        bestNorm = norm;
        bestVec = p;
      }
    }
    used[best] = true;
    out.col(c) = bestVec / bestNorm;
  }
  // Snap values that are zero up to rounding so canonical vectors come out exact.
  for (int i = 0; i < out.size(); ++i) {
    if (std::abs(out.data()[i].real()) < 1e-15) out.data()[i].real(0.0);
    if (std::abs(out.data()[i].imag()) < 1e-15) out.data()[i].imag(0.0);
  }
  return out;
}

Matrix orthogonalComplement(const Matrix& columns) {
  const int n = static_cast<int>(columns.rows());
  const int k = static_cast<int>(columns.cols());
  TallMatrix adj = columns.adjoint();
  Matrix perp = nullSpace(adj, 1e-10 * std::max(1.0, columns.norm()));
  if (perp.cols() != n - k)
    throw Error(ErrorCode::Internal, "orthogonalComplement: columns are not independent");
  return canonicalBasis(perp);
}

bool allFinite(const Matrix& a) {
  for (int i = 0; i < a.size(); ++i)
    if (!std::isfinite(a.data()[i].real()) || !std::isfinite(a.data()[i].imag())) return false;
  return true;
}

}  // namespace rootsplit::linalg
