#pragma once

#include <complex>

#include <Eigen/Dense>

namespace rootsplit {

using Complex = std::complex<double>;

// Dense complex matrices of dimension at most 3 (6 rows for stacked systems).
// The fixed maximum sizes keep every temporary on the stack.
using Matrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, 3, 3>;
using Vector = Eigen::Matrix<Complex, Eigen::Dynamic, 1, Eigen::ColMajor, 3, 1>;
using TallMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, 6, 3>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

namespace linalg {

Complex determinant(const Matrix& a);

// Adjugate-based inverse. Exact zeros of triangular inputs stay exact.
Matrix inverse(const Matrix& a);

Matrix identity(int n);

double spectralNorm(const Matrix& a);

// 2-norm condition number; infinity for a numerically singular matrix.
double conditionNumber(const Matrix& a);

// Numerical rank with singular values at or below rel * sigma_max treated as
// zero (and everything zero when sigma_max itself is at or below rel).
int rank(const Matrix& a, double rel);

// Orthonormal basis (as columns) of the null space of a tall system, using
// an absolute singular-value threshold.
Matrix nullSpace(const TallMatrix& a, double threshold);

// Orthonormal basis of a subspace, preferring canonical basis vectors: each
// e_i is projected onto the subspace and the largest remaining projections
// are kept (Gram-Schmidt). A subspace that contains e_i yields e_i exactly.
Matrix canonicalBasis(const Matrix& subspace);

// Orthonormal basis of the orthogonal complement of the column span.
Matrix orthogonalComplement(const Matrix& columns);

bool allFinite(const Matrix& a);

}  // namespace linalg
}  // namespace rootsplit
