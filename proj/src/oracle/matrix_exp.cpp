#include "oracle/matrix_exp.hpp"

#include <cmath>

namespace rootsplit::oracle {

Matrix matrixExp(const Matrix& a) {
  const int n = static_cast<int>(a.rows());
  double norm = 0.0;  // max row sum, cheap upper bound for scaling
  for (int i = 0; i < n; ++i) norm = std::max(norm, a.row(i).cwiseAbs().sum());
  int squarings = 0;
  while (norm > 0.5) {
    norm /= 2.0;
    ++squarings;
  }
  const Matrix x = a / std::ldexp(1.0, squarings);
  Matrix term = Matrix::Identity(n, n);
  Matrix sum = term;
  for (int k = 1; k <= 20; ++k) {
    term = term * x / static_cast<double>(k);
    sum += term;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

}  // namespace rootsplit::oracle
