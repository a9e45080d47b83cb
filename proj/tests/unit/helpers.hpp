#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "linalg/matrix.hpp"
#include "rep/rep.hpp"

namespace testing {

using rootsplit::Complex;
using rootsplit::Matrix;

inline Matrix mat(std::initializer_list<std::initializer_list<Complex>> rows) {
  const int n = static_cast<int>(rows.size());
  Matrix m(n, static_cast<int>(rows.begin()->size()));
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (const Complex& v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline Complex unit(double turns) { return std::polar(1.0, rootsplit::kTwoPi * turns); }

inline Matrix diag(std::initializer_list<Complex> d) {
  const int n = static_cast<int>(d.size());
  Matrix m = Matrix::Zero(n, n);
  int i = 0;
  for (const Complex& v : d) {
    m(i, i) = v;
    ++i;
  }
  return m;
}

// The worked rank-3 example: M0 = diag(1, w^5, w) with w = e^{2 pi i / 6}.
inline rootsplit::MonodromyRep workedExample() {
  const Matrix m0 = diag({1.0, unit(5.0 / 6.0), unit(1.0 / 6.0)});
  const Matrix m1 = mat({{1.0, 1.0, 1.0}, {0.0, -1.0, 0.0}, {0.0, 0.0, -1.0}});
  return rootsplit::MonodromyRep(m0, m1, "worked");
}

inline double relErr(const Matrix& a, const Matrix& b) {
  return (a - b).norm() / std::max(1.0, b.norm());
}

}  // namespace testing
