#include "linalg/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "core/error.hpp"

namespace rootsplit::linalg {

namespace {

// Monic characteristic polynomial coefficients, highest degree first after
// the leading 1: lambda^n + c[0] lambda^{n-1} + ... + c[n-1].
std::vector<Complex> charPoly(const Matrix& a) {
  const int n = static_cast<int>(a.rows());
  if (n == 1) return {-a(0, 0)};
  if (n == 2) return {-(a(0, 0) + a(1, 1)), determinant(a)};
  const Complex tr = a.trace();
  const Complex minors = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0) + a(0, 0) * a(2, 2) -
                         a(0, 2) * a(2, 0) + a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1);
  return {-tr, minors, -determinant(a)};
}

Complex evalPoly(const std::vector<Complex>& c, Complex x, Complex* deriv) {
  Complex p = 1.0;
  Complex dp = 0.0;
  for (const Complex& ci : c) {
    dp = dp * x + p;
    p = p * x + ci;
  }
  if (deriv) *deriv = dp;
  return p;
}

std::vector<Complex> quadraticRoots(Complex b, Complex c) {
  // x^2 + b x + c; pick the sign that avoids cancellation.
  Complex disc = std::sqrt(b * b - 4.0 * c);
  if (std::real(std::conj(b) * disc) < 0.0) disc = -disc;
  const Complex q = -0.5 * (b + disc);
  if (q == Complex(0.0)) return {0.0, 0.0};
  return {q, c / q};
}

std::vector<Complex> cubicRoots(Complex a, Complex b, Complex c) {
  // x^3 + a x^2 + b x + c with x = y - a/3: y^3 + p y + q.
  const Complex p = b - a * a / 3.0;
  const Complex q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
  const Complex shift = -a / 3.0;
  Complex disc = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
  Complex u3 = -q / 2.0 + disc;
  const Complex alt = -q / 2.0 - disc;
  if (std::abs(alt) > std::abs(u3)) u3 = alt;
  if (std::abs(u3) == 0.0) return {shift, shift, shift};
  const Complex u = std::pow(u3, 1.0 / 3.0);
  const Complex w(-0.5, std::sqrt(3.0) / 2.0);
  std::vector<Complex> roots;
  Complex uk = u;
  for (int k = 0; k < 3; ++k) {
    roots.push_back(uk - p / (3.0 * uk) + shift);
    uk *= w;
  }
  return roots;
}

double spectralScale(const std::vector<Complex>& roots) {
  double s = 0.0;
  for (const Complex& r : roots) s = std::max(s, std::abs(r));
  return s;
}

}  // namespace

std::vector<Complex> characteristicRoots(const Matrix& a) {
  const int n = static_cast<int>(a.rows());
  if (n < 1 || n > 3 || a.cols() != n)
    throw Error(ErrorCode::DimensionError, "eigenvalues: matrix must be square of size 1, 2 or 3");
  if (n == 1) return {a(0, 0)};
  bool upper = true, lower = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i > j && a(i, j) != Complex(0.0)) upper = false;
      if (i < j && a(i, j) != Complex(0.0)) lower = false;
    }
  if (upper || lower) {
    std::vector<Complex> diag;
    for (int i = 0; i < n; ++i) diag.push_back(a(i, i));
    return diag;
  }
  const std::vector<Complex> c = charPoly(a);
  std::vector<Complex> roots;
  if (n == 2)
    roots = quadraticRoots(c[0], c[1]);
  else
    roots = cubicRoots(c[0], c[1], c[2]);

  const double scale = std::max(1.0, spectralScale(roots));
  for (Complex& r : roots) {
    for (int it = 0; it < 4; ++it) {
      Complex dp;
      const Complex f = evalPoly(c, r, &dp);
      if (std::abs(dp) < 1e-6 * scale * scale) break;  // near a multiple root
      const Complex next = r - f / dp;
      if (std::abs(evalPoly(c, next, nullptr)) >= std::abs(f)) break;
      r = next;
    }
  }
  return roots;
}

double principalAngle(Complex z) {
  double q = std::atan2(z.imag(), z.real()) / kTwoPi;
  if (q < 0.0) q += 1.0;
  if (q >= 1.0) q -= 1.0;
  return q;
}

std::vector<BranchedEigenvalue> eigenvalues(const Matrix& a, const Tolerances& tol,
                                            std::span<const Angle> exactPool) {
  if (!allFinite(a)) throw Error(ErrorCode::InvalidArgument, "eigenvalues: non-finite entry");
  const int n = static_cast<int>(a.rows());
  if (n < 1 || n > 3 || a.cols() != n)
    throw Error(ErrorCode::DimensionError, "eigenvalues: matrix must be square of size 1, 2 or 3");
  if (std::abs(determinant(a)) <= tol.singular)
    throw Error(ErrorCode::SingularMatrix, "eigenvalues: |det A| <= eps_sing");

  std::vector<Complex> roots = characteristicRoots(a);
  const double radius = spectralScale(roots);

  // Union-find clustering on pairwise distances.
  std::vector<int> parent(roots.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (std::abs(roots[i] - roots[j]) <= tol.cluster * radius)
        parent[find(static_cast<int>(j))] = find(static_cast<int>(i));

  std::vector<BranchedEigenvalue> out;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (find(static_cast<int>(i)) != static_cast<int>(i)) continue;
    Complex sum = 0.0;
    int mult = 0;
    for (std::size_t j = 0; j < roots.size(); ++j)
      if (find(static_cast<int>(j)) == static_cast<int>(i)) {
        sum += roots[j];
        ++mult;
      }
    BranchedEigenvalue ev;
    ev.value = sum / static_cast<double>(mult);
    ev.multiplicity = mult;
    ev.modulus = std::abs(ev.value);

    std::optional<Angle> match;
    if (std::abs(ev.modulus - 1.0) < 1e-6) {
      double best = 1e-6;
      for (const Angle& cand : exactPool) {
        const Complex unit = std::polar(1.0, kTwoPi * cand.value());
        const double d = std::abs(ev.value / ev.modulus - unit);
        if (d < best) {
          best = d;
          match = cand;
        }
      }
    }
    if (match) {
      ev.exactAngle = match;
      ev.angle = match->value();
    } else {
      double q = principalAngle(ev.value);
      if (q > 1.0 - tol.branch || (q > 0.0 && q < tol.branch)) {
        q = 0.0;
        ev.branchSensitive = true;
      }
      ev.angle = q;
    }
    out.push_back(ev);
  }
  std::sort(out.begin(), out.end(), [](const BranchedEigenvalue& x, const BranchedEigenvalue& y) {
    if (x.angle != y.angle) return x.angle < y.angle;
    return x.modulus < y.modulus;
  });
  return out;
}

}  // namespace rootsplit::linalg
