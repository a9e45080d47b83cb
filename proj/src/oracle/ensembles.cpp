#include "oracle/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "core/error.hpp"

namespace rootsplit::oracle {

namespace {

using exact::ExactEntry;
using exact::ExactMatrix;

// Upper triangular D U with D of roots of unity and U unipotent with small
// integer entries; every entry is a single term modulus * e^{2 pi i p/s}.
ExactMatrix rationalTriangular(Rng& rng, int n, int maxDen) {
  ExactMatrix m;
  m.n = n;
  m.entries.assign(static_cast<std::size_t>(n * n), ExactEntry::fromComplex(0, 0));
  for (int i = 0; i < n; ++i) {
    const int s = rng.uniformInt(1, maxDen);
    const Angle d(rng.uniformInt(0, s - 1), s);
    m.entries[i * n + i] = ExactEntry::fromAngle(d);
    for (int j = i + 1; j < n; ++j) {
      const int k = rng.uniformInt(-2, 2);
      if (k == 0) continue;
      m.entries[i * n + j] = ExactEntry::fromAngle(k > 0 ? d : d + Angle(1, 2), std::abs(k));
    }
  }
  return m;
}

// P D with P a permutation and D of roots of unity.
ExactMatrix rationalMonomial(Rng& rng, int n, int maxDen) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.uniformInt(0, i)]);
  ExactMatrix m;
  m.n = n;
  m.entries.assign(static_cast<std::size_t>(n * n), ExactEntry::fromComplex(0, 0));
  for (int j = 0; j < n; ++j) {
    const int s = rng.uniformInt(1, maxDen);
    m.entries[perm[j] * n + j] = ExactEntry::fromAngle(Angle(rng.uniformInt(0, s - 1), s));
  }
  return m;
}

// Conjugation by a permutation keeps entries single terms.
ExactMatrix permuted(const ExactMatrix& a, Rng& rng) {
  const int n = a.n;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.uniformInt(0, i)]);
  ExactMatrix m = a;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.entries[perm[i] * n + perm[j]] = a.at(i, j);
  return m;
}

ExactMatrix rationalMatrix(Rng& rng, int n, int maxDen) {
  if (rng.uniformInt(0, 1) == 0) return permuted(rationalTriangular(rng, n, maxDen), rng);
  return rationalMonomial(rng, n, maxDen);
}

Matrix invertibleGeneric(Rng& rng, int n) {
  for (;;) {
    Matrix m = genericMatrix(rng, n);
    if (std::abs(linalg::determinant(m)) > 1e-6) return m;
  }
}

}  // namespace

const char* ensembleName(Ensemble e) {
  switch (e) {
    case Ensemble::Generic:
      return "generic";
    case Ensemble::Unitary:
      return "unitary";
    case Ensemble::RationalAngle:
      return "rationalAngle";
    case Ensemble::BlockUpperTriangular:
      return "blockUpperTriangular";
    case Ensemble::Decomposable:
      return "decomposable";
  }
  return "unknown";
}

std::optional<Ensemble> parseEnsemble(const std::string& name) {
  for (Ensemble e : {Ensemble::Generic, Ensemble::Unitary, Ensemble::RationalAngle, Ensemble::BlockUpperTriangular,
                     Ensemble::Decomposable})
    if (name == ensembleName(e)) return e;
  return std::nullopt;
}

Matrix genericMatrix(Rng& rng, int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rng.disk();
  return m;
}

Matrix unitaryMatrix(Rng& rng, int n) {
  Matrix z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) z(i, j) = rng.complexNormal();
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return q;
}

Matrix conjugator(Rng& rng, int n, double maxCond) {
  for (;;) {
    Matrix c = genericMatrix(rng, n);
    if (linalg::conditionNumber(c) <= maxCond) return c;
  }
}

Sample drawSample(const SampleSpec& spec, std::uint64_t index) {
  Rng rng = Rng::forSample(spec.seed, index);
  const int n = spec.dim;
  if (n < 1 || n > 3) throw Error(ErrorCode::DimensionError, "sample dimension must be 1, 2 or 3");
  Sample s;
  s.label = std::string(ensembleName(spec.ensemble)) + "-" + std::to_string(n) + "-" + std::to_string(index);
  switch (spec.ensemble) {
    case Ensemble::Generic:
      s.m0 = invertibleGeneric(rng, n);
      s.m1 = invertibleGeneric(rng, n);
      break;
    case Ensemble::Unitary:
      s.m0 = unitaryMatrix(rng, n);
      s.m1 = unitaryMatrix(rng, n);
      break;
    case Ensemble::RationalAngle: {
      ExactMatrix a = rationalMatrix(rng, n, spec.maxDenominator);
      ExactMatrix b = rationalMatrix(rng, n, spec.maxDenominator);
      s.m0 = a.toMatrix();
      s.m1 = b.toMatrix();
      s.exact0 = std::move(a);
      s.exact1 = std::move(b);
      break;
    }
    case Ensemble::BlockUpperTriangular: {
      if (n < 2) throw Error(ErrorCode::DimensionError, "planted reducibility needs n >= 2");
      const int k = n == 2 ? 1 : 1 + static_cast<int>(index % 2);
      Matrix b0 = invertibleGeneric(rng, n);
      Matrix b1 = invertibleGeneric(rng, n);
      for (Matrix* b : {&b0, &b1}) {
        b->bottomLeftCorner(n - k, k).setZero();
        while (std::abs(linalg::determinant(*b)) <= 1e-6) {
          Matrix fresh = invertibleGeneric(rng, n);
          fresh.bottomLeftCorner(n - k, k).setZero();
          *b = fresh;
        }
      }
      const Matrix c = conjugator(rng, n);
      const Matrix ci = linalg::inverse(c);
      s.m0 = c * b0 * ci;
      s.m1 = c * b1 * ci;
      s.plantedSubDim = k;
      break;
    }
    case Ensemble::Decomposable: {
      std::vector<int> split = spec.split;
      if (split.empty()) split.assign(static_cast<std::size_t>(n), 1);
      if (std::accumulate(split.begin(), split.end(), 0) != n)
        throw Error(ErrorCode::InvalidArgument, "decomposable split must add up to the dimension");
      for (std::size_t p = 0; p < split.size(); ++p)
        s.parts.emplace_back(invertibleGeneric(rng, split[p]), invertibleGeneric(rng, split[p]),
                             s.label + "/part" + std::to_string(p));
      const MonodromyRep sum = directSum(s.parts);
      const Matrix c = conjugator(rng, n);
      const Matrix ci = linalg::inverse(c);
      s.m0 = c * sum.m0() * ci;
      s.m1 = c * sum.m1() * ci;
      break;
    }
  }
  return s;
}

}  // namespace rootsplit::oracle
