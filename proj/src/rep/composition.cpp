#include "rep/composition.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "core/error.hpp"

namespace rootsplit {

namespace {

double invarianceResidual(const MonodromyRep& rep, const Matrix& basis) {
  double worst = 0.0;
  for (const Matrix* m : {&rep.m0(), &rep.m1()}) {
    const Matrix image = (*m) * basis;
    const Matrix r = image - basis * (basis.adjoint() * image);
    worst = std::max(worst, linalg::spectralNorm(r) / linalg::spectralNorm(*m));
  }
  return worst;
}

// Distance between equal-dimension subspaces with orthonormal bases.
double subspaceDistance(const Matrix& a, const Matrix& b) {
  const Matrix r = b - a * (a.adjoint() * b);
  return linalg::spectralNorm(r);
}

std::vector<Matrix> commonEigenvectors(const Matrix& a, const Matrix& b, const Tolerances& tol,
                                       bool* nonIsolated) {
  const int n = static_cast<int>(a.rows());
  const double scale = std::max(linalg::spectralNorm(a), linalg::spectralNorm(b));
  std::vector<Matrix> out;
  const auto eva = linalg::eigenvalues(a, tol);
  const auto evb = linalg::eigenvalues(b, tol);
  for (const auto& la : eva) {
    for (const auto& lb : evb) {
      TallMatrix t(2 * n, n);
      t.topRows(n) = a - la.value * linalg::identity(n);
      t.bottomRows(n) = b - lb.value * linalg::identity(n);
      const Matrix null = linalg::nullSpace(t, tol.invariance * scale);
      if (null.cols() == 0) continue;
      const Matrix canon = linalg::canonicalBasis(null);
      if (null.cols() > 1 && nonIsolated) *nonIsolated = true;
      for (Eigen::Index c = 0; c < canon.cols(); ++c) {
        Matrix v = canon.col(c);
        const bool dup = std::any_of(out.begin(), out.end(), [&](const Matrix& u) {
          return subspaceDistance(u, v) < tol.invariance;
        });
        if (!dup) out.push_back(v);
      }
    }
  }
  return out;
}

Matrix transposeOf(const Matrix& m) { return m.transpose(); }

Matrix joinColumns(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), a.cols() + b.cols());
  out.leftCols(a.cols()) = a;
  out.rightCols(b.cols()) = b;
  return out;
}

ExactSequence makeSequence(const MonodromyRep& rep, const Matrix& subBasis, const Tolerances& tol) {
  const int n = rep.n();
  const int k = static_cast<int>(subBasis.cols());
  const Matrix t = joinColumns(subBasis, linalg::orthogonalComplement(subBasis));
  const Matrix tinv = t.adjoint();  // t is unitary
  const Matrix a0 = tinv * rep.m0() * t;
  const Matrix a1 = tinv * rep.m1() * t;
  const double residual =
      std::max(linalg::spectralNorm(a0.bottomLeftCorner(n - k, k)) / linalg::spectralNorm(rep.m0()),
               linalg::spectralNorm(a1.bottomLeftCorner(n - k, k)) / linalg::spectralNorm(rep.m1()));
  MonodromyRep sub(a0.topLeftCorner(k, k), a1.topLeftCorner(k, k), rep.label() + "/sub", tol);
  MonodromyRep quo(a0.bottomRightCorner(n - k, n - k), a1.bottomRightCorner(n - k, n - k),
                   rep.label() + "/quotient", tol);
  sub.setExactSpectra(rep.exactSpectra());
  quo.setExactSpectra(rep.exactSpectra());
  return ExactSequence{k, t, std::move(sub), std::move(quo), residual};
}

}  // namespace

const char* kindName(CompositionKind k) {
  switch (k) {
    case CompositionKind::Irreducible:
      return "irreducible";
    case CompositionKind::Sub1:
      return "sub1";
    case CompositionKind::Sub2:
      return "sub2";
    case CompositionKind::Both:
      return "both";
    case CompositionKind::Decomposable:
      return "decomposable";
  }
  return "unknown";
}

std::vector<InvariantSubspace> transposedCommonEigenvectors(const MonodromyRep& rep, const Tolerances& tol) {
  bool nonIsolated = false;
  std::vector<InvariantSubspace> out;
  for (Matrix& w : commonEigenvectors(transposeOf(rep.m0()), transposeOf(rep.m1()), tol, &nonIsolated))
    out.push_back({1, w, 0.0, nonIsolated});
  return out;
}

std::vector<InvariantSubspace> commonInvariantSubspaces(const MonodromyRep& rep, int k, const Tolerances& tol) {
  const int n = rep.n();
  if (k < 1 || k >= n)
    throw Error(ErrorCode::DimensionError, "invariant subspace dimension must satisfy 1 <= k < n");
  std::vector<InvariantSubspace> out;
  bool nonIsolated = false;
  if (k == 1) {
    for (Matrix& v : commonEigenvectors(rep.m0(), rep.m1(), tol, &nonIsolated))
      out.push_back({1, v, invarianceResidual(rep, v), false});
  } else {
    // k = n - 1 with n = 3: annihilators of transposed common eigenvectors.
    for (const InvariantSubspace& w : transposedCommonEigenvectors(rep, tol)) {
      nonIsolated = nonIsolated || w.nonIsolated;
      const Matrix plane = linalg::orthogonalComplement(w.basis.conjugate());
      out.push_back({k, plane, invarianceResidual(rep, plane), false});
    }
  }
  for (InvariantSubspace& s : out) s.nonIsolated = nonIsolated;
  return out;
}

SigmaCertificate sigmaCertificate(const MonodromyRep& rep, const Tolerances& tol) {
  if (rep.n() != 2) throw Error(ErrorCode::DimensionError, "the sigma certificate is defined for n = 2");
  (void)tol;
  const auto e0 = linalg::characteristicRoots(rep.m0());
  const auto e1 = linalg::characteristicRoots(rep.m1());
  const Complex tr = (rep.m0() * rep.m1()).trace();
  const Complex sa = tr - (e0[0] * e1[0] + e0[1] * e1[1]);
  const Complex sb = tr - (e0[0] * e1[1] + e0[1] * e1[0]);
  const Matrix comm = rep.m0() * rep.m1() - rep.m1() * rep.m0();
  const double norms = linalg::spectralNorm(rep.m0()) * linalg::spectralNorm(rep.m1());
  return {std::abs(sa) <= std::abs(sb) ? sa : sb, std::abs(linalg::determinant(comm)) / (norms * norms)};
}

CompositionData analyze(const MonodromyRep& rep, const Tolerances& tol) {
  CompositionData cd;
  const int n = rep.n();
  cd.basisChange = linalg::identity(n);
  if (n == 1) return cd;

  cd.lines = commonInvariantSubspaces(rep, 1, tol);
  if (n == 3) cd.hyperplanes = commonInvariantSubspaces(rep, 2, tol);
  const auto transposed = transposedCommonEigenvectors(rep, tol);
  for (const auto* family : {&cd.lines, &cd.hyperplanes})
    for (const InvariantSubspace& s : *family) cd.nonIsolated = cd.nonIsolated || s.nonIsolated;
  if (cd.nonIsolated) cd.notes.push_back("non-isolated invariant subspaces; canonical representatives used");

  if (n == 2) {
    const SigmaCertificate cert = sigmaCertificate(rep, tol);
    cd.sigma = cert.sigma;
    const bool certReducible = cert.relativeCommutator <= tol.sigma;
    const bool searchReducible = !cd.lines.empty();
    if (certReducible != searchReducible) {
      const bool clear = cert.relativeCommutator <= tol.sigma * 1e-3 || cert.relativeCommutator > tol.sigma * 1e3;
      std::ostringstream msg;
      msg << "subspace search says " << (searchReducible ? "reducible" : "irreducible")
          << " but |det[M0,M1]| / (|M0||M1|)^2 = " << cert.relativeCommutator;
      if (clear) throw Error(ErrorCode::InconsistentCertificate, msg.str() + "; rerun with exact angles");
      cd.borderline = true;
      cd.notes.push_back("borderline irreducibility: " + msg.str());
    }
  }

  // Decomposable iff some invariant line is not inside the annihilator of
  // some transposed common eigenvector.
  for (const InvariantSubspace& l : cd.lines) {
    for (const InvariantSubspace& w : transposed) {
      const Complex pairing = (w.basis.transpose() * l.basis)(0, 0);
      if (std::abs(pairing) <= 100.0 * tol.invariance) continue;
      const Matrix complement = linalg::orthogonalComplement(w.basis.conjugate());
      const Matrix t = joinColumns(l.basis, complement);
      const Matrix tinv = linalg::inverse(t);
      const Matrix a0 = tinv * rep.m0() * t;
      const Matrix a1 = tinv * rep.m1() * t;
      MonodromyRep chi(a0.topLeftCorner(1, 1), a1.topLeftCorner(1, 1), rep.label() + "/summand1", tol);
      MonodromyRep rest(a0.bottomRightCorner(n - 1, n - 1), a1.bottomRightCorner(n - 1, n - 1),
                        rep.label() + "/summand2", tol);
      chi.setExactSpectra(rep.exactSpectra());
      rest.setExactSpectra(rep.exactSpectra());
      cd.summands = {std::move(chi), std::move(rest)};
      cd.basisChange = t;
      cd.kind = CompositionKind::Decomposable;
      break;
    }
    if (cd.kind == CompositionKind::Decomposable) break;
  }

  for (const InvariantSubspace& h : cd.hyperplanes) cd.sequences.push_back(makeSequence(rep, h.basis, tol));
  for (const InvariantSubspace& l : cd.lines) cd.sequences.push_back(makeSequence(rep, l.basis, tol));

  if (cd.kind != CompositionKind::Decomposable) {
    const bool hasLine = !cd.lines.empty();
    const bool hasPlane = !cd.hyperplanes.empty();
    if (hasLine && hasPlane)
      cd.kind = CompositionKind::Both;
    else if (hasPlane)
      cd.kind = CompositionKind::Sub2;
    else if (hasLine)
      cd.kind = CompositionKind::Sub1;
    if (!cd.sequences.empty()) cd.basisChange = cd.sequences.front().basisChange;
  }
  return cd;
}

bool isIrreducible(const MonodromyRep& rep, const Tolerances& tol) {
  if (rep.n() == 1) return true;
  return analyze(rep, tol).kind == CompositionKind::Irreducible;
}

MonodromyRep buildFromPSL2Z(const std::vector<Complex>& tEigenvalues, const Matrix& sMatrix,
                            const Tolerances& tol, std::string label) {
  const int n = static_cast<int>(tEigenvalues.size());
  if (sMatrix.rows() != n || sMatrix.cols() != n)
    throw Error(ErrorCode::DimensionError, "S must be n x n where n is the number of T eigenvalues");
  Matrix t = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) t(i, i) = tEigenvalues[static_cast<std::size_t>(i)];
  MonodromyRep rep(sMatrix, t, std::move(label), tol);
  const Matrix id = linalg::identity(n);
  const Matrix st = sMatrix * t;
  const double r2 = linalg::spectralNorm(sMatrix * sMatrix - id);
  const double r3 = linalg::spectralNorm(st * st * st - id);
  const double s = std::max(1.0, linalg::spectralNorm(sMatrix));
  if (r2 > tol.recon * s * s || r3 > tol.recon * std::pow(s * linalg::spectralNorm(t), 3)) {
    std::ostringstream msg;
    msg << "PSL2(Z) relations violated: |S^2 - I| = " << r2 << ", |(ST)^3 - I| = " << r3;
    throw Error(ErrorCode::RelationViolated, msg.str());
  }
  return rep;
}

}  // namespace rootsplit
