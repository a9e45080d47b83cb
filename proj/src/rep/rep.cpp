#include "rep/rep.hpp"

#include <cmath>

#include "core/error.hpp"

namespace rootsplit {

MonodromyRep::MonodromyRep(Matrix m0, Matrix m1, std::string label, const Tolerances& tol)
    : m0_(std::move(m0)), m1_(std::move(m1)), label_(std::move(label)) {
  const auto n = m0_.rows();
  if (n < 1 || n > 3 || m0_.cols() != n || m1_.rows() != n || m1_.cols() != n)
    throw Error(ErrorCode::DimensionError, "representation matrices must both be n x n with n in {1, 2, 3}");
  if (!linalg::allFinite(m0_) || !linalg::allFinite(m1_))
    throw Error(ErrorCode::InvalidArgument, "representation matrices must have finite entries");
  if (std::abs(linalg::determinant(m0_)) <= tol.singular)
    throw Error(ErrorCode::SingularMatrix, "M0 is singular (|det| <= eps_sing)");
  if (std::abs(linalg::determinant(m1_)) <= tol.singular)
    throw Error(ErrorCode::SingularMatrix, "M1 is singular (|det| <= eps_sing)");
}

Matrix MonodromyRep::local(int pole) const {
  switch (pole) {
    case 0:
      return m0_;
    case 1:
      return m1_;
    case 2:
      return linalg::inverse(m0_ * m1_);
    default:
      throw Error(ErrorCode::InvalidArgument, "pole index must be 0, 1 or 2");
  }
}

std::span<const Angle> MonodromyRep::exactPool(int pole) const {
  if (!exact_) return {};
  return exact_->angles[static_cast<std::size_t>(pole)];
}

std::vector<linalg::BranchedEigenvalue> MonodromyRep::localEigenvalues(int pole, const Tolerances& tol) const {
  return linalg::eigenvalues(local(pole), tol, exactPool(pole));
}

Character characterOf(const MonodromyRep& rep, const Tolerances& tol) {
  if (rep.n() != 1) throw Error(ErrorCode::DimensionError, "a character is a 1-dimensional representation");
  Character c;
  c.chi0 = rep.m0()(0, 0);
  c.chi1 = rep.m1()(0, 0);
  c.q0 = rep.localEigenvalues(0, tol).front().angle;
  c.q1 = rep.localEigenvalues(1, tol).front().angle;
  c.qInf = rep.localEigenvalues(2, tol).front().angle;
  return c;
}

MonodromyRep directSum(std::span<const MonodromyRep> parts, std::string label) {
  int n = 0;
  for (const MonodromyRep& p : parts) n += p.n();
  if (n < 1 || n > 3) throw Error(ErrorCode::DimensionError, "direct sum dimension must be 1, 2 or 3");
  Matrix m0 = Matrix::Zero(n, n);
  Matrix m1 = Matrix::Zero(n, n);
  int at = 0;
  for (const MonodromyRep& p : parts) {
    m0.block(at, at, p.n(), p.n()) = p.m0();
    m1.block(at, at, p.n(), p.n()) = p.m1();
    at += p.n();
  }
  return MonodromyRep(m0, m1, std::move(label));
}

}  // namespace rootsplit

namespace rootsplit {

MonodromyRep makeExactRep(const exact::ExactMatrix& m0, const exact::ExactMatrix& m1, std::string label,
                          const Tolerances& tol, bool exactMode, std::string* note) {
  if (m0.n != m1.n) throw Error(ErrorCode::DimensionError, "M0 and M1 must have the same dimension");
  MonodromyRep rep(m0.toMatrix(), m1.toMatrix(), std::move(label), tol);
  if (!exactMode) return rep;
  std::string why;
  auto spectra = exact::exactSpectra(m0, m1, &why);
  if (spectra) {
    if (!spectra->complete[0] || !spectra->complete[1] || !spectra->complete[2]) {
      if (why.empty()) why = "exact mode: some eigenvalues are not verified roots of unity; they use floating angles";
    }
    rep.setExactSpectra(std::make_shared<const exact::ExactSpectra>(std::move(*spectra)));
  }
  if (note) *note = why;
  return rep;
}

}  // namespace rootsplit
