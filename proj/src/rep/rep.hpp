#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/tolerances.hpp"
#include "exact/exact_spectrum.hpp"
#include "linalg/eigen.hpp"

namespace rootsplit {

// A representation of the free group on gamma_0, gamma_1, given by the
// images M0 and M1. Local monodromies: M0 at 0, M1 at 1, (M0 M1)^-1 at inf.
class MonodromyRep {
 public:
  // Validates shape (n in 1..3, both n x n), finiteness and invertibility.
  MonodromyRep(Matrix m0, Matrix m1, std::string label = {}, const Tolerances& tol = {});

  int n() const noexcept { return static_cast<int>(m0_.rows()); }
  const Matrix& m0() const noexcept { return m0_; }
  const Matrix& m1() const noexcept { return m1_; }
  const std::string& label() const noexcept { return label_; }

  // Local monodromy at pole 0, 1 or 2 (= infinity).
  Matrix local(int pole) const;

  // Verified exact eigen-angles, shared with sub and quotient reps.
  const std::shared_ptr<const exact::ExactSpectra>& exactSpectra() const noexcept { return exact_; }
  void setExactSpectra(std::shared_ptr<const exact::ExactSpectra> e) { exact_ = std::move(e); }
  std::span<const Angle> exactPool(int pole) const;

  // Branch data of the local monodromy at a pole.
  std::vector<linalg::BranchedEigenvalue> localEigenvalues(int pole, const Tolerances& tol) const;

 private:
  Matrix m0_;
  Matrix m1_;
  std::string label_;
  std::shared_ptr<const exact::ExactSpectra> exact_;
};

// Rank-1 representation with its three branch angles.
struct Character {
  Complex chi0;
  Complex chi1;
  double q0 = 0, q1 = 0, qInf = 0;
};

Character characterOf(const MonodromyRep& rep, const Tolerances& tol = {});

MonodromyRep directSum(std::span<const MonodromyRep> parts, std::string label = {});

}  // namespace rootsplit

namespace rootsplit {

// Builds a rep from exact entries. With `exactMode`, the eigen-angles of
// the local monodromies are verified exactly and attached; when that is not
// possible the rep stays floating and `note` says why.
MonodromyRep makeExactRep(const exact::ExactMatrix& m0, const exact::ExactMatrix& m1, std::string label,
                          const Tolerances& tol, bool exactMode, std::string* note = nullptr);

}  // namespace rootsplit
