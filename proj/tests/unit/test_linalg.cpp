#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "core/error.hpp"
#include "helpers.hpp"
#include "linalg/angle.hpp"
#include "linalg/eigen.hpp"
#include "linalg/jordan.hpp"
#include "linalg/principal_log.hpp"
#include "oracle/ensembles.hpp"
#include "oracle/matrix_exp.hpp"
#include "oracle/rng.hpp"

using namespace rootsplit;
using namespace rootsplit::linalg;
using testing::diag;
using testing::mat;
using testing::unit;

TEST_SUITE("linalg") {

TEST_CASE("determinant and inverse of small matrices") {
  const Matrix a = mat({{2.0, 1.0}, {1.0, 1.0}});
  CHECK(std::abs(determinant(a) - Complex(1.0)) < 1e-15);
  CHECK(testing::relErr(inverse(a), mat({{1.0, -1.0}, {-1.0, 2.0}})) < 1e-15);
  const Matrix b = mat({{1.0, 2.0, 0.0}, {0.0, 1.0, 3.0}, {4.0, 0.0, 1.0}});
  CHECK(std::abs(determinant(b) - Complex(25.0)) < 1e-12);
  CHECK_THROWS_AS(inverse(Matrix::Zero(2, 2)), Error);
}

TEST_CASE("inverse is a two-sided inverse on random matrices") {
  for (int n = 1; n <= 3; ++n)
    for (std::uint64_t i = 0; i < 50; ++i) {
      oracle::Rng rng = oracle::Rng::forSample(11, i);
      const Matrix a = oracle::genericMatrix(rng, n);
      CHECK(testing::relErr(a * inverse(a), identity(n)) < 1e-9);
    }
}

TEST_CASE("rank, null space and orthogonal complement") {
  const Matrix a = mat({{1.0, 2.0}, {2.0, 4.0}});
  CHECK(rank(a, 1e-12) == 1);
  TallMatrix t = a;
  const Matrix ns = nullSpace(t, 1e-10);
  REQUIRE(ns.cols() == 1);
  CHECK((a * ns).norm() < 1e-12);

  Matrix line(3, 1);
  line << 1.0, Complex(0.0, 1.0), 0.0;
  const Matrix perp = orthogonalComplement(line);
  REQUIRE(perp.cols() == 2);
  CHECK((line.adjoint() * perp).norm() < 1e-12);
  CHECK(testing::relErr(perp.adjoint() * perp, identity(2)) < 1e-12);
}

TEST_CASE("angles parse, print and add") {
  const Angle a = Angle::parse("5/6");
  CHECK(a.num() == 5);
  CHECK(a.den() == 6);
  CHECK(a.inverse() == Angle(1, 6));
  CHECK((a + Angle(1, 3)).str() == "1/6");
  CHECK(Angle(4, 8).str() == "1/2");
  CHECK(Angle(-1, 4) == Angle(3, 4));
  CHECK(Angle::parse("0").isZero());
  CHECK_THROWS_AS(Angle::parse("1/0"), Error);
  CHECK_THROWS_AS(Angle::parse("x"), Error);
  CHECK(Angle(1, 3) < Angle(1, 2));

  RationalSum s;
  s.add(Angle(1, 6));
  s.add(Angle(5, 6));
  s.add(Angle(1, 2), 2);
  CHECK(s.isInteger());
  CHECK(s.value() == doctest::Approx(2.0));
}

TEST_CASE("angle recognition picks the simplest fraction") {
  CHECK(recognizeAngle(1.0 / 3.0 + 1e-9, 1e-6, 360) == Angle(1, 3));
  CHECK(recognizeAngle(0.999999999, 1e-6, 360) == Angle(0, 1));
  CHECK(recognizeAngle(7.0 / 360.0, 1e-9, 360) == Angle(7, 360));
  CHECK_FALSE(recognizeAngle(std::sqrt(2.0) - 1.0, 1e-9, 360).has_value());
}

TEST_CASE("principal angle is confined to [0, 1)") {
  CHECK(principalAngle(1.0) == 0.0);
  CHECK(principalAngle(-1.0) == doctest::Approx(0.5));
  CHECK(principalAngle(Complex(0.0, -1.0)) == doctest::Approx(0.75));
  CHECK(principalAngle(Complex(0.0, 1.0)) == doctest::Approx(0.25));
  for (std::uint64_t i = 0; i < 500; ++i) {
    oracle::Rng rng = oracle::Rng::forSample(3, i);
    const double q = principalAngle(rng.complexNormal());
    CHECK(q >= 0.0);
    CHECK(q < 1.0);
  }
}

TEST_CASE("characteristic roots match an independent eigensolver") {
  for (int n = 1; n <= 3; ++n)
    for (std::uint64_t i = 0; i < 200; ++i) {
      oracle::Rng rng = oracle::Rng::forSample(5, i);
      const Matrix a = oracle::genericMatrix(rng, n);
      std::vector<Complex> mine = characteristicRoots(a);
      Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(Eigen::MatrixXcd(a), false);
      std::vector<Complex> ref(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
      // Greedy matching; generic spectra are well separated.
      for (const Complex& z : ref) {
        auto it = std::min_element(mine.begin(), mine.end(), [&](Complex x, Complex y) {
          return std::abs(x - z) < std::abs(y - z);
        });
        CHECK(std::abs(*it - z) < 1e-9 * std::max(1.0, std::abs(z)));
        mine.erase(it);
      }
    }
}

TEST_CASE("triangular matrices give their diagonal exactly") {
  const Matrix a = mat({{unit(1.0 / 6.0), 3.0, 1.0}, {0.0, -1.0, 2.0}, {0.0, 0.0, unit(5.0 / 6.0)}});
  std::vector<Complex> r = characteristicRoots(a);
  CHECK(std::count(r.begin(), r.end(), Complex(-1.0)) == 1);
  CHECK(std::count(r.begin(), r.end(), unit(1.0 / 6.0)) == 1);
}

TEST_CASE("eigenvalue errors") {
  CHECK_THROWS_AS(eigenvalues(Matrix::Zero(2, 2)), Error);
  try {
    eigenvalues(mat({{1.0, 2.0}, {2.0, 4.0}}));
    FAIL("expected SingularMatrix");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularMatrix);
  }
  Matrix nan = identity(2);
  nan(0, 1) = std::nan("");
  try {
    eigenvalues(nan);
    FAIL("expected InvalidArgument");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }
}

TEST_CASE("eigenvalues cluster, snap and take exact angles") {
  const auto jordan = eigenvalues(mat({{1.0, 1.0}, {0.0, 1.0}}));
  REQUIRE(jordan.size() == 1);
  CHECK(jordan[0].multiplicity == 2);
  CHECK(jordan[0].angle == 0.0);

  // Just below the cut: snapped to angle 0 and flagged.
  const auto near = eigenvalues(diag({unit(1.0 - 1e-12), 2.0}));
  CHECK(near[0].angle == 0.0);
  CHECK(near[0].branchSensitive);

  const std::vector<Angle> pool{Angle(1, 6), Angle(5, 6)};
  const auto exact = eigenvalues(diag({unit(1.0 / 6.0), unit(5.0 / 6.0)}), {}, pool);
  REQUIRE(exact.size() == 2);
  CHECK(exact[0].exactAngle == Angle(1, 6));
  CHECK(exact[1].exactAngle == Angle(5, 6));
  CHECK(exact[1].angle == 5.0 / 6.0);

  const auto ordered = eigenvalues(diag({-1.0, unit(0.25), 3.0}));
  CHECK(ordered[0].angle == 0.0);
  CHECK(ordered[1].angle == doctest::Approx(0.25));
  CHECK(ordered[2].angle == doctest::Approx(0.5));
}

TEST_CASE("Jordan structure") {
  const Tolerances tol;
  CHECK(jordanForm(mat({{2.0, 1.0}, {0.0, 2.0}}), tol).blockSizes() == std::vector<int>{2});
  CHECK(jordanForm(diag({2.0, 2.0}), tol).blockSizes() == std::vector<int>{1, 1});
  const Matrix a = mat({{3.0, 1.0, 0.0}, {0.0, 3.0, 0.0}, {0.0, 0.0, 3.0}});
  std::vector<int> sizes = jordanForm(a, tol).blockSizes();
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{1, 2});
  CHECK(jordanForm(mat({{1.0, 1.0, 0.0}, {0.0, 1.0, 1.0}, {0.0, 0.0, 1.0}}), tol).blockSizes() ==
        std::vector<int>{3});

  // Hidden Jordan block behind a similarity.
  const Matrix p = mat({{1.0, 2.0, 0.0}, {0.0, 1.0, 1.0}, {1.0, 0.0, 1.0}});
  const Matrix j = mat({{-1.0, 1.0, 0.0}, {0.0, -1.0, 0.0}, {0.0, 0.0, 2.0}});
  const JordanDecomposition jd = jordanForm(p * j * inverse(p), tol);
  CHECK(jd.reconstructionError < 1e-8);
  CHECK_FALSE(jd.lowConfidence);
}

TEST_CASE("Jordan decomposition reconstructs random matrices") {
  const Tolerances tol;
  for (int n = 1; n <= 3; ++n)
    for (std::uint64_t i = 0; i < 100; ++i) {
      oracle::Rng rng = oracle::Rng::forSample(17, i);
      const JordanDecomposition jd = jordanForm(oracle::genericMatrix(rng, n), tol);
      CHECK(jd.reconstructionError < 1e-8);
    }
}

TEST_CASE("principal logarithm of known matrices") {
  const PrincipalLog minusI = principalLog(diag({-1.0, -1.0}));
  CHECK(testing::relErr(minusI.L, diag({Complex(0.0, kTwoPi / 2), Complex(0.0, kTwoPi / 2)})) < 1e-14);

  const PrincipalLog unip = principalLog(mat({{1.0, 1.0}, {0.0, 1.0}}));
  CHECK(testing::relErr(unip.L, mat({{0.0, 1.0}, {0.0, 0.0}})) < 1e-12);

  // Angle 5/6 stays 5/6; it does not become -1/6.
  const PrincipalLog rot = principalLog(diag({unit(5.0 / 6.0)}));
  CHECK(rot.L(0, 0).imag() == doctest::Approx(kTwoPi * 5.0 / 6.0));
  CHECK(std::abs(rot.traceOfLog - rot.L.trace()) < 1e-14);
}

TEST_CASE("exp(log M) = M with eigenvalues of log M in the principal strip") {
  const Tolerances tol;
  for (int n = 1; n <= 3; ++n)
    for (std::uint64_t i = 0; i < 300; ++i) {
      oracle::Rng rng = oracle::Rng::forSample(23, i);
      const Matrix m = oracle::genericMatrix(rng, n);
      const PrincipalLog log = principalLog(m, tol);
      CHECK(spectralNorm(oracle::matrixExp(log.L) - m) / spectralNorm(m) < 1e-8);
      for (const Complex& z : characteristicRoots(log.L)) {
        CHECK(z.imag() >= -1e-9);
        CHECK(z.imag() < kTwoPi + 1e-9);
      }
      CHECK(std::abs(log.L.trace() - log.traceOfLog) < 1e-9 * std::max(1.0, std::abs(log.traceOfLog)));
    }
}

TEST_CASE("matrix exponential") {
  CHECK(testing::relErr(oracle::matrixExp(Matrix::Zero(3, 3)), identity(3)) < 1e-15);
  const Matrix d = diag({1.0, Complex(0.0, kTwoPi / 4), -2.0});
  CHECK(testing::relErr(oracle::matrixExp(d), diag({std::exp(1.0), Complex(0.0, 1.0), std::exp(-2.0)})) < 1e-13);
  const Matrix nil = mat({{0.0, 1.0}, {0.0, 0.0}});
  CHECK(testing::relErr(oracle::matrixExp(nil), mat({{1.0, 1.0}, {0.0, 1.0}})) < 1e-15);
}

}  // TEST_SUITE
