#include <doctest.h>

#include "exact/cyclotomic.hpp"
#include "exact/exact_spectrum.hpp"
#include "helpers.hpp"
#include "oracle/rng.hpp"

using namespace rootsplit;
using namespace rootsplit::exact;

namespace {

std::vector<long> coeffs(std::int64_t order) {
  std::vector<long> out;
  for (const mpz_class& c : cyclotomicPolynomial(order)) out.push_back(c.get_si());
  return out;
}

ExactMatrix exactOf(int n, std::vector<ExactEntry> entries) { return ExactMatrix{n, std::move(entries)}; }

ExactEntry re(double x) { return ExactEntry::fromComplex(x, 0.0); }
ExactEntry ang(std::int64_t p, std::int64_t s) { return ExactEntry::fromAngle(Angle(p, s)); }

}  // namespace

TEST_SUITE("exact") {

TEST_CASE("totient and cyclotomic polynomials") {
  CHECK(totient(1) == 1);
  CHECK(totient(12) == 4);
  CHECK(totient(97) == 96);
  CHECK(totient(360) == 96);
  CHECK(coeffs(1) == std::vector<long>{-1, 1});
  CHECK(coeffs(4) == std::vector<long>{1, 0, 1});
  CHECK(coeffs(6) == std::vector<long>{1, -1, 1});
  CHECK(coeffs(12) == std::vector<long>{1, 0, -1, 0, 1});
  for (std::int64_t n : {5, 9, 15, 24, 30})
    CHECK(static_cast<std::int64_t>(cyclotomicPolynomial(n).size()) == totient(n) + 1);
}

TEST_CASE("arithmetic in Q(zeta_L)") {
  const CyclotomicField f(12);
  CHECK(f.degree() == 4);
  CHECK(f.sub(f.zetaPower(12), f.fromRational(1)) == f.zero());
  CHECK(f.sub(f.zetaPower(-1), f.zetaPower(11)) == f.zero());
  const auto i = f.rootOfUnity(1, 4);
  CHECK(f.sub(i, f.gaussian(0, 1)) == f.zero());
  CHECK(CyclotomicField::isZero(f.add(f.mul(i, i), f.fromRational(1))));
  // The primitive sixth roots satisfy z^2 - z + 1 = 0.
  const auto w = f.rootOfUnity(1, 6);
  CHECK(CyclotomicField::isZero(f.add(f.sub(f.mul(w, w), w), f.fromRational(1))));
  // Sum of all L-th roots of unity vanishes.
  auto sum = f.zero();
  for (int k = 0; k < 12; ++k) sum = f.add(sum, f.zetaPower(k));
  CHECK(CyclotomicField::isZero(sum));
  CHECK(f.scale(f.fromRational(3), mpq_class(1, 3)) == f.fromRational(1));
}

TEST_CASE("field multiplication is associative and commutative") {
  const CyclotomicField f(20);
  for (std::uint64_t k = 0; k < 30; ++k) {
    oracle::Rng rng = oracle::Rng::forSample(31, k);
    auto pick = [&] {
      auto e = f.zero();
      for (auto& c : e) {
        c = mpq_class(rng.uniformInt(-5, 5), rng.uniformInt(1, 4));
        c.canonicalize();
      }
      return e;
    };
    const auto a = pick(), b = pick(), c = pick();
    CHECK(f.sub(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c))) == f.zero());
    CHECK(f.sub(f.mul(a, b), f.mul(b, a)) == f.zero());
    CHECK(f.sub(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c))) == f.zero());
  }
}

TEST_CASE("entries convert without loss") {
  const ExactEntry e = ExactEntry::fromComplex(0.5, -0.25);
  CHECK(e.re == mpq_class(1, 2));
  CHECK(e.im == mpq_class(-1, 4));
  const Complex z = ang(1, 3).toComplex();
  CHECK(std::abs(z - testing::unit(1.0 / 3.0)) < 1e-15);
}

TEST_CASE("exact spectra of the worked example") {
  const ExactMatrix m0 = exactOf(3, {re(1), re(0), re(0), re(0), ang(5, 6), re(0), re(0), re(0), ang(1, 6)});
  const ExactMatrix m1 = exactOf(3, {re(1), re(1), re(1), re(0), re(-1), re(0), re(0), re(0), re(-1)});
  std::string note;
  const auto spectra = exactSpectra(m0, m1, &note);
  REQUIRE(spectra.has_value());
  CHECK(spectra->allComplete());
  auto sorted = [](std::vector<Angle> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(sorted(spectra->angles[0]) == std::vector<Angle>{Angle(0, 1), Angle(1, 6), Angle(5, 6)});
  CHECK(sorted(spectra->angles[1]) == std::vector<Angle>{Angle(0, 1), Angle(1, 2), Angle(1, 2)});
  // At infinity: inverses of the eigenvalues of M0 M1 = diag-like with 1, -w^5, -w.
  CHECK(sorted(spectra->angles[2]) == std::vector<Angle>{Angle(0, 1), Angle(1, 3), Angle(2, 3)});
}

TEST_CASE("non-roots of unity leave the pool incomplete") {
  const ExactMatrix m0 = exactOf(2, {re(2), re(0), re(0), re(0.5)});
  const ExactMatrix m1 = exactOf(2, {re(1), re(0), re(0), re(1)});
  const auto spectra = exactSpectra(m0, m1);
  if (spectra) {
    CHECK_FALSE(spectra->complete[0]);
    CHECK(spectra->complete[1]);
  }
}

}  // TEST_SUITE
