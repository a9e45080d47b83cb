#include <doctest.h>

#include <cmath>

#include "core/error.hpp"
#include "helpers.hpp"
#include "oracle/ensembles.hpp"
#include "oracle/oracle.hpp"
#include "rep/composition.hpp"

using namespace rootsplit;
using namespace rootsplit::oracle;
using testing::diag;

TEST_SUITE("oracle") {

TEST_CASE("splitmix64 reference values") {
  CHECK(splitmix64(0) == 0xE220A8397B1DCDAFULL);
  CHECK(splitmix64(1) == 0x910A2DEC89025CC1ULL);
}

TEST_CASE("streams are reproducible and distinct") {
  Rng a = Rng::forSample(42, 7), b = Rng::forSample(42, 7), c = Rng::forSample(43, 7), d = Rng::forSample(42, 8);
  const double x = a.uniform();
  CHECK(x == b.uniform());
  CHECK(x != c.uniform());
  CHECK(x != d.uniform());
}

TEST_CASE("uniform and normal moments") {
  Rng rng = Rng::forSample(1, 0);
  double s = 0, s2 = 0, u = 0;
  const int n = 40000;
  for (int i = 0; i < n; ++i) {
    const double v = rng.uniform();
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
    u += v;
    const double z = rng.normal();
    s += z;
    s2 += z * z;
  }
  CHECK(u / n == doctest::Approx(0.5).epsilon(0.02));
  CHECK(std::abs(s / n) < 0.03);
  CHECK(s2 / n == doctest::Approx(1.0).epsilon(0.03));
  for (int i = 0; i < 1000; ++i) {
    const int k = rng.uniformInt(-3, 2);
    CHECK(k >= -3);
    CHECK(k <= 2);
  }
}

TEST_CASE("unitary matrices and conjugators") {
  for (int n = 1; n <= 3; ++n)
    for (std::uint64_t i = 0; i < 50; ++i) {
      Rng rng = Rng::forSample(9, i);
      const Matrix u = unitaryMatrix(rng, n);
      CHECK(testing::relErr(u * u.adjoint(), linalg::identity(n)) < 1e-12);
      const Matrix p = conjugator(rng, n);
      CHECK(linalg::conditionNumber(p) <= 100.0 + 1e-9);
    }
}

TEST_CASE("samples are deterministic per (seed, index)") {
  for (auto e : {Ensemble::Generic, Ensemble::Unitary, Ensemble::RationalAngle, Ensemble::BlockUpperTriangular,
                 Ensemble::Decomposable}) {
    SampleSpec spec;
    spec.ensemble = e;
    spec.dim = 3;
    if (e == Ensemble::Decomposable) spec.split = {2, 1};
    const Sample a = drawSample(spec, 5), b = drawSample(spec, 5), c = drawSample(spec, 6);
    CHECK(a.m0 == b.m0);
    CHECK(a.m1 == b.m1);
    CHECK(a.m0 != c.m0);
    CHECK(a.m0.rows() == 3);
  }
}

TEST_CASE("ensembles have their advertised structure") {
  SampleSpec spec;
  spec.dim = 3;
  spec.ensemble = Ensemble::RationalAngle;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const Sample s = drawSample(spec, i);
    REQUIRE(s.exact0.has_value());
    CHECK(testing::relErr(s.exact0->toMatrix(), s.m0) < 1e-15);
    CHECK(testing::relErr(s.exact1->toMatrix(), s.m1) < 1e-15);
  }
  spec.ensemble = Ensemble::Decomposable;
  spec.split = {1, 1, 1};
  for (std::uint64_t i = 0; i < 50; ++i) {
    const Sample s = drawSample(spec, i);
    REQUIRE(s.parts.size() == 3);
    const MonodromyRep r(s.m0, s.m1);
    CHECK(analyze(r).kind == CompositionKind::Decomposable);
  }
  spec.ensemble = Ensemble::BlockUpperTriangular;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const Sample s = drawSample(spec, i);
    CHECK((s.plantedSubDim == 1 || s.plantedSubDim == 2));
    CHECK_FALSE(isIrreducible(MonodromyRep(s.m0, s.m1)));
  }
  spec.ensemble = Ensemble::Unitary;
  spec.dim = 2;
  for (std::uint64_t i = 0; i < 50; ++i) CHECK(unitarityTest(MonodromyRep(drawSample(spec, i).m0, drawSample(spec, i).m1)));
}

TEST_CASE("direct-sum oracle") {
  const std::vector<MonodromyRep> parts{MonodromyRep(diag({-1.0}), diag({-1.0})), MonodromyRep(diag({1.0}), diag({1.0}))};
  CHECK(directSumOracle(parts) == SplittingType({0, -1}));
}

TEST_CASE("check names round-trip") {
  const auto ids = parseChecks({"integrality", "sum-rule", "oracle-agreement"});
  REQUIRE(ids.size() == 3);
  CHECK(std::string(checkName(ids[2])) == "oracle-agreement");
  CHECK_THROWS_AS(parseChecks({"nope"}), Error);
  CHECK(parseEnsemble("blockUpperTriangular") == Ensemble::BlockUpperTriangular);
  CHECK_FALSE(parseEnsemble("bogus").has_value());
}

TEST_CASE("small sampled runs are clean on the invariants that hold unconditionally") {
  SampleSpec spec;
  spec.count = 200;
  spec.dim = 3;
  const OracleReport r =
      sampleAndCheck(spec, {CheckId::Integrality, CheckId::Coherence, CheckId::SumRule, CheckId::RoundTrip});
  CHECK(r.violations.empty());
  CHECK(r.checksRun > 0);
  CHECK(r.maxIntegerResidual < 1e-6);
  CHECK(r.maxRoundTripError < 1e-8);
  const auto j = r.toJson();
  CHECK(j["spec"]["count"] == 200);
  CHECK(j["violations"].empty());
}

TEST_CASE("rational-angle samples agree exactly and in floating point") {
  SampleSpec spec;
  spec.count = 200;
  spec.dim = 2;
  spec.ensemble = Ensemble::RationalAngle;
  const OracleReport r = sampleAndCheck(spec, {CheckId::ExactFloat, CheckId::Integrality});
  CHECK(r.violations.empty());
  CHECK(r.tallies.count("exact-complete") == 1);
}

TEST_CASE("conjecture scan records findings, not violations") {
  SampleSpec spec;
  spec.count = 100;
  spec.dim = 3;
  const OracleReport r = conjectureScan(spec);
  CHECK(r.violations.empty());
  long seen = 0;
  for (const auto& [c1, n] : r.c1Histogram) seen += n;
  CHECK(seen == 100);
  long inside = r.tallies.count("roots-inside-window") ? r.tallies.at("roots-inside-window") : 0;
  CHECK(inside + static_cast<long>(r.findings.size()) >= 100);
}

}  // TEST_SUITE
