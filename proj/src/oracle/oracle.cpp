#include "oracle/oracle.hpp"

#include <cmath>
#include <sstream>

#include "core/error.hpp"
#include "oracle/matrix_exp.hpp"

namespace rootsplit::oracle {

namespace {

using nlohmann::json;

constexpr CheckId kAllChecks[] = {
    CheckId::Integrality,    CheckId::Coherence, CheckId::ChernBound, CheckId::UnitaryStrict,
    CheckId::RootBound,      CheckId::ReducibleBound, CheckId::NonRoots, CheckId::SumRule,
    CheckId::RoundTrip,      CheckId::OracleAgreement, CheckId::ExactFloat, CheckId::PlantedDetection,
};

std::string rootsText(const SplittingResult& r) {
  std::string s;
  for (const SplittingType& o : r.options) s += (s.empty() ? "" : " | ") + o.canonical();
  return s;
}

std::string errorText(const Error& e) { return std::string(errorName(e.code())) + ": " + e.what(); }

class Runner {
 public:
  Runner(const SampleSpec& spec, const std::vector<CheckId>& checks, const Tolerances& tol)
      : spec_(spec), checks_(checks), tol_(tol) {
    report_.spec = spec;
    for (CheckId c : checks) report_.checks.push_back(checkName(c));
  }

  bool wants(CheckId id) const { return std::find(checks_.begin(), checks_.end(), id) != checks_.end(); }

  void violation(CheckId id, const Sample& s, std::string expected, std::string got) {
    report_.violations.push_back(
        {checkName(id), s.label, json{{"m0", matrixJson(s.m0)}, {"m1", matrixJson(s.m1)}}, std::move(expected),
         std::move(got)});
  }

  void count(const std::string& key) { ++report_.tallies[key]; }

  void runSample(const Sample& s) {
    std::optional<MonodromyRep> rep;
    try {
      rep.emplace(s.m0, s.m1, s.label, tol_);
    } catch (const Error& e) {
      count(std::string("invalid:") + errorName(e.code()));
      return;
    }

    std::optional<ChernData> chern;
    if (wants(CheckId::Integrality) || wants(CheckId::Coherence) || wants(CheckId::ChernBound) ||
        wants(CheckId::UnitaryStrict)) {
      try {
        chern = chernClass(*rep, tol_);
        ++report_.c1Histogram[chern->c1];
        if (chern->branchSensitive) count("branch-sensitive");
        if (chern->lowConfidence) count("low-confidence");
      } catch (const Error& e) {
        if (wants(CheckId::Integrality)) {
          ++report_.checksRun;
          violation(CheckId::Integrality, s, "integer c1", errorText(e));
        }
      }
    }
    if (chern) {
      const double residual = std::abs(chern->rawSum - std::round(chern->rawSum));
      report_.maxIntegerResidual = std::max(report_.maxIntegerResidual, residual);
      if (wants(CheckId::Integrality)) {
        ++report_.checksRun;
        if (!(residual < tol_.integer)) violation(CheckId::Integrality, s, "|rawSum - c1| < eps_int", std::to_string(residual));
      }
      if (wants(CheckId::Coherence)) {
        ++report_.checksRun;
        if (!(std::abs(chern->lnModulusTotal) < 1e-8))
          violation(CheckId::Coherence, s, "sum of ln-moduli = 0", std::to_string(chern->lnModulusTotal));
      }
      if (wants(CheckId::ChernBound) && rep->n() == 2) {
        ++report_.checksRun;
        if (chern->c1 > 0 || chern->c1 < -4) violation(CheckId::ChernBound, s, "0 >= c1 >= -4", "c1 = " + std::to_string(chern->c1));
      }
      if (wants(CheckId::UnitaryStrict) && rep->n() == 2) {
        bool applies = false;
        try {
          applies = unitarityTest(*rep, tol_) && isIrreducible(*rep, tol_);
        } catch (const Error& e) {
          count(std::string("irreducibility-error:") + errorName(e.code()));
        }
        if (applies) {
          ++report_.checksRun;
          if (chern->c1 >= 0 || chern->c1 < -4)
            violation(CheckId::UnitaryStrict, s, "0 > c1 >= -4", "c1 = " + std::to_string(chern->c1));
        } else {
          ++report_.skipped;
        }
      }
    }

    if (wants(CheckId::RootBound) && rep->n() == 2) {
      ++report_.checksRun;
      try {
        const SplittingResult r = rootsDim2(*rep, tol_);
        count(r.determined() ? "determined" : "candidates");
      } catch (const Error& e) {
        violation(CheckId::RootBound, s, "roots in [-2, 0]", errorText(e));
      }
    }

    if ((wants(CheckId::ReducibleBound) || wants(CheckId::NonRoots) || wants(CheckId::PlantedDetection)) &&
        rep->n() == 3) {
      try {
        const CompositionData comp = analyze(*rep, tol_);
        count(std::string("kind:") + kindName(comp.kind));
        if (wants(CheckId::PlantedDetection) && s.plantedSubDim > 0) {
          ++report_.checksRun;
          const bool found = s.plantedSubDim == 1 ? !comp.lines.empty() : !comp.hyperplanes.empty();
          if (!found)
            violation(CheckId::PlantedDetection, s, "invariant subspace of dim " + std::to_string(s.plantedSubDim),
                      kindName(comp.kind));
        }
        if (comp.kind != CompositionKind::Irreducible) {
          if (wants(CheckId::ReducibleBound)) ++report_.checksRun;
          if (wants(CheckId::NonRoots)) ++report_.checksRun;
          try {
            const SplittingResult r = rootsDim3Reducible(*rep, comp, tol_);
            count(r.determined() ? "determined" : "candidates");
            for (const SplittingType& o : r.options) {
              if (wants(CheckId::NonRoots) && o == SplittingType({0, -1, -3}))
                violation(CheckId::NonRoots, s, "no (0,-1,-3)", o.canonical());
              if (wants(CheckId::ReducibleBound) && (o.max() > 0 || o.min() <= -3))
                violation(CheckId::ReducibleBound, s, "roots in (-3, 0]", o.canonical());
            }
          } catch (const Error& e) {
            const std::string text = errorText(e);
            if (wants(CheckId::NonRoots) && text.find("(0,-1,-3)") != std::string::npos)
              violation(CheckId::NonRoots, s, "no (0,-1,-3)", text);
            if (wants(CheckId::ReducibleBound))
              violation(CheckId::ReducibleBound, s, "roots in (-3, 0]", text);
          }
        }
      } catch (const Error& e) {
        count(std::string("analyze-error:") + errorName(e.code()));
        if (wants(CheckId::PlantedDetection) && s.plantedSubDim > 0) {
          ++report_.checksRun;
          violation(CheckId::PlantedDetection, s, "invariant subspace found", errorText(e));
        }
      }
    }
    if (wants(CheckId::PlantedDetection) && rep->n() == 2 && s.plantedSubDim > 0) {
      ++report_.checksRun;
      try {
        if (analyze(*rep, tol_).lines.empty()) violation(CheckId::PlantedDetection, s, "invariant line", "none");
      } catch (const Error& e) {
        violation(CheckId::PlantedDetection, s, "invariant line", errorText(e));
      }
    }

    if (wants(CheckId::SumRule)) {
      try {
        const Classification c = classify(*rep, tol_);
        ++report_.checksRun;
        for (const SplittingType& o : c.result.options)
          if (o.sum() != c.chern.c1)
            violation(CheckId::SumRule, s, "sum = " + std::to_string(c.chern.c1), o.canonical());
      } catch (const Error& e) {
        if (e.code() == ErrorCode::Internal) {
          ++report_.checksRun;
          violation(CheckId::SumRule, s, "sum rule", errorText(e));
        } else {
          count(std::string("classify-error:") + errorName(e.code()));
        }
      }
    }

    if (wants(CheckId::RoundTrip)) roundTrip(s, *rep);

    if (wants(CheckId::OracleAgreement) && !s.parts.empty()) {
      ++report_.checksRun;
      std::string expected;
      try {
        expected = directSumOracle(s.parts, tol_).canonical();
      } catch (const Error& e) {
        expected = "oracle unavailable (" + errorText(e) + ")";
      }
      std::string got;
      bool ok = false;
      try {
        const Classification c = classify(*rep, tol_);
        got = rootsText(c.result);
        ok = c.result.determined() && got == expected;
      } catch (const Error& e) {
        got = errorText(e);
      }
      if (!ok) violation(CheckId::OracleAgreement, s, expected, got);
    }

    if (wants(CheckId::ExactFloat) && s.exact0) {
      ++report_.checksRun;
      try {
        std::string note;
        const MonodromyRep ex = makeExactRep(*s.exact0, *s.exact1, s.label, tol_, true, &note);
        if (ex.exactSpectra() && ex.exactSpectra()->allComplete()) count("exact-complete");
        const int exactC1 = chernClass(ex, tol_).c1;
        const int floatC1 = chernClass(*rep, tol_).c1;
        if (exactC1 != floatC1)
          violation(CheckId::ExactFloat, s, "exact c1 = " + std::to_string(exactC1), "float c1 = " + std::to_string(floatC1));
      } catch (const Error& e) {
        violation(CheckId::ExactFloat, s, "agreeing c1", errorText(e));
      }
    }
  }

  void roundTrip(const Sample& s, const MonodromyRep& rep) {
    for (int pole = 0; pole < 2; ++pole) {
      ++report_.checksRun;
      const Matrix& m = pole == 0 ? rep.m0() : rep.m1();
      try {
        const linalg::PrincipalLog log = linalg::principalLog(m, tol_);
        const double err = linalg::spectralNorm(matrixExp(log.L) - m) / linalg::spectralNorm(m);
        report_.maxRoundTripError = std::max(report_.maxRoundTripError, err);
        if (!(err < 1e-8)) violation(CheckId::RoundTrip, s, "exp(log M) = M within 1e-8", std::to_string(err));
        for (const Complex& z : linalg::characteristicRoots(log.L)) {
          const double q = z.imag() / kTwoPi;
          if (q < -1e-9 || q >= 1.0 + 1e-9)
            violation(CheckId::RoundTrip, s, "Im(eig log M) / 2 pi in [0, 1)", std::to_string(q));
        }
        const Complex tr = log.L.trace();
        if (std::abs(tr - log.traceOfLog) > 1e-9 * std::max(1.0, std::abs(tr)))
          violation(CheckId::RoundTrip, s, "Tr log M = sum of branch logs", std::to_string(std::abs(tr - log.traceOfLog)));
      } catch (const Error& e) {
        violation(CheckId::RoundTrip, s, "principal log", errorText(e));
      }
    }
  }

  OracleReport run() {
    for (int i = 0; i < spec_.count; ++i) runSample(drawSample(spec_, static_cast<std::uint64_t>(i)));
    return std::move(report_);
  }

 private:
  SampleSpec spec_;
  std::vector<CheckId> checks_;
  Tolerances tol_;
  OracleReport report_;
};

}  // namespace

const char* checkName(CheckId id) {
  switch (id) {
    case CheckId::Integrality:
      return "integrality";
    case CheckId::Coherence:
      return "determinant-coherence";
    case CheckId::ChernBound:
      return "chern-bound";
    case CheckId::UnitaryStrict:
      return "unitary-strict";
    case CheckId::RootBound:
      return "root-bound";
    case CheckId::ReducibleBound:
      return "reducible-bound";
    case CheckId::NonRoots:
      return "nonroots";
    case CheckId::SumRule:
      return "sum-rule";
    case CheckId::RoundTrip:
      return "round-trip";
    case CheckId::OracleAgreement:
      return "oracle-agreement";
    case CheckId::ExactFloat:
      return "exact-float";
    case CheckId::PlantedDetection:
      return "planted-detection";
  }
  return "unknown";
}

std::vector<CheckId> parseChecks(const std::vector<std::string>& names) {
  std::vector<CheckId> out;
  for (const std::string& n : names) {
    bool found = false;
    for (CheckId c : kAllChecks)
      if (n == checkName(c)) {
        out.push_back(c);
        found = true;
      }
    if (!found) throw Error(ErrorCode::InvalidArgument, "unknown check '" + n + "'");
  }
  return out;
}

std::vector<CheckId> defaultChecks(const SampleSpec& spec) {
  std::vector<CheckId> c{CheckId::Integrality, CheckId::Coherence, CheckId::SumRule};
  if (spec.dim == 2) {
    c.push_back(CheckId::ChernBound);
    c.push_back(CheckId::RootBound);
    if (spec.ensemble == Ensemble::Unitary) c.push_back(CheckId::UnitaryStrict);
  }
  if (spec.dim == 3) {
    c.push_back(CheckId::ReducibleBound);
    c.push_back(CheckId::NonRoots);
  }
  if (spec.ensemble == Ensemble::Generic) c.push_back(CheckId::RoundTrip);
  if (spec.ensemble == Ensemble::BlockUpperTriangular) c.push_back(CheckId::PlantedDetection);
  if (spec.ensemble == Ensemble::Decomposable) c.push_back(CheckId::OracleAgreement);
  if (spec.ensemble == Ensemble::RationalAngle) c.push_back(CheckId::ExactFloat);
  return c;
}

SplittingType directSumOracle(const std::vector<MonodromyRep>& parts, const Tolerances& tol) {
  SplittingType out;
  for (const MonodromyRep& p : parts) {
    const Classification c = classify(p, tol);
    if (!c.result.determined())
      throw Error(ErrorCode::AmbiguousPart, "part '" + p.label() + "' has candidates " + rootsText(c.result));
    out = out + c.result.options.front();
  }
  return out;
}

OracleReport sampleAndCheck(const SampleSpec& spec, const std::vector<CheckId>& checks, const Tolerances& tol) {
  return Runner(spec, checks, tol).run();
}

OracleReport conjectureScan(const SampleSpec& spec, const Tolerances& tol) {
  OracleReport report;
  report.spec = spec;
  report.checks = {"conjecture-window"};
  for (int i = 0; i < spec.count; ++i) {
    const Sample s = drawSample(spec, static_cast<std::uint64_t>(i));
    try {
      std::string note;
      const MonodromyRep rep = s.exact0 ? makeExactRep(*s.exact0, *s.exact1, s.label, tol, true, &note)
                                        : MonodromyRep(s.m0, s.m1, s.label, tol);
      const ChernData chern = chernClass(rep, tol);
      ++report.c1Histogram[chern.c1];
      if (chern.exact) ++report.tallies["exact-c1"];
      if (rep.n() == 3 && !(chern.c1 > -6 && chern.c1 <= 0)) {
        ++report.tallies["c1-outside-dim3-window"];
        report.findings.push_back(s.label + ": c1 = " + std::to_string(chern.c1) + " outside (-6, 0]");
      }
      const Classification c = classify(rep, tol);
      ++report.checksRun;
      bool outside = false;
      for (const SplittingType& o : c.result.options)
        outside = outside || o.max() > 0 || o.min() <= -3;
      if (outside) {
        ++report.tallies["roots-outside-window"];
        report.findings.push_back(s.label + ": roots " + rootsText(c.result) + " outside (-3, 0]");
      } else {
        ++report.tallies["roots-inside-window"];
      }
    } catch (const Error& e) {
      ++report.tallies[std::string("error:") + errorName(e.code())];
      report.findings.push_back(s.label + ": " + errorText(e));
    }
  }
  return report;
}

json matrixJson(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(row);
  }
  return rows;
}

json OracleReport::toJson() const {
  json hist = json::object();
  for (const auto& [k, v] : c1Histogram) hist[std::to_string(k)] = v;
  json vio = json::array();
  for (const Violation& v : violations)
    vio.push_back({{"check", v.check}, {"label", v.label}, {"input", v.input}, {"expected", v.expected}, {"got", v.got}});
  json split = json::array();
  for (int p : spec.split) split.push_back(p);
  return json{{"spec",
               {{"count", spec.count},
                {"dim", spec.dim},
                {"ensemble", ensembleName(spec.ensemble)},
                {"seed", spec.seed},
                {"maxDenominator", spec.maxDenominator},
                {"split", split}}},
              {"checks", checks},
              {"checksRun", checksRun},
              {"skipped", skipped},
              {"violations", vio},
              {"histogram", {{"c1", hist}}},
              {"tallies", tallies},
              {"maxIntegerResidual", maxIntegerResidual},
              {"maxRoundTripError", maxRoundTripError},
              {"findings", findings}};
}

std::string OracleReport::summary() const {
  std::ostringstream out;
  out << ensembleName(spec.ensemble) << " dim " << spec.dim << " count " << spec.count << " seed " << spec.seed
      << ": " << checksRun << " checks, " << violations.size() << " violations";
  if (!c1Histogram.empty()) {
    out << ", c1 histogram";
    for (const auto& [k, v] : c1Histogram) out << " " << k << ":" << v;
  }
  if (!findings.empty()) out << ", " << findings.size() << " findings";
  return out.str();
}

}  // namespace rootsplit::oracle
