#include "io/commands.hpp"

#include <sstream>

#include "io/input.hpp"
#include "io/output.hpp"
#include "oracle/oracle.hpp"

namespace rootsplit::io {

using nlohmann::json;

namespace {

std::string render(const json& doc, const DocumentFlags& flags, std::string (*pretty)(const json&)) {
  if (flags.pretty && pretty) return pretty(doc);
  return doc.dump(2) + "\n";
}

template <typename PerRep>
CommandOutput runReps(const std::string& command, const std::string& inputText, const Tolerances& tol,
                      const DocumentFlags& flags, PerRep perRep, std::string (*pretty)(const json&)) {
  const InputDocument in = parseInput(inputText);
  CommandOutput out;
  json results = json::array();
  for (const RepInput& r : in.reps) {
    try {
      std::string note;
      const MonodromyRep rep = makeExactRep(r.m0, r.m1, r.label, tol, flags.exact, &note);
      std::vector<std::string> notes;
      if (!note.empty()) notes.push_back(note);
      results.push_back(perRep(rep, notes));
    } catch (const Error& e) {
      if (!flags.keepGoing) throw Error(e.code(), r.label + ": " + e.what());
      if (!out.firstError) out.firstError = e.code();
      results.push_back(errorJson(r.label, e));
    }
  }
  const json doc{{"version", kFormatVersion}, {"command", command}, {"exactMode", flags.exact}, {"results", results}};
  out.text = render(doc, flags, pretty);
  return out;
}

}  // namespace

CommandOutput classifyDocument(const std::string& inputJson, const Tolerances& tol, const DocumentFlags& flags) {
  return runReps(
      "classify", inputJson, tol, flags,
      [&](const MonodromyRep& rep, const std::vector<std::string>& notes) {
        return classificationJson(rep, classify(rep, tol), tol, notes);
      },
      prettyClassify);
}

CommandOutput chernDocument(const std::string& inputJson, const Tolerances& tol, const DocumentFlags& flags) {
  return runReps(
      "chern", inputJson, tol, flags,
      [&](const MonodromyRep& rep, const std::vector<std::string>& notes) {
        const ChernData c = chernClass(rep, tol);
        json j{{"label", rep.label()},
               {"n", rep.n()},
               {"chern", chernJson(c)},
               {"bounds", boundsJson(chernBoundCheck(rep, c, tol, false))},
               {"notes", notes}};
        return j;
      },
      prettyChern);
}

CommandOutput treeDocument(int m, int d, std::optional<int> c1, const DocumentFlags& flags) {
  CommandOutput out;
  json doc = treeJson(m, d, c1, candidateTree(m, d, c1));
  doc["version"] = kFormatVersion;
  doc["command"] = "tree";
  out.text = render(doc, flags, prettyTree);
  return out;
}

CommandOutput exampleDocument(const std::string& name, const DocumentFlags& flags) {
  CommandOutput out;
  out.text = presetDocument(name).dump(flags.pretty ? 2 : -1) + "\n";
  return out;
}

CommandOutput verifyDocument(const std::string& specJson, const Tolerances& tol, const DocumentFlags& flags) {
  json spec = json::object();
  if (!specJson.empty()) {
    try {
      spec = json::parse(specJson);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::SchemaError, std::string("verify spec: ") + e.what());
    }
  }
  if (!spec.is_object()) throw Error(ErrorCode::SchemaError, "verify spec must be an object");
  for (const auto& [key, value] : spec.items())
    if (key != "seed" && key != "count" && key != "dim" && key != "ensemble" && key != "split")
      throw Error(ErrorCode::SchemaError, "verify spec: unexpected key '" + key + "'");
  std::uint64_t seed = 1;
  std::optional<int> count;
  std::optional<int> dimValue;
  std::optional<std::string> ensembleName;
  std::vector<int> splitValue;
  try {
    seed = spec.value("seed", std::uint64_t{1});
    if (spec.contains("count")) count = spec["count"].get<int>();
    if (spec.contains("dim")) dimValue = spec["dim"].get<int>();
    if (spec.contains("ensemble")) ensembleName = spec["ensemble"].get<std::string>();
    if (spec.contains("split")) splitValue = spec["split"].get<std::vector<int>>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::SchemaError, std::string("verify spec: ") + e.what());
  }
  if (count && *count < 0) throw Error(ErrorCode::InvalidArgument, "count must be non-negative");

  std::vector<oracle::SampleSpec> specs;
  auto make = [&](oracle::Ensemble e, int dim, int defaultCount, std::vector<int> split = {}) {
    oracle::SampleSpec s;
    s.ensemble = e;
    s.dim = dim;
    s.seed = seed;
    s.count = count.value_or(defaultCount);
    s.split = std::move(split);
    return s;
  };
  const bool custom = dimValue || ensembleName;
  if (custom) {
    oracle::Ensemble e = oracle::Ensemble::Generic;
    if (ensembleName) {
      const auto parsed = oracle::parseEnsemble(*ensembleName);
      if (!parsed) throw Error(ErrorCode::InvalidArgument, "unknown ensemble '" + *ensembleName + "'");
      e = *parsed;
    }
    const int dim = dimValue.value_or(2);
    if (dim < 1 || dim > 3) throw Error(ErrorCode::InvalidArgument, "dim must be 1, 2 or 3");
    std::vector<int> split = splitValue;
    if (e == oracle::Ensemble::Decomposable && split.empty()) split = dim == 3 ? std::vector<int>{2, 1} : std::vector<int>(dim, 1);
    int total = 0;
    for (int p : split) {
      if (p < 1) throw Error(ErrorCode::InvalidArgument, "split parts must be positive");
      total += p;
    }
    if (e == oracle::Ensemble::Decomposable && (total != dim || split.size() < 2))
      throw Error(ErrorCode::InvalidArgument, "split must have at least two parts summing to dim");
    specs.push_back(make(e, dim, 1000, split));
  } else {
    using oracle::Ensemble;
    specs = {make(Ensemble::Generic, 1, 1000),
             make(Ensemble::Generic, 2, 1000),
             make(Ensemble::Generic, 3, 1000),
             make(Ensemble::Unitary, 2, 1000),
             make(Ensemble::Unitary, 3, 500),
             make(Ensemble::RationalAngle, 2, 500),
             make(Ensemble::RationalAngle, 3, 500),
             make(Ensemble::BlockUpperTriangular, 2, 500),
             make(Ensemble::BlockUpperTriangular, 3, 1000),
             make(Ensemble::Decomposable, 3, 500, {1, 1, 1}),
             make(Ensemble::Decomposable, 3, 500, {2, 1})};
  }

  CommandOutput out;
  json reports = json::array();
  std::ostringstream text;
  for (const oracle::SampleSpec& s : specs) {
    const oracle::OracleReport r = oracle::sampleAndCheck(s, oracle::defaultChecks(s), tol);
    out.violations += static_cast<long>(r.violations.size());
    reports.push_back(r.toJson());
    text << r.summary() << "\n";
  }
  json scans = json::array();
  if (!custom) {
    oracle::SampleSpec s = make(oracle::Ensemble::Generic, 3, 1000);
    const oracle::OracleReport r = oracle::conjectureScan(s, tol);
    scans.push_back(r.toJson());
    text << "conjecture scan (findings only): " << r.summary() << "\n";
  }
  const json doc{{"version", kFormatVersion},
                 {"command", "verify"},
                 {"seed", seed},
                 {"reports", reports},
                 {"conjectureScans", scans},
                 {"totalViolations", out.violations}};
  if (flags.pretty) {
    text << "total violations: " << out.violations << "\n";
    out.text = text.str();
  } else {
    out.text = doc.dump(2) + "\n";
  }
  return out;
}

}  // namespace rootsplit::io
