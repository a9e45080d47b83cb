#include "io/output.hpp"

#include <cstdio>
#include <sstream>

#include "core/error.hpp"

namespace rootsplit::io {

using nlohmann::json;

namespace {

const char* poleName(int p) { return p == 0 ? "0" : p == 1 ? "1" : "inf"; }

json eigenJson(const linalg::BranchedEigenvalue& ev) {
  json j{{"value", complexJson(ev.value)},
         {"modulus", ev.modulus},
         {"angle", ev.angle},
         {"multiplicity", ev.multiplicity},
         {"branchSensitive", ev.branchSensitive}};
  j["exactAngle"] = ev.exactAngle ? json(ev.exactAngle->str()) : json(nullptr);
  return j;
}

json optionsJson(const SplittingResult& r) {
  json opts = json::array();
  for (const SplittingType& o : r.options) opts.push_back(o.roots());
  return opts;
}

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

std::string optionsText(const json& result) {
  std::string s;
  for (const auto& c : result["canonical"]) s += (s.empty() ? "" : " or ") + c.get<std::string>();
  return s;
}

}  // namespace

json complexJson(Complex z) { return json::array({z.real(), z.imag()}); }

json chernJson(const ChernData& c) {
  json poles = json::array();
  for (const PoleData& p : c.perPole) {
    json eig = json::array();
    for (const auto& ev : p.eigenvalues) eig.push_back(eigenJson(ev));
    poles.push_back({{"pole", poleName(p.pole)},
                     {"traceOfLog", complexJson(p.traceOfLog)},
                     {"qSum", p.qSum},
                     {"lnModulusSum", p.lnModulusSum},
                     {"eigenvalues", eig}});
  }
  json j{{"c1", c.c1},
         {"rawSum", c.rawSum},
         {"perPole", poles},
         {"wrapIntegers", c.wrapIntegers},
         {"lnModulusTotal", c.lnModulusTotal},
         {"branchSensitive", c.branchSensitive},
         {"lowConfidence", c.lowConfidence},
         {"exact", c.exact}};
  j["exactQSum"] = c.exactQSum ? json(*c.exactQSum) : json(nullptr);
  return j;
}

json boundsJson(const std::vector<BoundReport>& bounds) {
  json out = json::array();
  for (const BoundReport& b : bounds)
    out.push_back({{"name", b.name},
                   {"statement", b.statement},
                   {"applicable", b.applicable},
                   {"holds", b.holds},
                   {"conjectural", b.conjectural}});
  return out;
}

json resultJson(const SplittingResult& r) {
  json canon = json::array();
  for (const SplittingType& o : r.options) canon.push_back(o.canonical());
  return {{"status", r.determined() ? "determined" : "candidates"},
          {"options", optionsJson(r)},
          {"canonical", canon},
          {"provenance", r.provenance},
          {"minimalWeightRange", json::array({r.minimalWeightRange.first, r.minimalWeightRange.second})},
          {"kappa", r.kappa},
          {"notes", r.notes}};
}

json compositionJson(const CompositionData& comp, const Tolerances& tol) {
  auto pieceRoots = [&](const MonodromyRep& piece) -> json {
    try {
      const Classification c = classify(piece, tol);
      return {{"status", c.result.determined() ? "determined" : "candidates"},
              {"options", optionsJson(c.result)},
              {"c1", c.chern.c1}};
    } catch (const Error& e) {
      return {{"error", {{"code", errorName(e.code())}, {"message", e.what()}}}};
    }
  };
  json seqs = json::array();
  for (const ExactSequence& s : comp.sequences)
    seqs.push_back({{"subDim", s.subDim},
                    {"subRoots", pieceRoots(s.sub)},
                    {"quotientRoots", pieceRoots(s.quotient)},
                    {"blockResidual", s.blockResidual}});
  json summands = json::array();
  for (const MonodromyRep& s : comp.summands) summands.push_back({{"n", s.n()}, {"roots", pieceRoots(s)}});
  json j{{"kind", kindName(comp.kind)},
         {"sequences", seqs},
         {"summands", summands},
         {"nonIsolated", comp.nonIsolated},
         {"borderline", comp.borderline},
         {"notes", comp.notes}};
  j["sigma"] = comp.sigma ? complexJson(*comp.sigma) : json(nullptr);
  return j;
}

json classificationJson(const MonodromyRep& rep, const Classification& c, const Tolerances& tol,
                        const std::vector<std::string>& inputNotes) {
  json conjectural = json::array();
  for (const BoundReport& b : c.bounds)
    if (b.conjectural) conjectural.push_back(b.name + (b.holds ? " holds" : " fails") + ": " + b.statement);
  if (rep.n() == 3 && c.composition.kind == CompositionKind::Irreducible)
    conjectural.push_back("candidateTree(3,3) leaves are proven; larger trees are conjectural");
  json result = resultJson(c.result);
  for (const std::string& note : inputNotes) result["notes"].push_back(note);
  return {{"label", rep.label()},
          {"n", rep.n()},
          {"chern", chernJson(c.chern)},
          {"composition", compositionJson(c.composition, tol)},
          {"result", result},
          {"flags",
           {{"branch_sensitive", c.chern.branchSensitive},
            {"low_confidence", c.chern.lowConfidence},
            {"borderline", c.composition.borderline},
            {"conjectural", conjectural}}},
          {"bounds", boundsJson(c.bounds)}};
}

json errorJson(const std::string& label, const Error& e) {
  return {{"label", label}, {"error", {{"code", errorName(e.code())}, {"message", e.what()}}}};
}

json treeJson(int m, int d, std::optional<int> c1, const CandidateTree& tree) {
  json concrete = json::array();
  json canon = json::array();
  for (const SplittingType& t : tree.concrete) {
    concrete.push_back(t.roots());
    canon.push_back(t.canonical());
  }
  json j{{"m", m},
         {"d", d},
         {"patterns", tree.patterns},
         {"status", tree.proven ? "proven" : "conjectural"},
         {"concrete", concrete},
         {"canonical", canon}};
  j["c1"] = c1 ? json(*c1) : json(nullptr);
  return j;
}

std::string prettyClassify(const json& output) {
  std::ostringstream out;
  out << pad("label", 24) << pad("n", 3) << pad("c1", 5) << pad("kind", 14) << pad("status", 12) << "roots\n";
  for (const auto& r : output["results"]) {
    out << pad(r["label"].get<std::string>(), 24);
    if (r.contains("error")) {
      out << "error " << r["error"]["code"].get<std::string>() << ": " << r["error"]["message"].get<std::string>()
          << "\n";
      continue;
    }
    out << pad(std::to_string(r["n"].get<int>()), 3) << pad(std::to_string(r["chern"]["c1"].get<int>()), 5)
        << pad(r["composition"]["kind"].get<std::string>(), 14)
        << pad(r["result"]["status"].get<std::string>(), 12) << optionsText(r["result"]) << "\n";
    for (const auto& s : r["composition"]["sequences"]) {
      auto rootsOf = [](const json& p) -> std::string {
        if (p.contains("error")) return "error";
        std::string t;
        for (const auto& o : p["options"]) {
          std::string one;
          for (const auto& x : o) one += (one.empty() ? "" : ",") + std::to_string(x.get<int>());
          t += (t.empty() ? "" : " or ") + ("{" + one + "}");
        }
        return t;
      };
      out << "    sequence: sub dim " << s["subDim"].get<int>() << " roots " << rootsOf(s["subRoots"])
          << ", quotient roots " << rootsOf(s["quotientRoots"]) << "\n";
    }
    const auto& flags = r["flags"];
    if (flags["branch_sensitive"].get<bool>()) out << "    flag: branch sensitive\n";
    if (flags["low_confidence"].get<bool>()) out << "    flag: low confidence\n";
    if (flags["borderline"].get<bool>()) out << "    flag: borderline irreducibility\n";
  }
  return out.str();
}

std::string prettyChern(const json& output) {
  std::ostringstream out;
  out << pad("label", 24) << pad("c1", 5) << pad("q(0)", 12) << pad("q(1)", 12) << pad("q(inf)", 12) << "wraps\n";
  for (const auto& r : output["results"]) {
    out << pad(r["label"].get<std::string>(), 24);
    if (r.contains("error")) {
      out << "error " << r["error"]["code"].get<std::string>() << ": " << r["error"]["message"].get<std::string>()
          << "\n";
      continue;
    }
    const auto& c = r["chern"];
    out << pad(std::to_string(c["c1"].get<int>()), 5);
    for (const auto& p : c["perPole"]) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f", p["qSum"].get<double>());
      out << pad(buf, 12);
    }
    std::string wraps;
    for (const auto& w : c["wrapIntegers"]) wraps += (wraps.empty() ? "" : " ") + std::to_string(w.get<int>());
    out << wraps << "\n";
  }
  return out.str();
}

std::string prettyTree(const json& output) {
  std::ostringstream out;
  out << "tree m=" << output["m"].get<int>() << " d=" << output["d"].get<int>() << " ("
      << output["status"].get<std::string>() << ")\n";
  for (const auto& p : output["patterns"]) {
    std::string line;
    for (const auto& o : p) {
      const int v = o.get<int>();
      line += (line.empty() ? "" : ", ") + (v == 0 ? std::string("x") : "x" + std::to_string(v));
    }
    out << "  {" << line << "}\n";
  }
  if (!output["c1"].is_null()) {
    out << "with c1 = " << output["c1"].get<int>() << ":\n";
    for (const auto& c : output["canonical"]) out << "  " << c.get<std::string>() << "\n";
  }
  return out.str();
}

}  // namespace rootsplit::io
