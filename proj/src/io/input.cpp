#include "io/input.hpp"

#include <cmath>

#include "core/error.hpp"

namespace rootsplit::io {

using nlohmann::json;

namespace {

[[noreturn]] void schemaError(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::SchemaError, path + ": " + what);
}

exact::ExactEntry parseEntry(const json& e, const std::string& path) {
  if (e.is_array()) {
    if (e.size() != 2 || !e[0].is_number() || !e[1].is_number())
      schemaError(path, "a complex entry is [re, im] with two numbers");
    const double re = e[0].get<double>();
    const double im = e[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) schemaError(path, "entries must be finite");
    return exact::ExactEntry::fromComplex(re, im);
  }
  if (e.is_object()) {
    for (const auto& [key, value] : e.items())
      if (key != "angle" && key != "modulus") schemaError(path, "unexpected key '" + key + "'");
    if (!e.contains("angle") || !e["angle"].is_string()) schemaError(path, "angle entries need \"angle\": \"p/s\"");
    double modulus = 1.0;
    if (e.contains("modulus")) {
      if (!e["modulus"].is_number()) schemaError(path + ".modulus", "must be a number");
      modulus = e["modulus"].get<double>();
      if (!(modulus > 0.0) || !std::isfinite(modulus)) schemaError(path + ".modulus", "must be positive and finite");
    }
    Angle a;
    try {
      a = Angle::parse(e["angle"].get<std::string>());
    } catch (const Error& err) {
      schemaError(path + ".angle", err.what());
    }
    return exact::ExactEntry::fromAngle(a, modulus);
  }
  schemaError(path, "an entry is [re, im] or {\"angle\": \"p/s\", \"modulus\": r}");
}

exact::ExactMatrix parseMatrix(const json& m, int n, const std::string& path) {
  if (!m.is_array() || static_cast<int>(m.size()) != n) schemaError(path, "expected " + std::to_string(n) + " rows");
  exact::ExactMatrix out;
  out.n = n;
  for (int i = 0; i < n; ++i) {
    const json& row = m[static_cast<std::size_t>(i)];
    const std::string rowPath = path + "[" + std::to_string(i) + "]";
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      schemaError(rowPath, "expected " + std::to_string(n) + " entries");
    for (int j = 0; j < n; ++j)
      out.entries.push_back(parseEntry(row[static_cast<std::size_t>(j)], rowPath + "[" + std::to_string(j) + "]"));
  }
  return out;
}

json entryJson(const exact::ExactEntry& e) {
  if (e.angle) {
    json o{{"angle", e.angle->str()}};
    if (e.modulus != 1) o["modulus"] = e.modulus.get_d();
    return o;
  }
  return json::array({e.re.get_d(), e.im.get_d()});
}

json matrixOut(const exact::ExactMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.n; ++i) {
    json row = json::array();
    for (int j = 0; j < m.n; ++j) row.push_back(entryJson(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

InputDocument parseInput(const json& doc) {
  if (!doc.is_object()) schemaError("$", "the document must be an object");
  for (const auto& [key, value] : doc.items())
    if (key != "version" && key != "reps") schemaError("$", "unexpected key '" + key + "'");
  if (!doc.contains("version") || !doc["version"].is_string()) schemaError("$.version", "required string");
  if (!doc.contains("reps") || !doc["reps"].is_array()) schemaError("$.reps", "required array");
  InputDocument out;
  out.version = doc["version"].get<std::string>();
  if (out.version.empty() || out.version[0] != '1') schemaError("$.version", "unsupported version '" + out.version + "'");
  for (std::size_t r = 0; r < doc["reps"].size(); ++r) {
    const json& rep = doc["reps"][r];
    const std::string path = "$.reps[" + std::to_string(r) + "]";
    if (!rep.is_object()) schemaError(path, "must be an object");
    for (const auto& [key, value] : rep.items())
      if (key != "label" && key != "n" && key != "m0" && key != "m1") schemaError(path, "unexpected key '" + key + "'");
    RepInput in;
    if (rep.contains("label")) {
      if (!rep["label"].is_string()) schemaError(path + ".label", "must be a string");
      in.label = rep["label"].get<std::string>();
    } else {
      in.label = "rep" + std::to_string(r);
    }
    if (!rep.contains("n") || !rep["n"].is_number_integer()) schemaError(path + ".n", "required integer");
    const int n = rep["n"].get<int>();
    if (n < 1 || n > 3) schemaError(path + ".n", "must be 1, 2 or 3");
    if (!rep.contains("m0")) schemaError(path + ".m0", "required");
    if (!rep.contains("m1")) schemaError(path + ".m1", "required");
    in.m0 = parseMatrix(rep["m0"], n, path + ".m0");
    in.m1 = parseMatrix(rep["m1"], n, path + ".m1");
    out.reps.push_back(std::move(in));
  }
  return out;
}

InputDocument parseInput(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::SchemaError, std::string("invalid JSON: ") + e.what());
  }
  return parseInput(doc);
}

json inputJson(const InputDocument& doc) {
  json reps = json::array();
  for (const RepInput& r : doc.reps)
    reps.push_back({{"label", r.label}, {"n", r.m0.n}, {"m0", matrixOut(r.m0)}, {"m1", matrixOut(r.m1)}});
  return {{"version", doc.version}, {"reps", reps}};
}

const std::vector<std::string>& presetNames() {
  static const std::vector<std::string> names{"pslz-section5", "aux-character"};
  return names;
}

json presetDocument(const std::string& name) {
  const json zero = json::array({0, 0});
  const json one = json::array({1, 0});
  const json minusOne = json::array({-1, 0});
  json rep;
  if (name == "pslz-section5") {
    // gamma_0 -> diag(1, w^5, w), w = e^{2 pi i / 6}; gamma_1 -> upper triangular.
    rep = {{"label", "pslz-section5"},
           {"n", 3},
           {"m0", json::array({json::array({one, zero, zero}),
                               json::array({zero, json{{"angle", "5/6"}}, zero}),
                               json::array({zero, zero, json{{"angle", "1/6"}}})})},
           {"m1", json::array({json::array({one, one, one}), json::array({zero, minusOne, zero}),
                               json::array({zero, zero, minusOne})})}};
  } else if (name == "aux-character") {
    rep = {{"label", "aux-character"},
           {"n", 1},
           {"m0", json::array({json::array({minusOne})})},
           {"m1", json::array({json::array({minusOne})})}};
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown example '" + name + "'");
  }
  return {{"version", kFormatVersion}, {"reps", json::array({rep})}};
}

void applyConfig(const json& config, Tolerances& tol) {
  if (!config.is_object()) throw Error(ErrorCode::SchemaError, "config: must be an object");
  for (const auto& [key, value] : config.items()) {
    if (key != "tolerances") throw Error(ErrorCode::SchemaError, "config: unexpected key '" + key + "'");
    if (!value.is_object()) throw Error(ErrorCode::SchemaError, "config.tolerances: must be an object");
    for (const auto& [name, v] : value.items()) {
      if (!v.is_number()) throw Error(ErrorCode::SchemaError, "config.tolerances." + name + ": must be a number");
      try {
        tol.set(name, v.get<double>());
      } catch (const Error& e) {
        throw Error(ErrorCode::SchemaError, std::string("config.tolerances: ") + e.what());
      }
    }
  }
}

}  // namespace rootsplit::io
