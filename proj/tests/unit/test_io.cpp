#include <doctest.h>

#include <json.hpp>

#include "core/error.hpp"
#include "io/commands.hpp"
#include "io/input.hpp"

using namespace rootsplit;
using namespace rootsplit::io;
using nlohmann::json;

namespace {

std::string schemaMessage(const json& doc) {
  try {
    parseInput(doc);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SchemaError);
    return e.what();
  }
  return "";
}

json rank2(const json& m0) {
  return json{{"version", "1.0"}, {"reps", json::array({json{{"n", 2}, {"m0", m0}, {"m1", json::parse("[[[1,0],[0,0]],[[0,0],[1,0]]]")}}})}};
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("presets round-trip through the parser") {
  for (const std::string& name : presetNames()) {
    const json doc = presetDocument(name);
    CHECK(inputJson(parseInput(doc)) == doc);
  }
  CHECK_THROWS_AS(presetDocument("nope"), Error);
}

TEST_CASE("schema errors name the offending path") {
  CHECK(schemaMessage(json::object()).find("version") != std::string::npos);
  CHECK(schemaMessage(json{{"version", "2.0"}, {"reps", json::array()}}).find("version") != std::string::npos);
  json extra = presetDocument("aux-character");
  extra["colour"] = "red";
  CHECK(schemaMessage(extra).find("colour") != std::string::npos);
  CHECK(schemaMessage(rank2(json::parse("[[[1,0],[0,0]]]"))).find("reps[0].m0") != std::string::npos);
  CHECK(schemaMessage(rank2(json::parse("[[[1,0],[0,0]],[[0,0],{\"angle\":\"1/0\"}]]"))) != "");
  CHECK(schemaMessage(rank2(json::parse("[[[1,0],[0,0]],[[0,0],[1]]]"))).find("reps[0].m0") != std::string::npos);
  CHECK_THROWS_AS(parseInput(std::string("{not json")), Error);
}

TEST_CASE("labels default to their index") {
  const InputDocument d = parseInput(rank2(json::parse("[[[2,0],[0,0]],[[0,0],[3,0]]]")));
  REQUIRE(d.reps.size() == 1);
  CHECK(d.reps[0].label == "rep0");
}

TEST_CASE("config files set tolerances") {
  Tolerances tol;
  applyConfig(json{{"tolerances", {{"sing", 1e-10}, {"int", 1e-5}}}}, tol);
  CHECK(tol.singular == 1e-10);
  CHECK(tol.integer == 1e-5);
  CHECK_THROWS_AS(applyConfig(json{{"tolerance", json::object()}}, tol), Error);
  CHECK_THROWS_AS(applyConfig(json{{"tolerances", {{"bogus", 1.0}}}}, tol), Error);
  CHECK_THROWS_AS(applyConfig(json{{"tolerances", {{"sing", -1.0}}}}, tol), Error);
}

TEST_CASE("classify document of the worked example") {
  const CommandOutput out = classifyDocument(presetDocument("pslz-section5").dump(), {}, DocumentFlags{true, false, false});
  const json doc = json::parse(out.text);
  CHECK(doc["command"] == "classify");
  CHECK(doc["exactMode"] == true);
  const json& r = doc["results"][0];
  CHECK(r["result"]["status"] == "determined");
  CHECK(r["result"]["options"] == json::parse("[[0,-1,-2]]"));
  CHECK(r["chern"]["c1"] == -3);
  CHECK(r["chern"]["exact"] == true);
  CHECK(r["composition"]["kind"] == "both");
  CHECK(r["composition"]["sequences"][0]["subRoots"]["options"] == json::parse("[[0,-2]]"));
  CHECK(r["composition"]["sequences"][0]["quotientRoots"]["options"] == json::parse("[[-1]]"));
}

TEST_CASE("keep-going turns failures into error objects") {
  json doc = presetDocument("aux-character");
  doc["reps"].push_back(json{{"label", "singular"}, {"n", 1}, {"m0", json::parse("[[[0,0]]]")}, {"m1", json::parse("[[[1,0]]]")}});
  const CommandOutput out = classifyDocument(doc.dump(), {}, DocumentFlags{false, false, true});
  REQUIRE(out.firstError.has_value());
  CHECK(*out.firstError == ErrorCode::SingularMatrix);
  const json parsed = json::parse(out.text);
  CHECK(parsed["results"][0]["result"]["options"] == json::parse("[[-1]]"));
  CHECK(parsed["results"][1]["error"]["code"] == "SingularMatrix");
  CHECK_THROWS_AS(classifyDocument(doc.dump(), {}, DocumentFlags{}), Error);
}

TEST_CASE("chern and tree documents") {
  const json c = json::parse(chernDocument(presetDocument("aux-character").dump(), {}, {}).text);
  CHECK(c["results"][0]["chern"]["c1"] == -1);
  const json t = json::parse(treeDocument(3, 3, -3, {}).text);
  CHECK(t["patterns"].size() == 4);
  CHECK(t["concrete"] == json::parse("[[-1,-1,-1],[0,-1,-2]]"));
  CHECK_THROWS_AS(treeDocument(1, 3, std::nullopt, {}), Error);
}

TEST_CASE("verify documents are deterministic") {
  const std::string spec = R"({"seed": 42, "count": 50, "dim": 2, "ensemble": "generic"})";
  const CommandOutput a = verifyDocument(spec, {}, {});
  const CommandOutput b = verifyDocument(spec, {}, {});
  CHECK(a.text == b.text);
  CHECK(a.violations == 0);
  CHECK_THROWS_AS(verifyDocument(R"({"ensemble": "nope", "dim": 2})", {}, {}), Error);
}

}  // TEST_SUITE
