#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rep/rep.hpp"

namespace rootsplit::io {

inline constexpr const char* kFormatVersion = "1.0";

struct RepInput {
  std::string label;
  exact::ExactMatrix m0;
  exact::ExactMatrix m1;
};

struct InputDocument {
  std::string version;
  std::vector<RepInput> reps;
};

// Structural validation mirroring docs/schema/input.schema.json. Throws
// SchemaError naming the offending JSON path.
InputDocument parseInput(const nlohmann::json& doc);
InputDocument parseInput(const std::string& text);

nlohmann::json inputJson(const InputDocument& doc);

// Bundled presets as input documents; throws InvalidArgument when unknown.
nlohmann::json presetDocument(const std::string& name);
const std::vector<std::string>& presetNames();

// Reads {"tolerances": {"sing": ..., ...}} into `tol`; unknown keys are a
// SchemaError.
void applyConfig(const nlohmann::json& config, Tolerances& tol);

}  // namespace rootsplit::io
