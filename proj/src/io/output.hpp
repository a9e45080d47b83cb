#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "classify/classify.hpp"
#include "core/error.hpp"

namespace rootsplit::io {

nlohmann::json complexJson(Complex z);
nlohmann::json chernJson(const ChernData& c);
nlohmann::json boundsJson(const std::vector<BoundReport>& bounds);
nlohmann::json resultJson(const SplittingResult& r);
// Kind, sigma, and the roots of the sub and quotient of every sequence.
nlohmann::json compositionJson(const CompositionData& comp, const Tolerances& tol);
nlohmann::json classificationJson(const MonodromyRep& rep, const Classification& c, const Tolerances& tol,
                                  const std::vector<std::string>& inputNotes);
nlohmann::json errorJson(const std::string& label, const Error& e);
nlohmann::json treeJson(int m, int d, std::optional<int> c1, const CandidateTree& tree);

// Plain-text tables for --pretty.
std::string prettyClassify(const nlohmann::json& output);
std::string prettyChern(const nlohmann::json& output);
std::string prettyTree(const nlohmann::json& output);

}  // namespace rootsplit::io
