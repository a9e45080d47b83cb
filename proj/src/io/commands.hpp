#pragma once

#include <optional>
#include <string>

#include "core/error.hpp"
#include "core/tolerances.hpp"

namespace rootsplit::io {

struct DocumentFlags {
  bool exact = false;
  bool pretty = false;
  bool keepGoing = false;
};

struct CommandOutput {
  std::string text;
  std::optional<ErrorCode> firstError;  // set when some rep failed under keepGoing
  long violations = 0;                  // verify only
};

// Each throws Error on failure (SchemaError for malformed input). With
// keepGoing, per-rep failures become error objects and only the first
// failure code is reported.
CommandOutput classifyDocument(const std::string& inputJson, const Tolerances& tol, const DocumentFlags& flags);
CommandOutput chernDocument(const std::string& inputJson, const Tolerances& tol, const DocumentFlags& flags);
CommandOutput treeDocument(int m, int d, std::optional<int> c1, const DocumentFlags& flags);
CommandOutput exampleDocument(const std::string& name, const DocumentFlags& flags);

// specJson keys (all optional): seed, count, dim, ensemble, split. Without
// dim and ensemble the default suite runs.
CommandOutput verifyDocument(const std::string& specJson, const Tolerances& tol, const DocumentFlags& flags);

}  // namespace rootsplit::io
