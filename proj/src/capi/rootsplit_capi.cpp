#include "rootsplit/rootsplit.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "classify/classify.hpp"
#include "io/commands.hpp"
#include "io/input.hpp"
#include "io/output.hpp"

struct rootsplit_config {
  rootsplit::Tolerances tol;
};

struct rootsplit_rep {
  rootsplit::MonodromyRep rep;
};

struct rootsplit_result {
  rootsplit::Classification classification;
  std::string json;
};

namespace {

thread_local std::string lastError;

rootsplit_status fail(rootsplit_status s, std::string message) {
  lastError = std::move(message);
  return s;
}

rootsplit_status toStatus(rootsplit::ErrorCode c) { return static_cast<rootsplit_status>(static_cast<int>(c)); }

// Runs f, mapping exceptions to status codes.
template <typename F>
rootsplit_status guarded(F&& f) {
  try {
    lastError.clear();
    return f();
  } catch (const rootsplit::Error& e) {
    return fail(toStatus(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ROOTSPLIT_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ROOTSPLIT_E_INTERNAL, e.what());
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

const rootsplit::Tolerances& tolOf(const rootsplit_config* c) {
  static const rootsplit::Tolerances defaults;
  return c ? c->tol : defaults;
}

rootsplit::io::DocumentFlags flagsOf(unsigned flags) {
  return {(flags & ROOTSPLIT_FLAG_EXACT) != 0, (flags & ROOTSPLIT_FLAG_PRETTY) != 0,
          (flags & ROOTSPLIT_FLAG_KEEP_GOING) != 0};
}

rootsplit_status emit(const rootsplit::io::CommandOutput& out, char** output) {
  *output = duplicate(out.text);
  if (out.firstError) return fail(toStatus(*out.firstError), "one or more representations failed");
  return ROOTSPLIT_OK;
}

rootsplit::Matrix readMatrix(int n, const double* data) {
  rootsplit::Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = {data[2 * (i * n + j)], data[2 * (i * n + j) + 1]};
  return m;
}

}  // namespace

extern "C" {

const char* rootsplit_version(void) { return "1.0.0"; }

const char* rootsplit_status_name(rootsplit_status status) {
  if (status == ROOTSPLIT_OK) return "Ok";
  if (status < ROOTSPLIT_E_SINGULAR_MATRIX || status > ROOTSPLIT_E_INTERNAL) return "Unknown";
  return rootsplit::errorName(static_cast<rootsplit::ErrorCode>(status));
}

const char* rootsplit_last_error(void) { return lastError.c_str(); }

void rootsplit_string_free(char* s) { std::free(s); }

rootsplit_status rootsplit_config_create(rootsplit_config** out) {
  if (!out) return fail(ROOTSPLIT_E_INVALID_ARGUMENT, "out is NULL");
  return guarded([&] {
    *out = new rootsplit_config{};
    return ROOTSPLIT_OK;
  });
}

void rootsplit_config_destroy(rootsplit_config* config) { delete config; }

rootsplit_status rootsplit_config_set_tolerance(rootsplit_config* config, const char* name, double value) {
  if (!config || !name) return fail(ROOTSPLIT_E_INVALID_ARGUMENT, "config and name are required");
  return guarded([&] {
    config->tol.set(name, value);
    return ROOTSPLIT_OK;
  });
}

rootsplit_status rootsplit_config_get_tolerance(const rootsplit_config* config, const char* name, double* value) {
  if (!name || !value) return fail(ROOTSPLIT_E_INVALID_ARGUMENT, "name and value are required");
  return guarded([&] {
    *value = tolOf(config).get(name);
    return ROOTSPLIT_OK;
  });
}

rootsplit_status rootsplit_config_load_json(rootsplit_config* config, const char* json) {
  if (!config || !json) return fail(ROOTSPLIT_E_INVALID_ARGUMENT, "config and json are required");
  return guarded([&] {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(json);
    } catch (const nlohmann::json::parse_error& e) {
      throw rootsplit::Error(rootsplit::ErrorCode::SchemaError, std::string("config: ") + e.what());
    }
    rootsplit::Tolerances t = config->tol;
    rootsplit::io::applyConfig(doc, t);
    config->tol = t;
    return ROOTSPLIT_OK;
  });
}

rootsplit_status rootsplit_rep_create(int n, const double* m0, const double* m1, const char* label,
                                      const rootsplit_config* config, rootsplit_rep** out) {
  if (!m0 || !m1 || !out) return fail(ROOTSPLIT_E_INVALID_ARGUMENT, "m0, m1 and out are required");
  *out = nullptr;
  if (n < 1 || n > 3) return fail(ROOTSPLIT_E_DIMENSION, "n must be 1, 2 or 3");
  return guarded([&] {
    *out = new rootsplit_rep{
        rootsplit::MonodromyRep(readMatrix(n, m0), readMatrix(n, m1), label ? label : "", tolOf(config))};
    return ROOTSPLIT_OK;
  });
}

void rootsplit_rep_destroy(rootsplit_rep* rep) { delete rep; }

int rootsplit_rep_dim(const rootsplit_rep* rep) { return rep ? rep->rep.n() : 0; }

rootsplit_status rootsplit_chern_class(const rootsplit_rep* rep, const rootsplit_config* config, int* c1) {
  if (!rep || !c1) return fail(ROOTSPLIT_E_INVALID_ARGUMENT, "rep and c1 are required");
  return guarded([&] {
    *c1 = rootsplit::chernClass(rep->rep, tolOf(config)).c1;
    return ROOTSPLIT_OK;
  });
}

rootsplit_status rootsplit_is_irreducible(const rootsplit_rep* rep, const rootsplit_config* config, int* irreducible) {
  if (!rep || !irreducible) return fail(ROOTSPLIT_E_INVALID_ARGUMENT, "rep and irreducible are required");
  return guarded([&] {
    *irreducible = rootsplit::isIrreducible(rep->rep, tolOf(config)) ? 1 : 0;
    return ROOTSPLIT_OK;
  });
}

rootsplit_status rootsplit_classify(const rootsplit_rep* rep, const rootsplit_config* config, rootsplit_result** out) {
  if (!rep || !out) return fail(ROOTSPLIT_E_INVALID_ARGUMENT, "rep and out are required");
  return guarded([&] {
    const auto& tol = tolOf(config);
    auto c = rootsplit::classify(rep->rep, tol);
    std::string text = rootsplit::io::classificationJson(rep->rep, c, tol, {}).dump(2);
    *out = new rootsplit_result{std::move(c), std::move(text)};
    return ROOTSPLIT_OK;
  });
}

void rootsplit_result_destroy(rootsplit_result* result) { delete result; }

rootsplit_split_status rootsplit_result_status(const rootsplit_result* result) {
  return result && result->classification.result.determined() ? ROOTSPLIT_DETERMINED : ROOTSPLIT_CANDIDATES;
}

int rootsplit_result_option_count(const rootsplit_result* result) {
  return result ? static_cast<int>(result->classification.result.options.size()) : 0;
}

rootsplit_status rootsplit_result_option(const rootsplit_result* result, int index, int* roots, int capacity, int* dim) {
  if (!result || !dim) return fail(ROOTSPLIT_E_INVALID_ARGUMENT, "result and dim are required");
  const auto& options = result->classification.result.options;
  if (index < 0 || index >= static_cast<int>(options.size()))
    return fail(ROOTSPLIT_E_INVALID_ARGUMENT, "option index out of range");
  const auto& r = options[static_cast<std::size_t>(index)].roots();
  *dim = static_cast<int>(r.size());
  if (capacity < *dim || !roots) return fail(ROOTSPLIT_E_INVALID_ARGUMENT, "roots buffer too small");
  for (int i = 0; i < *dim; ++i) roots[i] = r[static_cast<std::size_t>(i)];
  return ROOTSPLIT_OK;
}

int rootsplit_result_c1(const rootsplit_result* result) { return result ? result->classification.chern.c1 : 0; }

rootsplit_status rootsplit_result_to_json(const rootsplit_result* result, char** out) {
  if (!result || !out) return fail(ROOTSPLIT_E_INVALID_ARGUMENT, "result and out are required");
  return guarded([&] {
    *out = duplicate(result->json);
    return ROOTSPLIT_OK;
  });
}

rootsplit_status rootsplit_classify_document(const char* input_json, const rootsplit_config* config, unsigned flags,
                                             char** output) {
  if (!input_json || !output) return fail(ROOTSPLIT_E_INVALID_ARGUMENT, "input_json and output are required");
  *output = nullptr;
  return guarded([&] { return emit(rootsplit::io::classifyDocument(input_json, tolOf(config), flagsOf(flags)), output); });
}

rootsplit_status rootsplit_chern_document(const char* input_json, const rootsplit_config* config, unsigned flags,
                                          char** output) {
  if (!input_json || !output) return fail(ROOTSPLIT_E_INVALID_ARGUMENT, "input_json and output are required");
  *output = nullptr;
  return guarded([&] { return emit(rootsplit::io::chernDocument(input_json, tolOf(config), flagsOf(flags)), output); });
}

rootsplit_status rootsplit_candidate_tree(int m, int d, const int* c1, unsigned flags, char** output) {
  if (!output) return fail(ROOTSPLIT_E_INVALID_ARGUMENT, "output is required");
  *output = nullptr;
  return guarded([&] {
    std::optional<int> c;
    if (c1) c = *c1;
    return emit(rootsplit::io::treeDocument(m, d, c, flagsOf(flags)), output);
  });
}

rootsplit_status rootsplit_verify(const char* spec_json, const rootsplit_config* config, unsigned flags, char** output,
                                  long* violations) {
  if (!output) return fail(ROOTSPLIT_E_INVALID_ARGUMENT, "output is required");
  *output = nullptr;
  return guarded([&] {
    const auto out = rootsplit::io::verifyDocument(spec_json ? spec_json : "", tolOf(config), flagsOf(flags));
    if (violations) *violations = out.violations;
    return emit(out, output);
  });
}

rootsplit_status rootsplit_example_document(const char* name, unsigned flags, char** output) {
  if (!name || !output) return fail(ROOTSPLIT_E_INVALID_ARGUMENT, "name and output are required");
  *output = nullptr;
  return guarded([&] { return emit(rootsplit::io::exampleDocument(name, flagsOf(flags)), output); });
}

}  // extern "C"
