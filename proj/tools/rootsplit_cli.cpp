// Command-line front end over the rootsplit C API.
#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "rootsplit/rootsplit.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitSchema = 2;
constexpr int kExitComputation = 3;

struct Common {
  std::string out;
  bool pretty = false;
  bool exact = false;
  bool keepGoing = false;
  std::string config;
  std::map<std::string, double> tolerances;
};

struct ConfigDeleter {
  void operator()(rootsplit_config* c) const { rootsplit_config_destroy(c); }
};
using ConfigPtr = std::unique_ptr<rootsplit_config, ConfigDeleter>;

int exitFor(rootsplit_status s) {
  if (s == ROOTSPLIT_OK) return kExitOk;
  if (s == ROOTSPLIT_E_SCHEMA) return kExitSchema;
  return kExitComputation;
}

int report(rootsplit_status s) {
  std::cerr << "error: " << rootsplit_status_name(s) << ": " << rootsplit_last_error() << "\n";
  return exitFor(s);
}

std::optional<std::string> readText(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  return std::string(std::istreambuf_iterator<char>(in), {});
}

bool writeText(const std::string& path, const char* text) {
  if (path.empty()) {
    std::cout << text;
    return static_cast<bool>(std::cout.flush());
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

// Defaults, then the config file, then --tol-* flags.
rootsplit_status makeConfig(const Common& c, ConfigPtr& config) {
  rootsplit_config* raw = nullptr;
  rootsplit_status s = rootsplit_config_create(&raw);
  if (s != ROOTSPLIT_OK) return s;
  config.reset(raw);
  if (!c.config.empty()) {
    const auto text = readText(c.config);
    if (!text) {
      std::cerr << "error: cannot read config file " << c.config << "\n";
      return ROOTSPLIT_E_SCHEMA;
    }
    s = rootsplit_config_load_json(config.get(), text->c_str());
    if (s != ROOTSPLIT_OK) return s;
  }
  for (const auto& [name, value] : c.tolerances) {
    s = rootsplit_config_set_tolerance(config.get(), name.c_str(), value);
    if (s != ROOTSPLIT_OK) return s;
  }
  return ROOTSPLIT_OK;
}

unsigned flagsOf(const Common& c) {
  return (c.exact ? ROOTSPLIT_FLAG_EXACT : 0u) | (c.pretty ? ROOTSPLIT_FLAG_PRETTY : 0u) |
         (c.keepGoing ? ROOTSPLIT_FLAG_KEEP_GOING : 0u);
}

void addTolerances(CLI::App* app, Common& c) {
  static const char* names[] = {"sing", "rank", "recon", "cond", "cluster", "branch", "inv", "int", "sigma"};
  for (const char* name : names) {
    app->add_option_function<double>(
           std::string("--tol-") + name, [&c, name](double v) { c.tolerances[name] = v; },
           std::string("override tolerance '") + name + "'")
        ->group("Tolerances");
  }
  app->add_option("--config", c.config, "JSON file with a \"tolerances\" object")->group("Tolerances");
}

// Emits the output (also under keep-going failures) and maps the status.
int finish(rootsplit_status s, char* output, const Common& c) {
  if (output) {
    const bool ok = writeText(c.out, output);
    rootsplit_string_free(output);
    if (!ok) {
      std::cerr << "error: cannot write " << c.out << "\n";
      return kExitComputation;
    }
  }
  if (s != ROOTSPLIT_OK) return report(s);
  return kExitOk;
}

using DocumentFn = rootsplit_status (*)(const char*, const rootsplit_config*, unsigned, char**);

int runDocument(DocumentFn fn, const std::string& path, const Common& c) {
  const auto text = readText(path);
  if (!text) {
    std::cerr << "error: cannot read " << path << "\n";
    return kExitSchema;
  }
  ConfigPtr config;
  if (rootsplit_status s = makeConfig(c, config); s != ROOTSPLIT_OK) {
    report(s);
    return kExitSchema;
  }
  char* output = nullptr;
  const rootsplit_status s = fn(text->c_str(), config.get(), flagsOf(c), &output);
  return finish(s, output, c);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Splitting types of extended logarithmic connections from monodromy pairs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", rootsplit_version());
  Common common;
  std::string inputPath;

  auto* classify = app.add_subcommand("classify", "classify every representation of an input document");
  classify->add_option("input", inputPath, "input JSON document ('-' for stdin)")->required();
  classify->add_option("--out", common.out, "write output to this file");
  classify->add_flag("--pretty", common.pretty, "human-readable table");
  classify->add_flag("--exact", common.exact, "verify rational eigen-angles exactly");
  classify->add_flag("--keep-going", common.keepGoing, "emit error objects for failing reps and continue");
  addTolerances(classify, common);

  auto* chern = app.add_subcommand("chern", "first Chern class of every representation");
  chern->add_option("input", inputPath, "input JSON document ('-' for stdin)")->required();
  chern->add_option("--out", common.out, "write output to this file");
  chern->add_flag("--pretty", common.pretty, "human-readable table");
  chern->add_flag("--exact", common.exact, "verify rational eigen-angles exactly");
  chern->add_flag("--keep-going", common.keepGoing, "emit error objects for failing reps and continue");
  addTolerances(chern, common);

  int treeM = 3;
  int treeD = 3;
  std::optional<int> treeC1;
  auto* tree = app.add_subcommand("tree", "enumerate the candidate root patterns of the tree of roots");
  tree->add_option("m", treeM, "number of punctures (>= 2)")->required();
  tree->add_option("d", treeD, "depth, the rank (>= 1)")->required();
  tree->add_option("c1", treeC1, "first Chern class; solves for concrete roots");
  tree->add_option("--c1-value", treeC1, "same as the positional c1, convenient for negative values");
  tree->add_option("--out", common.out, "write output to this file");
  tree->add_flag("--pretty", common.pretty, "human-readable listing");

  std::uint64_t seed = 1;
  std::optional<int> dim;
  std::optional<int> count;
  std::optional<std::string> ensemble;
  std::optional<std::string> split;
  auto* verify = app.add_subcommand("verify", "run the seeded sampling checks");
  verify->add_option("--seed", seed, "64-bit seed (default 1)");
  verify->add_option("--ensemble", ensemble, "generic, unitary, rationalAngle, blockUpperTriangular, decomposable");
  verify->add_option("--dim", dim, "dimension 1..3");
  verify->add_option("--count", count, "samples per ensemble");
  verify->add_option("--split", split, "part dimensions for the decomposable ensemble, e.g. 2+1");
  verify->add_option("--out", common.out, "write the JSON report to this file");
  verify->add_flag("--pretty", common.pretty, "one summary line per ensemble");
  addTolerances(verify, common);

  std::string exampleName;
  auto* example = app.add_subcommand("example", "print a bundled input document");
  example->add_option("name", exampleName, "pslz-section5 or aux-character")->required();
  example->add_option("--out", common.out, "write output to this file");
  example->add_flag("--pretty", common.pretty, "indented JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitSchema;
  }

  if (*classify) return runDocument(rootsplit_classify_document, inputPath, common);
  if (*chern) return runDocument(rootsplit_chern_document, inputPath, common);

  if (*tree) {
    char* output = nullptr;
    const int* c1 = treeC1 ? &*treeC1 : nullptr;
    const rootsplit_status s = rootsplit_candidate_tree(treeM, treeD, c1, flagsOf(common), &output);
    if (s == ROOTSPLIT_E_INVALID_ARGUMENT) {
      report(s);
      return kExitSchema;
    }
    return finish(s, output, common);
  }

  if (*verify) {
    std::ostringstream spec;
    spec << "{\"seed\": " << seed;
    if (dim) spec << ", \"dim\": " << *dim;
    if (count) spec << ", \"count\": " << *count;
    if (ensemble) spec << ", \"ensemble\": \"" << *ensemble << "\"";
    if (split) {
      spec << ", \"split\": [";
      std::string part;
      std::istringstream parts(*split);
      bool first = true;
      while (std::getline(parts, part, '+')) {
        int value = 0;
        try {
          std::size_t used = 0;
          value = std::stoi(part, &used);
          if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
          std::cerr << "error: --split expects parts like 2+1, got '" << *split << "'\n";
          return kExitSchema;
        }
        spec << (first ? "" : ", ") << value;
        first = false;
      }
      spec << "]";
    }
    spec << "}";
    ConfigPtr config;
    if (rootsplit_status s = makeConfig(common, config); s != ROOTSPLIT_OK) {
      report(s);
      return kExitSchema;
    }
    char* output = nullptr;
    long violations = 0;
    const rootsplit_status s = rootsplit_verify(spec.str().c_str(), config.get(), flagsOf(common), &output, &violations);
    if (s == ROOTSPLIT_E_INVALID_ARGUMENT) {
      report(s);
      return kExitSchema;
    }
    const int code = finish(s, output, common);
    if (code != kExitOk) return code;
    if (violations > 0) {
      std::cerr << "verify: " << violations << " violations\n";
      return kExitViolations;
    }
    return kExitOk;
  }

  if (*example) {
    char* output = nullptr;
    const rootsplit_status s = rootsplit_example_document(exampleName.c_str(), flagsOf(common), &output);
    if (s == ROOTSPLIT_E_INVALID_ARGUMENT) {
      report(s);
      return kExitSchema;
    }
    return finish(s, output, common);
  }
  return kExitSchema;
}
