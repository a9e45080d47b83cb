#include "core/tolerances.hpp"

#include <cmath>

#include "core/error.hpp"

namespace rootsplit {

namespace {

double* slot(Tolerances& t, std::string_view name) {
  if (name == "sing") return &t.singular;
  if (name == "rank") return &t.rank;
  if (name == "recon") return &t.recon;
  if (name == "cond") return &t.condMax;
  if (name == "cluster") return &t.cluster;
  if (name == "branch") return &t.branch;
  if (name == "inv") return &t.invariance;
  if (name == "int") return &t.integer;
  if (name == "sigma") return &t.sigma;
  return nullptr;
}

}  // namespace

void Tolerances::set(std::string_view name, double value) {
  double* p = slot(*this, name);
  if (p == nullptr)
    throw Error(ErrorCode::InvalidArgument, "unknown tolerance '" + std::string(name) + "'");
  if (!std::isfinite(value) || value <= 0.0)
    throw Error(ErrorCode::InvalidArgument,
                "tolerance '" + std::string(name) + "' must be positive and finite");
  *p = value;
}

double Tolerances::get(std::string_view name) const {
  Tolerances copy = *this;
  double* p = slot(copy, name);
  if (p == nullptr)
    throw Error(ErrorCode::InvalidArgument, "unknown tolerance '" + std::string(name) + "'");
  return *p;
}

const std::vector<std::string>& Tolerances::names() {
  static const std::vector<std::string> kNames = {"sing", "rank",   "recon", "cond", "cluster",
                                                  "branch", "inv", "int",   "sigma"};
  return kNames;
}

}  // namespace rootsplit
