#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace rootsplit {

// Numerical thresholds shared by every module. Names match the `--tol-*`
// command-line flags and the keys of the "tolerances" config object.
struct Tolerances {
  double singular = 1e-12;   // |det A| at or below this is singular
  double rank = 1e-9;        // relative singular-value cutoff for ranks
  double recon = 1e-8;       // reconstruction / round-trip residuals
  double condMax = 1e8;      // Jordan basis condition number before low confidence
  double cluster = 1e-7;     // eigenvalue merge distance, relative to spectral radius
  double branch = 1e-9;      // distance from the cut at which an angle is snapped to 0
  double invariance = 1e-8;  // relative invariant-subspace residual
  double integer = 1e-6;     // c1 integer snapping
  double sigma = 1e-9;       // dim-2 irreducibility certificate, relative

  // Sets a tolerance by its short name ("sing", "rank", "recon", "cond",
  // "cluster", "branch", "inv", "int", "sigma"). Throws InvalidArgument for an
  // unknown name or a non-positive value.
  void set(std::string_view name, double value);
  double get(std::string_view name) const;

  static const std::vector<std::string>& names();
};

}  // namespace rootsplit
