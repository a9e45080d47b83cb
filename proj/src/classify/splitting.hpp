#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rootsplit {

// A multiset of roots, kept sorted in descending order.
class SplittingType {
 public:
  SplittingType() = default;
  explicit SplittingType(std::vector<int> roots);

  const std::vector<int>& roots() const noexcept { return roots_; }
  int dim() const noexcept { return static_cast<int>(roots_.size()); }
  int sum() const;
  int max() const { return roots_.front(); }
  int min() const { return roots_.back(); }
  bool contains(const SplittingType& other) const;  // multiset inclusion

  // "(x1,x2,x3)" in descending order.
  std::string canonical() const;

  friend SplittingType operator+(const SplittingType& a, const SplittingType& b);  // multiset union
  friend bool operator==(const SplittingType&, const SplittingType&) = default;
  friend auto operator<=>(const SplittingType&, const SplittingType&) = default;

 private:
  std::vector<int> roots_;
};

enum class SplitStatus { Determined, Candidates };

struct SplittingResult {
  SplitStatus status = SplitStatus::Determined;
  std::vector<SplittingType> options;
  std::vector<std::string> provenance;
  // Range of -xi_min = max root over the options.
  std::pair<int, int> minimalWeightRange{0, 0};
  // Per-option kappa with c1 = 3 * max root - kappa (irreducible n = 3 only).
  std::vector<int> kappa;
  std::vector<std::string> notes;

  // Sorts and deduplicates options, sets status and the weight range.
  void normalize();
  bool determined() const { return status == SplitStatus::Determined; }
};

// Cohomology dimensions of a sum of line bundles on the projective line.
struct CohomologyDims {
  int h0 = 0;
  int h1 = 0;

  static CohomologyDims ofTwist(int d);
  static CohomologyDims of(const SplittingType& t);
  friend CohomologyDims operator+(CohomologyDims a, CohomologyDims b) { return {a.h0 + b.h0, a.h1 + b.h1}; }
  friend bool operator==(const CohomologyDims&, const CohomologyDims&) = default;
};

}  // namespace rootsplit
