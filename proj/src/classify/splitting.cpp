#include "classify/splitting.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace rootsplit {

SplittingType::SplittingType(std::vector<int> roots) : roots_(std::move(roots)) {
  std::sort(roots_.begin(), roots_.end(), std::greater<>());
}

int SplittingType::sum() const { return std::accumulate(roots_.begin(), roots_.end(), 0); }

bool SplittingType::contains(const SplittingType& other) const {
  std::vector<int> a(roots_.rbegin(), roots_.rend());
  std::vector<int> b(other.roots_.rbegin(), other.roots_.rend());
  return std::includes(a.begin(), a.end(), b.begin(), b.end());
}

std::string SplittingType::canonical() const {
  std::string s = "(";
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(roots_[i]);
  }
  return s + ")";
}

SplittingType operator+(const SplittingType& a, const SplittingType& b) {
  std::vector<int> r = a.roots_;
  r.insert(r.end(), b.roots_.begin(), b.roots_.end());
  return SplittingType(std::move(r));
}

void SplittingResult::normalize() {
  if (kappa.size() != options.size()) {
    std::sort(options.begin(), options.end(), std::greater<>());
    options.erase(std::unique(options.begin(), options.end()), options.end());
  }
  status = options.size() == 1 ? SplitStatus::Determined : SplitStatus::Candidates;
  if (!options.empty()) {
    int lo = options.front().max();
    int hi = lo;
    for (const SplittingType& o : options) {
      lo = std::min(lo, o.max());
      hi = std::max(hi, o.max());
    }
    minimalWeightRange = {lo, hi};
  }
}

CohomologyDims CohomologyDims::ofTwist(int d) { return {std::max(d + 1, 0), std::max(-d - 1, 0)}; }

CohomologyDims CohomologyDims::of(const SplittingType& t) {
  CohomologyDims c;
  for (int d : t.roots()) c = c + ofTwist(d);
  return c;
}

}  // namespace rootsplit
