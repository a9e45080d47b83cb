#pragma once

#include <cstdint>
#include <random>

#include "linalg/matrix.hpp"

namespace rootsplit::oracle {

std::uint64_t splitmix64(std::uint64_t x);

// mt19937_64 with hand-written conversions so that every platform produces
// the same doubles: uniform = (bits >> 11) * 2^-53, normals by Box-Muller.
// Sample i of a run with seed s uses the stream splitmix64(s + i).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static Rng forSample(std::uint64_t seed, std::uint64_t index) { return Rng(splitmix64(splitmix64(seed) ^ index)); }

  double uniform();  // [0, 1)
  double normal();
  int uniformInt(int lo, int hi);  // inclusive
  Complex complexNormal();         // standard complex Gaussian
  Complex disk();                  // uniform in the unit disk

 private:
  std::mt19937_64 engine_;
  bool hasSpare_ = false;
  double spare_ = 0.0;
};

}  // namespace rootsplit::oracle
