#pragma once

#include <cstdint>

namespace perfcode {

// Deterministic 32-bit linear congruential generator (Numerical Recipes
// constants).  Used wherever sampling must be reproducible across runs and
// platforms; std::mt19937 would also be deterministic but its distribution
// adapters are not portable across standard library implementations.
class Lcg {
 public:
  explicit Lcg(std::uint32_t seed = 12345) : state_(seed) {}

  std::uint32_t next() {
    state_ = state_ * 1664525u + 1013904223u;
    return state_;
  }

  // Uniformly-ish distributed value in [0, n).  Modulo bias is irrelevant for
  // the small n used here (n is a group order, far below 2^32 / 1000).
  std::uint32_t below(std::uint32_t n) { return n == 0 ? 0 : next() % n; }

 private:
  std::uint32_t state_;
};

}  // namespace perfcode
