#pragma once

#include <cstdint>
#include <random>

#include "eucalc/types.hpp"

namespace eucalc {

// Deterministic RNG used by the model generator and the fuzz driver. The
// bounded draw is written out by hand because std::uniform_int_distribution
// is not pinned by the standard; mt19937_64 itself is.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  Int uniform(Int lo, Int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<Int>(engine_() % span);
  }

  bool coin() { return (engine_() & 1u) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace eucalc
