#pragma once

#include <cstdint>
#include <random>

namespace ellbasis {

using Rng = std::mt19937_64;

inline uint64_t uniform_below(Rng& rng, uint64_t n) {
  return std::uniform_int_distribution<uint64_t>(0, n - 1)(rng);
}

}  // namespace ellbasis
