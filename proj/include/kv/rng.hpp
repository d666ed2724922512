#pragma once

#include <cstdint>
#include <random>

#include "kv/fp.hpp"

namespace kv {

// Deterministic RNG used everywhere randomness is needed.  Draws go
// through uniform_below (rejection sampling on the raw 64-bit stream) so
// that a given seed yields the same sequence on every platform; the
// std::uniform_* distributions make no such promise.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t uniform_below(std::uint64_t n) {
    // largest multiple of n that fits in 64 bits, as a rejection bound
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    for (;;) {
      std::uint64_t r = engine_();
      if (r < limit) return r % n;
    }
  }

  int uniform_int(int lo, int hi) {  // inclusive ends
    return lo + static_cast<int>(uniform_below(std::uint64_t(hi - lo + 1)));
  }

  Fp field_element() {
    return Fp::from_int(
        static_cast<long long>(uniform_below(field_characteristic())));
  }

  Fp nonzero_field_element() {
    return Fp::from_int(
        1 + static_cast<long long>(uniform_below(field_characteristic() - 1)));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace kv
