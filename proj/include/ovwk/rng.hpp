#pragma once

#include <cstdint>
#include <utility>

namespace ovwk {

/// splitmix64. Chosen for workload generation because the recurrence is a
/// handful of integer ops, so any language reproduces the exact stream.
struct Rng {
  uint64_t state = 0;

  constexpr explicit Rng(uint64_t seed = 0) : state(seed) {}

  static constexpr uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  constexpr uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    return mix(state);
  }

  /// Uniform in [0, bound). bound = 0 yields 0. Modulo reduction: the bias is
  /// irrelevant for synthetic content and the reduction is portable.
  constexpr uint64_t next_below(uint64_t bound) {
    return bound ? next() % bound : 0;
  }

  /// Uniform signed value in [-mag, +mag].
  constexpr int64_t next_signed(uint64_t mag) {
    return static_cast<int64_t>(next_below(2 * mag + 1)) - static_cast<int64_t>(mag);
  }
};

/// Functional form of one step, matching the stated recurrence exactly.
constexpr std::pair<uint64_t, uint64_t> rng_next(uint64_t state) {
  uint64_t next_state = state + 0x9E3779B97F4A7C15ull;
  return {Rng::mix(next_state), next_state};
}

} // namespace ovwk
