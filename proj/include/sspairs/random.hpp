#pragma once

// Seeded randomness. Every random draw in the toolkit goes through Rng, which
// wraps std::mt19937_64 (bit-exact across platforms) and maps its output to
// ranges by rejection sampling, so results depend only on the seed.

#include "sspairs/matrix.hpp"

#include <cstdint>
#include <random>

namespace sspairs {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform_int(long lo, long hi);
  /// Uniform double in [0, 1).
  double uniform_real();

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Product of 3-6 elementary matrices I + c E_ij (i != j) with c in [-3, 3]\{0}.
RMatrix random_elementary_sl(Rng& rng, std::size_t n);

/// Default seed: $SSPAIRS_SEED if set, otherwise 20240917.
std::uint64_t default_seed();

}  // namespace sspairs
