#include "sspairs/random.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace sspairs {

long Rng::uniform_int(long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<long>(engine_());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<long>(x % span);
}

double Rng::uniform_real() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

RMatrix random_elementary_sl(Rng& rng, std::size_t n) {
  RMatrix g = RMatrix::identity(n);
  if (n < 2) return g;
  const long factors = rng.uniform_int(3, 6);
  for (long f = 0; f < factors; ++f) {
    const auto i = static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    long c = rng.uniform_int(-3, 2);
    if (c >= 0) ++c;
    // Left-multiply by I + c E_ij: row i += c * row j.
    for (std::size_t k = 0; k < n; ++k) g(i, k) += c * g(j, k);
  }
  return g;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SSPAIRS_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("SSPAIRS_SEED is not an unsigned integer: ") + env);
    }
  }
  return 20240917ULL;
}

}  // namespace sspairs
