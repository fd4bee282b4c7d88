#pragma once

#include <cstdint>
#include <random>

namespace mldp::detail {

// Uniform draw from [lo, hi] by rejection sampling. std::uniform_int_
// distribution is implementation-defined, so seeded outputs would differ
// across standard libraries; mt19937_64 plus this sampler is portable.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t lo,
                             std::uint64_t hi) {
  const std::uint64_t span = hi - lo + 1;
  if (span == 0)
    return rng();
  // Accept draws >= 2^64 mod span; the accepted range has size divisible
  // by span, so the remainder is unbiased.
  const std::uint64_t reject_below = (0 - span) % span;
  std::uint64_t x = rng();
  while (x < reject_below)
    x = rng();
  return lo + x % span;
}

}  // namespace mldp::detail
