#pragma once

#include <cstdint>
#include <random>

namespace balines::detail {

/// Generator for stream `index` under `seed`; both words feed the seed
/// sequence in full.
inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t index = 0) {
  std::seed_seq sseq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                     static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(sseq);
}

}  // namespace balines::detail
