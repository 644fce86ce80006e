#pragma once

#include <cstdint>
#include <random>

namespace lpeval::detail {

// Lemire multiply-shift reduction: uniform value in [0, bound) from one
// 64-bit mt19937_64 draw. Both the generator and this mapping are pinned:
// they define the cross-platform reproducibility contract for splits and
// synthetic graphs.
inline std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(rng()) * bound) >> 64);
}

} // namespace lpeval::detail
