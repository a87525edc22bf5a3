#pragma once

#include <cstdint>

#include "balines/geometry.hpp"

namespace balines {

/// `blue` + `red` points with integer coordinates in [-bound, bound], in
/// general position: no coincident points, no three collinear, no two
/// connecting lines parallel. Colors are assigned to ids in random order.
/// Throws BadParams for an odd or too small total and GenerationExhausted
/// when rejection sampling stalls (bound too small for the point count).
Instance random_instance(int blue, int red, std::int64_t bound, std::uint64_t seed);

/// k blue and k red points on a circle, the blue ones on the left arc and the
/// red ones on the right arc. Such a set has exactly k balanced lines.
Instance separated_instance(int k, std::uint64_t seed);

}  // namespace balines
