#pragma once

#include <string>

#include "balines/balance.hpp"
#include "balines/geometry.hpp"

namespace balines {

/// SVG drawing of the point set with every witness line extended to the
/// viewport. Output is deterministic for a given input.
std::string render_svg(const Instance& inst, const WitnessSet& lines);

}  // namespace balines
