#pragma once

#include <string>

#include "tessella/tiling.hpp"

namespace tessella {

// Grid of the region where each placement's cells share one character from
// the cycle a-z, A-Z, 0-9 and no two face-adjacent distinct placements share
// a character. 2D only.
std::string render_ascii(const Tiling& t);

// One unit rect per cell, deterministic fill color per placement id, tile
// boundaries stroked heavier than cell edges. 2D only.
std::string render_svg(const Tiling& t);

}  // namespace tessella
