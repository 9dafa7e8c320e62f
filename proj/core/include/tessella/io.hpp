#pragma once

#include <stdexcept>
#include <string>

#include "tessella/tiling.hpp"

namespace tessella {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class TextFormat { ascii, json };

// ASCII region grammar: lines over {'#', '.'}; '#' marks a cell. Row r from
// the top maps to y = rows-1-r, column c maps to x = c. 2D only.
Polyomino parse_region_ascii(const std::string& text);
std::string emit_region_ascii(const Polyomino& region);

// JSON region: {"dim": d, "cells": [[...], ...]}.
Polyomino parse_region_json(const std::string& text);
std::string emit_region_json(const Polyomino& region);

Polyomino parse_region(const std::string& text, TextFormat format);
std::string emit_region(const Polyomino& region, TextFormat format);

// JSON tiling: {"region": <region>, "tiles": [{"name": n, "cells": [[...]]}]}.
// Placements are reconstructed against the given tile set.
std::string emit_tiling_json(const Tiling& t);
Tiling parse_tiling_json(const std::string& text, const TileSet& set);

// ASCII tiling: the region grid where each tile's cells share one character
// from the cycle a-z, A-Z, 0-9 and face-adjacent distinct tiles differ.
// Emission lives in render.hpp; parsing recovers placements by connected
// same-letter components matched against the tile set.
Tiling parse_tiling_ascii(const std::string& text, const TileSet& set);

// JSON tile set: {"dim": d, "symmetry": s, "tiles": [{"name": n, "cells": [[...]]}]}.
TileSet parse_tileset_json(const std::string& text);
std::string emit_tileset_json(const TileSet& set);

}  // namespace tessella
