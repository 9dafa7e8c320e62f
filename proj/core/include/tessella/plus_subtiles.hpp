#pragma once

#include <cstdint>
#include <vector>

#include "tessella/tile.hpp"

namespace tessella {

// The d-dimensional plus: one central cube and 2d unit spokes along the
// positive and negative axis directions. Size 2d + 1.
Tile plus_tile(int dim);

// All connected subsets of the plus containing the center, minus the bare
// unit cell, one canonical representative (rotations and reflections) per
// equivalence class. Classes are computed exactly, by closing spoke subsets
// under the group generators; representatives are canonical tile forms.
std::vector<Tile> plus_subtiles(int dim);

// How many such classes use exactly k spokes, 1 <= k <= 2d.
std::int64_t count_plus_subtiles_with_spokes(int dim, int spokes);

// Closed form d(d+3)/2 for the family size.
std::int64_t plus_subtile_count(int dim);

}  // namespace tessella
