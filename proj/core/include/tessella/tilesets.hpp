#pragma once

#include "tessella/tile.hpp"

namespace tessella {

// The fixed-orientation pair: horizontal domino and the bent tromino with its
// top cell over the right base cell.
TileSet tileset_domino_l();

// Domino, L-tromino, 3-bar, T-tetromino and plus-pentomino, rotations allowed.
TileSet tileset_s2();

// tileset_s2 without the plus, rotations allowed.
TileSet tileset_sa();

// Two adjacent unit cubes along the first axis, in dimension d.
Tile domino_tile(int dim);

}  // namespace tessella
