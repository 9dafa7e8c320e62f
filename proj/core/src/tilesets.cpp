#include "tessella/tilesets.hpp"

namespace tessella {

namespace {

Tile domino2() { return Tile(2, {Cell::xy(0, 0), Cell::xy(1, 0)}, "domino"); }
Tile l_tromino() { return Tile(2, {Cell::xy(0, 0), Cell::xy(1, 0), Cell::xy(1, 1)}, "L"); }
Tile bar3() { return Tile(2, {Cell::xy(0, 0), Cell::xy(1, 0), Cell::xy(2, 0)}, "bar3"); }
Tile t_tetromino() { return Tile(2, {Cell::xy(0, 0), Cell::xy(1, 0), Cell::xy(2, 0), Cell::xy(1, 1)}, "T"); }
Tile plus_pentomino() {
  return Tile(2, {Cell::xy(1, 0), Cell::xy(0, 1), Cell::xy(1, 1), Cell::xy(2, 1), Cell::xy(1, 2)}, "plus");
}

}  // namespace

TileSet tileset_domino_l() { return TileSet::make(2, Symmetry::fixed, {domino2(), l_tromino()}); }

TileSet tileset_s2() {
  return TileSet::make(2, Symmetry::rotations, {domino2(), l_tromino(), bar3(), t_tetromino(), plus_pentomino()});
}

TileSet tileset_sa() {
  return TileSet::make(2, Symmetry::rotations, {domino2(), l_tromino(), bar3(), t_tetromino()});
}

Tile domino_tile(int dim) {
  Cell a = Cell::zero(dim);
  Cell b = Cell::zero(dim);
  b[0] = 1;
  return Tile(dim, {a, b}, "domino");
}

}  // namespace tessella
