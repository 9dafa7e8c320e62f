#pragma once

#include <string>
#include <vector>

#include "tessella/cell.hpp"
#include "tessella/polyomino.hpp"
#include "tessella/symmetry.hpp"

namespace tessella {

// A simply connected cell shape, normalized so the coordinatewise minimum is
// the origin. Cells are sorted in scanline order. The name is cosmetic and
// takes no part in equality.
class Tile {
 public:
  Tile(int dim, std::vector<Cell> cells, std::string name = "");
  explicit Tile(const Polyomino& shape, std::string name = "");

  // Skips the simple-connectivity validation; for images of already valid
  // tiles under lattice symmetries, which preserve it.
  static Tile unchecked(int dim, std::vector<Cell> cells, std::string name = "");

  int dim() const { return dim_; }
  std::size_t size() const { return cells_.size(); }
  const std::vector<Cell>& cells() const { return cells_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  Polyomino as_polyomino() const { return Polyomino(dim_, cells_); }
  bool contains_cell(const Cell& c) const;

  // Cells outside the tile that are face-adjacent to it, in scan order.
  std::vector<Cell> boundary_cells() const;

  bool operator==(const Tile& o) const { return dim_ == o.dim_ && cells_ == o.cells_; }
  bool operator!=(const Tile& o) const { return !(*this == o); }
  bool operator<(const Tile& o) const;  // by size, then cell-list scan order

 private:
  Tile() = default;
  int dim_ = 0;
  std::vector<Cell> cells_;
  std::string name_;
};

struct TileHash {
  std::size_t operator()(const Tile& t) const;
};

// The least normalized image of t over the symmetry group; idempotent and
// constant on orbits.
Tile canonical_tile_form(const Tile& t, Symmetry mode);

// All distinct normalized images of t, sorted. Size divides the group order.
std::vector<Tile> tile_orbit(const Tile& t, Symmetry mode);

// True iff some admissible image of inner fits inside outer at some offset.
bool tile_fits_inside(const Tile& inner, const Tile& outer, Symmetry mode);

// A set of tiles with a symmetry mode governing admissible placements.
// No two members may be equivalent under the declared symmetry.
struct TileSet {
  int dim = 0;
  Symmetry symmetry = Symmetry::fixed;
  std::vector<Tile> tiles;

  static TileSet make(int dim, Symmetry symmetry, std::vector<Tile> tiles);
  const Tile& operator[](std::size_t i) const { return tiles[i]; }
  std::size_t size() const { return tiles.size(); }
};

// The minimal elements of the set under the fits-inside relation: every
// non-member contains some member, and no member contains another.
std::vector<Tile> generating_tiles(const TileSet& set);

}  // namespace tessella
