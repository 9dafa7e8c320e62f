#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tessella/cell.hpp"

namespace tessella {

// A finite set of lattice cells in one dimension. Cells are kept unique and
// sorted in scanline order. Connectivity is a checkable property, not an
// invariant; operations state their own preconditions.
class Polyomino {
 public:
  Polyomino() = default;  // the empty region
  Polyomino(int dim, std::vector<Cell> cells);

  // Infers the dimension from the first cell; rejects empty input.
  static Polyomino from_cells(std::vector<Cell> cells);

  int dim() const { return dim_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  const std::vector<Cell>& cells() const { return cells_; }

  bool contains(const Cell& c) const;  // binary search

  Polyomino translated(const Cell& by) const;
  // Translates so the coordinatewise minimum is the origin.
  Polyomino normalized() const;

  std::pair<Cell, Cell> bounding_box() const;  // {min, max}; region must be nonempty

  bool operator==(const Polyomino& o) const { return dim_ == o.dim_ && cells_ == o.cells_; }

 private:
  int dim_ = 0;
  std::vector<Cell> cells_;
};

// Face-adjacency flood traversal. Requires a nonempty region.
bool is_connected(const Polyomino& p);

// True iff p is connected and its complement, restricted to the bounding box
// padded by one ring, is a single component. 2D only.
bool is_simply_connected(const Polyomino& p);

}  // namespace tessella
