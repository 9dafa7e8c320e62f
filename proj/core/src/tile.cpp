#include "tessella/tile.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace tessella {

namespace {

std::vector<Cell> normalize_cells(int dim, std::vector<Cell> cells) {
  if (cells.empty()) throw std::invalid_argument("tile must be nonempty");
  Cell mn = cells.front();
  for (const Cell& c : cells) {
    if (c.dim != dim) throw std::invalid_argument("cell dimension mismatch in tile");
    for (int i = 0; i < dim; ++i) mn[i] = std::min(mn[i], c[i]);
  }
  for (Cell& c : cells) c = c - mn;
  std::sort(cells.begin(), cells.end(), scan_less);
  auto dup = std::adjacent_find(cells.begin(), cells.end());
  if (dup != cells.end()) throw std::invalid_argument("duplicate cell in tile");
  return cells;
}

// Simple connectivity: connected, and the complement of the shape within the
// bounding box padded by one ring is a single component. In 2D this is the
// usual no-holes condition.
bool box_complement_connected(int dim, const std::vector<Cell>& cells) {
  Cell mn = cells.front(), mx = cells.front();
  for (const Cell& c : cells) {
    for (int i = 0; i < dim; ++i) {
      mn[i] = std::min(mn[i], c[i]);
      mx[i] = std::max(mx[i], c[i]);
    }
  }
  std::unordered_set<Cell, CellHash> inside(cells.begin(), cells.end());
  auto in_box = [&](const Cell& c) {
    for (int i = 0; i < dim; ++i)
      if (c[i] < mn[i] - 1 || c[i] > mx[i] + 1) return false;
    return true;
  };
  Cell start = mn;
  for (int i = 0; i < dim; ++i) start[i] = mn[i] - 1;
  std::unordered_set<Cell, CellHash> seen{start};
  std::vector<Cell> stack{start};
  while (!stack.empty()) {
    Cell c = stack.back();
    stack.pop_back();
    for (const Cell& nb : face_neighbors(c)) {
      if (!in_box(nb) || inside.count(nb) || seen.count(nb)) continue;
      seen.insert(nb);
      stack.push_back(nb);
    }
  }
  std::size_t box_cells = 1;
  for (int i = 0; i < dim; ++i) box_cells *= static_cast<std::size_t>(mx[i] - mn[i] + 3);
  return seen.size() == box_cells - cells.size();
}

}  // namespace

Tile::Tile(int dim, std::vector<Cell> cells, std::string name) : dim_(dim), name_(std::move(name)) {
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("tile dimension out of range");
  cells_ = normalize_cells(dim, std::move(cells));
  if (!is_connected(Polyomino(dim_, cells_))) throw std::invalid_argument("tile must be connected");
  if (!box_complement_connected(dim_, cells_)) throw std::invalid_argument("tile must be simply connected");
}

Tile::Tile(const Polyomino& shape, std::string name) : Tile(shape.dim(), shape.cells(), std::move(name)) {}

Tile Tile::unchecked(int dim, std::vector<Cell> cells, std::string name) {
  Tile t;
  t.dim_ = dim;
  t.cells_ = normalize_cells(dim, std::move(cells));
  t.name_ = std::move(name);
  return t;
}

bool Tile::contains_cell(const Cell& c) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), c, scan_less);
  return it != cells_.end() && *it == c;
}

std::vector<Cell> Tile::boundary_cells() const {
  std::unordered_set<Cell, CellHash> inside(cells_.begin(), cells_.end());
  std::unordered_set<Cell, CellHash> seen;
  std::vector<Cell> out;
  for (const Cell& c : cells_)
    for (const Cell& nb : face_neighbors(c))
      if (!inside.count(nb) && seen.insert(nb).second) out.push_back(nb);
  std::sort(out.begin(), out.end(), scan_less);
  return out;
}

bool Tile::operator<(const Tile& o) const {
  if (cells_.size() != o.cells_.size()) return cells_.size() < o.cells_.size();
  return std::lexicographical_compare(cells_.begin(), cells_.end(), o.cells_.begin(), o.cells_.end(), scan_less);
}

std::size_t TileHash::operator()(const Tile& t) const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(t.dim()));
  CellHash ch;
  for (const Cell& c : t.cells()) mix(ch(c));
  return static_cast<std::size_t>(h);
}

namespace {

std::vector<Cell> transformed_normalized(const SignedPerm& g, const std::vector<Cell>& cells) {
  std::vector<Cell> img;
  img.reserve(cells.size());
  Cell mn;
  bool first = true;
  for (const Cell& c : cells) {
    Cell t = g.apply(c);
    if (first) {
      mn = t;
      first = false;
    } else {
      for (int i = 0; i < g.dim; ++i) mn[i] = std::min(mn[i], t[i]);
    }
    img.push_back(t);
  }
  for (Cell& c : img) c = c - mn;
  std::sort(img.begin(), img.end(), scan_less);
  return img;
}

bool cells_less(const std::vector<Cell>& a, const std::vector<Cell>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), scan_less);
}

}  // namespace

Tile canonical_tile_form(const Tile& t, Symmetry mode) {
  const auto& group = symmetry_group(t.dim(), mode);
  std::vector<Cell> best = t.cells();
  for (const SignedPerm& g : group) {
    std::vector<Cell> img = transformed_normalized(g, t.cells());
    if (cells_less(img, best)) best = std::move(img);
  }
  return Tile::unchecked(t.dim(), std::move(best), t.name());
}

std::vector<Tile> tile_orbit(const Tile& t, Symmetry mode) {
  const auto& group = symmetry_group(t.dim(), mode);
  std::vector<std::vector<Cell>> images;
  for (const SignedPerm& g : group) images.push_back(transformed_normalized(g, t.cells()));
  std::sort(images.begin(), images.end(), cells_less);
  images.erase(std::unique(images.begin(), images.end()), images.end());
  std::vector<Tile> out;
  out.reserve(images.size());
  for (auto& img : images) out.push_back(Tile::unchecked(t.dim(), std::move(img), t.name()));
  return out;
}

bool tile_fits_inside(const Tile& inner, const Tile& outer, Symmetry mode) {
  if (inner.dim() != outer.dim()) throw std::invalid_argument("dimension mismatch");
  if (inner.size() > outer.size()) return false;
  for (const Tile& v : tile_orbit(inner, mode)) {
    // Anchor v's first cell on each cell of outer.
    for (const Cell& c : outer.cells()) {
      Cell off = c - v.cells().front();
      bool ok = true;
      for (const Cell& vc : v.cells()) {
        if (!outer.contains_cell(vc + off)) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
  }
  return false;
}

TileSet TileSet::make(int dim, Symmetry symmetry, std::vector<Tile> tiles) {
  TileSet s;
  s.dim = dim;
  s.symmetry = symmetry;
  s.tiles = std::move(tiles);
  std::unordered_set<Tile, TileHash> canon;
  for (const Tile& t : s.tiles) {
    if (t.dim() != dim) throw std::invalid_argument("tile dimension mismatch in tile set");
    if (!canon.insert(canonical_tile_form(t, symmetry)).second)
      throw std::invalid_argument("tile set has two tiles equivalent under its symmetry: " + t.name());
  }
  return s;
}

std::vector<Tile> generating_tiles(const TileSet& set) {
  std::vector<Tile> out;
  for (std::size_t i = 0; i < set.tiles.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < set.tiles.size(); ++j) {
      if (i == j) continue;
      if (tile_fits_inside(set.tiles[j], set.tiles[i], set.symmetry)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(set.tiles[i]);
  }
  return out;
}

}  // namespace tessella
