#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tessella/polyomino.hpp"
#include "tessella/tile.hpp"

namespace tessella {

// One placed tile: which set member, which symmetry image, and where.
struct Placement {
  int tile_index = 0;
  Tile variant;   // normalized shape actually placed
  Cell offset;    // translation applied to the variant

  std::vector<Cell> covered_cells() const;
};

struct Tiling {
  Polyomino region;
  TileSet tiles;
  std::vector<Placement> placements;
};

struct Violation {
  enum class Kind {
    bad_tile_index,
    inadmissible_variant,
    outside_region,
    overlap,
    uncovered_cell,
  };
  Kind kind;
  std::string message;
  std::optional<Cell> cell;
  std::optional<int> placement_index;
};

struct ValidationResult {
  std::optional<Violation> violation;
  bool ok() const { return !violation.has_value(); }
};

// ok iff placements are disjoint, stay within the region, cover it entirely,
// and every variant is admissible under the tile set's symmetry mode. Reports
// the first offending cell or placement in scan/index order.
ValidationResult validate_tiling(const Tiling& t);

// Per-set lookup from variant shapes to their source tile and a witness group
// element mapping the canonical form onto the variant.
class VariantCatalog {
 public:
  struct Info {
    int tile_index;
    SignedPerm map;  // variant = map(canonical) + shift
    Cell shift;
    Tile variant;
  };

  static VariantCatalog build(const TileSet& set);

  const Info* find(const Tile& variant) const;
  const std::vector<Tile>& variants_of(int tile_index) const { return per_tile_[static_cast<std::size_t>(tile_index)]; }
  const Tile& canonical_of(int tile_index) const { return canonical_[static_cast<std::size_t>(tile_index)]; }

 private:
  std::unordered_map<Tile, Info, TileHash> by_shape_;
  std::vector<std::vector<Tile>> per_tile_;
  std::vector<Tile> canonical_;
};

}  // namespace tessella
