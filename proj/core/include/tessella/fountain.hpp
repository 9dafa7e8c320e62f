#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tessella/oracle.hpp"
#include "tessella/tiling.hpp"

namespace tessella {

// Evidence for or against the fountain property: every tile of the set plus
// any adjacent cell must be tileable by the set.
struct FountainWitness {
  Tile tile;
  Cell adjacent;  // relative to the tile's normalized frame
};

struct RemovalCheck {
  Tile removed;
  bool still_fountain = false;
  std::optional<FountainWitness> witness;  // a pair that breaks after removal
};

struct FountainReport {
  bool is_fountain = false;
  std::vector<FountainWitness> witnesses;  // untileable tile+cell unions
  std::optional<bool> is_minimal;
  std::vector<RemovalCheck> removal_checks;
  bool budget_exceeded = false;
};

// Decides the fountain property for S, enumerating adjacent cells up to each
// tile's own symmetry stabilizer. With check_minimality, also re-runs the
// check on every single-tile removal.
FountainReport is_fountain_set(const TileSet& set, const OracleBudget& budget = {}, bool check_minimality = false);

struct FountainCaps {
  int max_tile_size = 12;
  int max_set_size = 64;
};

struct GenerateResult {
  bool cap_exceeded = false;
  std::string cap_reason;
  TileSet set;  // partial when cap_exceeded
};

// Closure of the generators: while some member plus an adjacent cell is
// untileable by the current set, add that union as a new tile. Obligations
// are processed by tile size, then canonical form, then cell, so the output
// is unique. Generators must be pairwise non-containing.
GenerateResult generate_fountain_set(const std::vector<Tile>& generators, int dim,
                                     Symmetry symmetry = Symmetry::rotations, const FountainCaps& caps = {},
                                     const OracleBudget& budget = {});

// Map from (canonical tile, adjacent cell) to a replacement tiling of their
// union, generated by the oracle and preferring the fewest tiles.
class RetileTable {
 public:
  struct Entry {
    std::vector<Placement> placements;  // in the canonical tile's frame
  };

  // Requires the fountain property; throws std::invalid_argument naming the
  // first missing entry otherwise.
  static RetileTable build(const TileSet& set, const OracleBudget& budget = {});

  const Entry* find(const Tile& canonical_tile, const Cell& adjacent) const;
  std::size_t size() const { return entries_.size(); }
  const TileSet& set() const { return set_; }

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<Tile, Cell>& k) const {
      return TileHash{}(k.first) * 1000003u ^ CellHash{}(k.second);
    }
  };
  TileSet set_;
  std::unordered_map<std::pair<Tile, Cell>, Entry, KeyHash> entries_;
};

struct IncrementalOptions {
  bool check_each_step = false;  // verify the loop invariant after every cell
};

struct IncrementalResult {
  enum class Status { tiled, no_seed };
  Status status = Status::no_seed;
  Tiling tiling;
};

// Seeds a generating tile, then absorbs the remaining cells one at a time in
// breadth-first order, locally retiling the placement that owns the adjacent
// cell with the table entry for the grown union. O(1) table work per cell.
IncrementalResult incremental_tile(const Polyomino& region, const TileSet& set, const std::vector<Tile>& generators,
                                   const RetileTable& table, const IncrementalOptions& options = {});

}  // namespace tessella
