#include "tessella/fountain.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace tessella {

namespace {

// Tile stabilizer under the symmetry group, as (g, shift) pairs with
// g(tile) + shift == tile. Used to cut symmetric adjacent-cell duplicates.
std::vector<std::pair<SignedPerm, Cell>> tile_stabilizer(const Tile& t, Symmetry mode) {
  std::vector<std::pair<SignedPerm, Cell>> stab;
  for (const SignedPerm& g : symmetry_group(t.dim(), mode)) {
    std::vector<Cell> img;
    img.reserve(t.size());
    Cell mn = g.apply(t.cells().front());
    for (const Cell& c : t.cells()) {
      Cell tc = g.apply(c);
      for (int i = 0; i < t.dim(); ++i) mn[i] = std::min(mn[i], tc[i]);
      img.push_back(tc);
    }
    Cell shift = Cell::zero(t.dim()) - mn;
    for (Cell& c : img) c = c + shift;
    std::sort(img.begin(), img.end(), scan_less);
    if (img == t.cells()) stab.emplace_back(g, shift);
  }
  return stab;
}

std::vector<Cell> boundary_reps(const Tile& t, Symmetry mode) {
  auto stab = tile_stabilizer(t, mode);
  std::vector<Cell> reps;
  for (const Cell& u : t.boundary_cells()) {
    Cell rep = u;
    for (const auto& [g, shift] : stab) {
      Cell img = g.apply(u) + shift;
      if (scan_less(img, rep)) rep = img;
    }
    if (rep == u) reps.push_back(u);
  }
  return reps;
}

Polyomino union_with(const Tile& t, const Cell& u) {
  std::vector<Cell> cells = t.cells();
  cells.push_back(u);
  return Polyomino(t.dim(), std::move(cells));
}

}  // namespace

FountainReport is_fountain_set(const TileSet& set, const OracleBudget& budget, bool check_minimality) {
  FountainReport report;
  if (set.tiles.empty()) return report;  // an empty set tiles nothing
  for (const Tile& tile : set.tiles) {
    Tile canon = canonical_tile_form(tile, set.symmetry);
    for (const Cell& u : boundary_reps(canon, set.symmetry)) {
      DecisionResult r = is_tileable(union_with(canon, u), set, budget);
      if (r.verdict == OracleVerdict::budget_exceeded) {
        report.budget_exceeded = true;
        return report;
      }
      if (r.verdict == OracleVerdict::no) report.witnesses.push_back(FountainWitness{canon, u});
    }
  }
  report.is_fountain = report.witnesses.empty();
  if (!check_minimality) return report;

  bool minimal = report.is_fountain;
  for (std::size_t i = 0; i < set.size(); ++i) {
    RemovalCheck check{set.tiles[i]};
    std::vector<Tile> rest;
    for (std::size_t j = 0; j < set.size(); ++j)
      if (j != i) rest.push_back(set.tiles[j]);
    if (rest.empty()) {
      check.still_fountain = false;
    } else {
      FountainReport sub = is_fountain_set(TileSet::make(set.dim, set.symmetry, rest), budget, false);
      if (sub.budget_exceeded) {
        report.budget_exceeded = true;
        return report;
      }
      check.still_fountain = sub.is_fountain;
      if (!sub.witnesses.empty()) check.witness = sub.witnesses.front();
    }
    if (check.still_fountain) minimal = false;
    report.removal_checks.push_back(std::move(check));
  }
  report.is_minimal = minimal;
  return report;
}

GenerateResult generate_fountain_set(const std::vector<Tile>& generators, int dim, Symmetry symmetry,
                                     const FountainCaps& caps, const OracleBudget& budget) {
  if (generators.empty()) throw std::invalid_argument("need at least one generating tile");
  for (const Tile& g : generators) {
    if (g.dim() != dim) throw std::invalid_argument("generator dimension mismatch");
    for (const Tile& h : generators)
      if (!(g == h) && tile_fits_inside(g, h, symmetry))
        throw std::invalid_argument("generating tiles must be pairwise non-containing");
  }

  struct Obligation {
    Tile tile;
    Cell adjacent;
    bool operator<(const Obligation& o) const {
      if (!(tile == o.tile)) return tile < o.tile;
      return scan_less(adjacent, o.adjacent);
    }
  };

  GenerateResult result;
  std::vector<Tile> members;
  std::set<Obligation> worklist;
  auto add_member = [&](Tile canon) {
    members.push_back(canon);
    for (const Cell& u : boundary_reps(members.back(), symmetry)) worklist.insert(Obligation{members.back(), u});
  };
  for (const Tile& g : generators) add_member(canonical_tile_form(g, symmetry));

  int next_name = 0;
  while (!worklist.empty()) {
    Obligation ob = *worklist.begin();
    worklist.erase(worklist.begin());
    Polyomino grown = union_with(ob.tile, ob.adjacent);
    TileSet current = TileSet::make(dim, symmetry, members);
    DecisionResult r = is_tileable(grown, current, budget);
    if (r.verdict == OracleVerdict::budget_exceeded) {
      result.cap_exceeded = true;
      result.cap_reason = "oracle step budget exceeded on a " + std::to_string(grown.size()) + "-cell union";
      result.set = current;
      return result;
    }
    if (r.verdict == OracleVerdict::yes) continue;
    if (static_cast<int>(grown.size()) > caps.max_tile_size) {
      result.cap_exceeded = true;
      result.cap_reason = "tile size cap " + std::to_string(caps.max_tile_size) + " exceeded";
      result.set = current;
      return result;
    }
    Tile t = canonical_tile_form(Tile(dim, grown.cells(), "t" + std::to_string(next_name++)), symmetry);
    add_member(std::move(t));
    if (static_cast<int>(members.size()) > caps.max_set_size) {
      result.cap_exceeded = true;
      result.cap_reason = "set size cap " + std::to_string(caps.max_set_size) + " exceeded";
      result.set = TileSet::make(dim, symmetry, members);
      return result;
    }
  }
  result.set = TileSet::make(dim, symmetry, members);
  return result;
}

RetileTable RetileTable::build(const TileSet& set, const OracleBudget& budget) {
  RetileTable table;
  table.set_ = set;
  for (const Tile& tile : set.tiles) {
    Tile canon = canonical_tile_form(tile, set.symmetry);
    for (const Cell& u : canon.boundary_cells()) {
      EnumerationResult r = enumerate_tilings(union_with(canon, u), set, budget);
      if (r.budget_exceeded)
        throw std::runtime_error("retile table: oracle budget exceeded on tile \"" + tile.name() + "\"");
      if (r.tilings.empty())
        throw std::invalid_argument("not a fountain set: tile \"" + tile.name() + "\" plus " + u.to_string() +
                                    " is untileable");
      std::size_t best = 0;
      for (std::size_t i = 1; i < r.tilings.size(); ++i)
        if (r.tilings[i].placements.size() < r.tilings[best].placements.size()) best = i;
      table.entries_.emplace(std::make_pair(canon, u), Entry{std::move(r.tilings[best].placements)});
    }
  }
  return table;
}

const RetileTable::Entry* RetileTable::find(const Tile& canonical_tile, const Cell& adjacent) const {
  auto it = entries_.find(std::make_pair(canonical_tile, adjacent));
  return it == entries_.end() ? nullptr : &it->second;
}

namespace {

struct Slot {
  Placement placement;
  bool alive = false;
};

}  // namespace

IncrementalResult incremental_tile(const Polyomino& region, const TileSet& set, const std::vector<Tile>& generators,
                                   const RetileTable& table, const IncrementalOptions& options) {
  if (region.empty()) throw std::invalid_argument("cannot tile an empty region");
  if (region.dim() != set.dim) throw std::invalid_argument("region and tile set dimension mismatch");

  VariantCatalog catalog = VariantCatalog::build(set);
  std::vector<int> generator_indexes;
  for (const Tile& g : generators) {
    Tile canon = canonical_tile_form(g, set.symmetry);
    bool found = false;
    for (std::size_t i = 0; i < set.size(); ++i)
      if (catalog.canonical_of(static_cast<int>(i)) == canon) {
        generator_indexes.push_back(static_cast<int>(i));
        found = true;
        break;
      }
    if (!found) throw std::invalid_argument("generator \"" + g.name() + "\" is not a member of the tile set");
  }

  IncrementalResult result;
  result.tiling.region = region;
  result.tiling.tiles = set;

  std::unordered_set<Cell, CellHash> in_region(region.cells().begin(), region.cells().end());
  std::unordered_map<Cell, int, CellHash> owner;
  owner.reserve(region.size() * 2);
  std::vector<Slot> slots;

  // seed: first admissible generator placement in cell scan order
  std::vector<Cell> seed_cells;
  for (const Cell& c : region.cells()) {
    for (int gi : generator_indexes) {
      for (const Tile& v : catalog.variants_of(gi)) {
        Cell offset = c - v.cells().front();
        bool fits = true;
        for (const Cell& vc : v.cells())
          if (!in_region.count(vc + offset)) {
            fits = false;
            break;
          }
        if (!fits) continue;
        slots.push_back(Slot{Placement{gi, v, offset}, true});
        for (const Cell& vc : v.cells()) {
          Cell abs = vc + offset;
          owner.emplace(abs, 0);
          seed_cells.push_back(abs);
        }
        break;
      }
      if (!slots.empty()) break;
    }
    if (!slots.empty()) break;
  }
  if (slots.empty()) {
    result.status = IncrementalResult::Status::no_seed;
    return result;
  }

  auto retile_with = [&](int slot_id, const Cell& u) {
    const Placement& p = slots[static_cast<std::size_t>(slot_id)].placement;
    const VariantCatalog::Info* info = catalog.find(p.variant);
    if (!info) throw std::logic_error("placement variant missing from catalog");
    const Tile& canon = catalog.canonical_of(info->tile_index);
    SignedPerm inv = info->map.inverse();
    Cell u_rel = inv.apply(u - p.offset - info->shift);
    const RetileTable::Entry* entry = table.find(canon, u_rel);
    if (!entry) throw std::logic_error("retile table has no entry for tile \"" + canon.name() + "\" plus " + u_rel.to_string());

    // transform the entry back into tiling coordinates
    std::vector<Placement> replacement;
    replacement.reserve(entry->placements.size());
    std::vector<Cell> covered;
    for (const Placement& q : entry->placements) {
      std::vector<Cell> img;
      img.reserve(q.variant.size());
      Cell mn = info->map.apply(q.variant.cells().front());
      for (const Cell& c : q.variant.cells()) {
        Cell t = info->map.apply(c);
        for (int i = 0; i < set.dim; ++i) mn[i] = std::min(mn[i], t[i]);
        img.push_back(t);
      }
      Tile shape = Tile::unchecked(set.dim, img, q.variant.name());
      const VariantCatalog::Info* shape_info = catalog.find(shape);
      if (!shape_info) throw std::logic_error("retile table produced a shape outside the tile set");
      Cell new_offset = mn + info->map.apply(q.offset) + info->shift + p.offset;
      replacement.push_back(Placement{shape_info->tile_index, shape_info->variant, new_offset});
      for (const Cell& c : shape_info->variant.cells()) covered.push_back(c + new_offset);
    }
    // the replacement must tile exactly the old placement plus u
    std::vector<Cell> expected = p.covered_cells();
    expected.push_back(u);
    std::sort(expected.begin(), expected.end(), scan_less);
    std::sort(covered.begin(), covered.end(), scan_less);
    if (covered != expected) throw std::logic_error("inconsistent retile table entry for tile \"" + canon.name() + "\"");

    slots[static_cast<std::size_t>(slot_id)].alive = false;
    for (const Placement& q : replacement) {
      int id = static_cast<int>(slots.size());
      slots.push_back(Slot{q, true});
      for (const Cell& c : q.covered_cells()) owner[c] = id;
    }
  };

  std::unordered_set<Cell, CellHash> visited(seed_cells.begin(), seed_cells.end());
  std::vector<Cell> frontier = seed_cells;
  std::sort(frontier.begin(), frontier.end(), scan_less);
  std::size_t processed = seed_cells.size();
  while (!frontier.empty()) {
    std::vector<Cell> next;
    for (const Cell& u : frontier) {
      if (!owner.count(u)) {
        int best = -1;
        for (const Cell& nb : face_neighbors(u)) {
          auto it = owner.find(nb);
          if (it != owner.end() && (best < 0 || it->second < best)) best = it->second;
        }
        if (best < 0) throw std::logic_error("growth reached a cell with no tiled neighbor");
        retile_with(best, u);
        ++processed;
        if (options.check_each_step && owner.size() != processed)
          throw std::logic_error("tiled cells diverged from processed cells");
      }
      for (const Cell& nb : face_neighbors(u))
        if (in_region.count(nb) && visited.insert(nb).second) next.push_back(nb);
    }
    std::sort(next.begin(), next.end(), scan_less);
    frontier = std::move(next);
  }
  if (processed != region.size()) throw std::invalid_argument("region must be connected");

  for (const Slot& s : slots)
    if (s.alive) result.tiling.placements.push_back(s.placement);
  result.status = IncrementalResult::Status::tiled;
  return result;
}

}  // namespace tessella
