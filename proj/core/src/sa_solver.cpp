#include "tessella/sa_solver.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "tessella/fountain.hpp"
#include "tessella/oracle.hpp"
#include "tessella/tilesets.hpp"

namespace tessella {

const char* to_string(CrenellationReport::Reason r) {
  switch (r) {
    case CrenellationReport::Reason::ok: return "ok";
    case CrenellationReport::Reason::too_small: return "too-small";
    case CrenellationReport::Reason::coverage_gap: return "coverage-gap";
    case CrenellationReport::Reason::overlap_violation: return "overlap-violation";
    case CrenellationReport::Reason::not_simply_connected: return "not-simply-connected";
  }
  return "?";
}

CrenellationReport in_crenellated_class(const Polyomino& region) {
  if (region.dim() != 2) throw std::invalid_argument("crenellation detection is 2D only");
  CrenellationReport report;
  auto probe_cost = [&report](std::int64_t k) { report.cell_visits += k; };

  if (region.size() < 5) {
    report.reason = CrenellationReport::Reason::too_small;
    return report;
  }

  std::unordered_set<Cell, CellHash> cells(region.cells().begin(), region.cells().end());
  auto has = [&](int x, int y) {
    report.cell_visits += 1;
    return cells.count(Cell::xy(x, y)) != 0;
  };

  // Hole count via the Euler characteristic of the cell complex: for a
  // connected region, vertices - edges + cells = 1 - holes.
  {
    std::unordered_set<Cell, CellHash> vertices, h_edges, v_edges;
    vertices.reserve(region.size() * 4);
    for (const Cell& c : region.cells()) {
      int x = c.x(), y = c.y();
      vertices.insert(Cell::xy(x, y));
      vertices.insert(Cell::xy(x + 1, y));
      vertices.insert(Cell::xy(x, y + 1));
      vertices.insert(Cell::xy(x + 1, y + 1));
      h_edges.insert(Cell::xy(x, y));
      h_edges.insert(Cell::xy(x, y + 1));
      v_edges.insert(Cell::xy(x, y));
      v_edges.insert(Cell::xy(x + 1, y));
      probe_cost(12);
    }
    std::int64_t euler = static_cast<std::int64_t>(vertices.size()) -
                         static_cast<std::int64_t>(h_edges.size() + v_edges.size()) +
                         static_cast<std::int64_t>(region.size());
    if (euler != 1) {
      report.reason = CrenellationReport::Reason::not_simply_connected;
      return report;
    }
  }

  // candidate plus centers: cells with all four neighbors present
  std::unordered_set<Cell, CellHash> centers;
  for (const Cell& c : region.cells()) {
    int x = c.x(), y = c.y();
    if (has(x + 1, y) && has(x - 1, y) && has(x, y + 1) && has(x, y - 1)) centers.insert(c);
  }
  auto is_center = [&](int x, int y) {
    report.cell_visits += 1;
    return centers.count(Cell::xy(x, y)) != 0;
  };

  // every cell must lie in some center's plus
  for (const Cell& c : region.cells()) {
    int x = c.x(), y = c.y();
    if (is_center(x, y) || is_center(x + 1, y) || is_center(x - 1, y) || is_center(x, y + 1) || is_center(x, y - 1))
      continue;
    report.reason = CrenellationReport::Reason::coverage_gap;
    return report;
  }
  if (centers.empty()) {
    report.reason = CrenellationReport::Reason::coverage_gap;
    return report;
  }

  // centers keep L-inf distance >= 2 and pluses may only share a single
  // spoke tip; overlapping pairs sit at axis distance exactly 2
  for (const Cell& z : centers) {
    int x = z.x(), y = z.y();
    for (int dx = -1; dx <= 1; ++dx)
      for (int dy = -1; dy <= 1; ++dy) {
        if (dx == 0 && dy == 0) continue;
        if (is_center(x + dx, y + dy)) {
          report.reason = CrenellationReport::Reason::overlap_violation;
          return report;
        }
      }
    for (int dx = -2; dx <= 2; ++dx)
      for (int dy = -2; dy <= 2; ++dy) {
        if (std::max(std::abs(dx), std::abs(dy)) != 2) continue;
        if (!is_center(x + dx, y + dy)) continue;
        // count shared cells of the two pluses
        int shared = 0;
        bool shared_is_tip = true;
        const int sx[5] = {0, 1, -1, 0, 0};
        const int sy[5] = {0, 0, 0, 1, -1};
        for (int a = 0; a < 5; ++a)
          for (int b = 0; b < 5; ++b) {
            if (x + sx[a] != x + dx + sx[b] || y + sy[a] != y + dy + sy[b]) continue;
            ++shared;
            if (a == 0 || b == 0) shared_is_tip = false;
          }
        probe_cost(25);
        if (shared > 1 || (shared == 1 && !shared_is_tip)) {
          report.reason = CrenellationReport::Reason::overlap_violation;
          return report;
        }
      }
  }

  // the sharing graph on centers must be connected: the region is a chain of
  // pluses welded at spoke tips, not pluses merely touching
  {
    std::vector<Cell> ordered(centers.begin(), centers.end());
    std::sort(ordered.begin(), ordered.end(), scan_less);
    std::unordered_set<Cell, CellHash> seen{ordered.front()};
    std::vector<Cell> stack{ordered.front()};
    while (!stack.empty()) {
      Cell z = stack.back();
      stack.pop_back();
      const int dx[4] = {2, -2, 0, 0};
      const int dy[4] = {0, 0, 2, -2};
      for (int k = 0; k < 4; ++k) {
        Cell w = Cell::xy(z.x() + dx[k], z.y() + dy[k]);
        probe_cost(1);
        if (centers.count(w) && !seen.count(w)) {
          seen.insert(w);
          stack.push_back(w);
        }
      }
    }
    if (seen.size() != centers.size()) {
      report.reason = CrenellationReport::Reason::overlap_violation;
      return report;
    }
    report.centers = std::move(ordered);
  }

  report.in_class = true;
  report.reason = CrenellationReport::Reason::ok;
  return report;
}

SaDecision decide_sa(const Polyomino& region) {
  if (region.dim() != 2) throw std::invalid_argument("this solver is 2D only");
  if (region.empty()) throw std::invalid_argument("cannot tile an empty region");
  if (region.size() < 2) return SaDecision::untileable;
  return in_crenellated_class(region).in_class ? SaDecision::untileable : SaDecision::tileable;
}

namespace {

struct SaContext {
  TileSet s2 = tileset_s2();
  TileSet sa = tileset_sa();
  RetileTable table = RetileTable::build(tileset_s2());
  VariantCatalog s2_catalog = VariantCatalog::build(tileset_s2());
  VariantCatalog sa_catalog = VariantCatalog::build(tileset_sa());
  Tile plus_shape = canonical_tile_form(tileset_s2()[4], Symmetry::rotations);
};

const SaContext& sa_context() {
  static const SaContext ctx;
  return ctx;
}

}  // namespace

SaResult solve_sa(const Polyomino& region) {
  if (region.dim() != 2) throw std::invalid_argument("this solver is 2D only");
  if (region.empty()) throw std::invalid_argument("cannot tile an empty region");

  SaResult result;
  result.tiling.region = region;
  result.tiling.tiles = tileset_sa();
  if (region.size() < 2 || in_crenellated_class(region).in_class) return result;

  const SaContext& ctx = sa_context();
  IncrementalResult grown = incremental_tile(region, ctx.s2, {ctx.s2[0]}, ctx.table);
  if (grown.status != IncrementalResult::Status::tiled)
    throw std::logic_error("five-tile growth failed on a connected region of size >= 2");

  struct Slot {
    Placement placement;
    bool alive = false;
  };
  std::vector<Slot> slots;
  slots.reserve(grown.tiling.placements.size() * 2);
  std::unordered_map<Cell, int, CellHash> owner;
  owner.reserve(region.size() * 2);
  std::set<int> plus_ids;

  auto is_plus = [&ctx](const Placement& p) { return p.variant == ctx.plus_shape; };
  auto is_t_tile = [&ctx](const Placement& p) { return p.tile_index == 3; };
  auto append = [&](const Placement& p) {
    int id = static_cast<int>(slots.size());
    slots.push_back(Slot{p, true});
    for (const Cell& c : p.covered_cells()) owner[c] = id;
    if (is_plus(p)) plus_ids.insert(id);
    return id;
  };
  for (const Placement& p : grown.tiling.placements) append(p);

  auto neighbors_of = [&](int id) {
    std::set<int> out;
    for (const Cell& c : slots[static_cast<std::size_t>(id)].placement.covered_cells())
      for (const Cell& nb : face_neighbors(c)) {
        auto it = owner.find(nb);
        if (it != owner.end() && it->second != id) out.insert(it->second);
      }
    return out;
  };
  auto union_region = [&](int a, int b) {
    std::vector<Cell> cells = slots[static_cast<std::size_t>(a)].placement.covered_cells();
    for (const Cell& c : slots[static_cast<std::size_t>(b)].placement.covered_cells()) cells.push_back(c);
    return Polyomino(2, std::move(cells));
  };
  auto kill = [&](int id) {
    slots[static_cast<std::size_t>(id)].alive = false;
    plus_ids.erase(id);
  };
  auto plus_center = [&](int id) {
    return slots[static_cast<std::size_t>(id)].placement.offset + Cell::xy(1, 1);
  };

  const std::int64_t step_cap = static_cast<std::int64_t>(region.size()) + 1;
  while (!plus_ids.empty()) {
    int current = *plus_ids.begin();
    std::unordered_set<Cell, CellHash> chain_centers;
    std::int64_t steps = 0;
    while (true) {
      if (++steps > step_cap) throw std::logic_error("plus elimination exceeded its step bound");
      Cell center = plus_center(current);
      if (!chain_centers.insert(center).second)
        throw std::logic_error("plus elimination revisited center " + center.to_string());

      std::vector<std::pair<bool, int>> order;  // (is T, id), non-T first
      for (int nb : neighbors_of(current))
        order.emplace_back(is_t_tile(slots[static_cast<std::size_t>(nb)].placement), nb);
      std::sort(order.begin(), order.end());
      if (order.empty()) throw std::logic_error("plus placement with no neighbor in a connected region");

      bool eliminated = false;
      for (const auto& [was_t, nb] : order) {
        FirstSolutionResult sol = first_tiling(union_region(current, nb), ctx.sa);
        if (sol.verdict != OracleVerdict::yes) continue;
        kill(current);
        kill(nb);
        for (const Placement& p : sol.tiling.placements) {
          const VariantCatalog::Info* info = ctx.s2_catalog.find(p.variant);
          if (!info) throw std::logic_error("replacement shape outside the five-tile set");
          append(Placement{info->tile_index, info->variant, p.offset});
        }
        eliminated = true;
        break;
      }
      if (eliminated) break;

      // every bounded union failed: displace the plus through an adjacent T
      std::optional<int> t_neighbor;
      for (const auto& [was_t, nb] : order)
        if (was_t) {
          t_neighbor = nb;
          break;
        }
      if (!t_neighbor) throw std::logic_error("plus elimination stuck without an adjacent T");

      EnumerationResult all = enumerate_tilings(union_region(current, *t_neighbor), ctx.s2);
      if (all.budget_exceeded || all.tilings.empty())
        throw std::logic_error("could not re-solve a plus+T union");
      const Tiling* best = nullptr;
      std::size_t best_plus_count = 0;
      Cell old_center = plus_center(current);
      for (const Tiling& cand : all.tilings) {
        std::size_t count = 0;
        Cell new_center;
        for (const Placement& p : cand.placements)
          if (is_plus(p)) {
            ++count;
            new_center = p.offset + Cell::xy(1, 1);
          }
        if (count == 0) throw std::logic_error("plus-free union tiling missed by the direct pass");
        if (count == 1 && new_center == old_center) continue;  // the tiling we already have
        if (!best || count < best_plus_count) {
          best = &cand;
          best_plus_count = count;
        }
      }
      if (!best || best_plus_count != 1)
        throw std::logic_error("plus+T union did not yield a displaced single plus");

      kill(current);
      kill(*t_neighbor);
      int displaced = -1;
      for (const Placement& p : best->placements) {
        const VariantCatalog::Info* info = ctx.s2_catalog.find(p.variant);
        if (!info) throw std::logic_error("replacement shape outside the five-tile set");
        int id = append(Placement{info->tile_index, info->variant, p.offset});
        if (is_plus(p)) displaced = id;
      }
      if (displaced < 0) throw std::logic_error("displaced plus vanished");
      current = displaced;
    }
  }

  // re-express every surviving placement over the four-tile set
  for (const Slot& s : slots) {
    if (!s.alive) continue;
    const VariantCatalog::Info* info = ctx.sa_catalog.find(s.placement.variant);
    if (!info) throw std::logic_error("a plus survived elimination");
    result.tiling.placements.push_back(Placement{info->tile_index, info->variant, s.placement.offset});
  }
  result.status = SaResult::Status::tiled;
  return result;
}

}  // namespace tessella
