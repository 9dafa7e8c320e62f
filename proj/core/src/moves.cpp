#include "tessella/moves.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "tessella/tilesets.hpp"

namespace tessella {

namespace {

void require_domino_l(const Tiling& t) {
  TileSet expect = tileset_domino_l();
  if (t.tiles.symmetry != Symmetry::fixed || t.tiles.size() != 2 || t.tiles[0] != expect[0] ||
      t.tiles[1] != expect[1])
    throw std::invalid_argument("moves are defined for the fixed domino+L tile set");
}

Placement domino_at(const TileSet& set, const Cell& offset) { return Placement{0, set[0], offset}; }
Placement ell_at(const TileSet& set, const Cell& offset) { return Placement{1, set[1], offset}; }

using PlacementKey = std::pair<int, Cell>;

std::vector<PlacementKey> tiling_key(const Tiling& t) {
  std::vector<PlacementKey> key;
  key.reserve(t.placements.size());
  for (const Placement& p : t.placements) key.emplace_back(p.tile_index, p.offset);
  std::sort(key.begin(), key.end(), [](const PlacementKey& a, const PlacementKey& b) {
    if (a.first != b.first) return a.first < b.first;
    return scan_less(a.second, b.second);
  });
  return key;
}

}  // namespace

MoveTemplate move_template(const MoveApplication& m) {
  TileSet set = tileset_domino_l();
  MoveTemplate tmpl;
  const Cell a = m.anchor;
  auto at = [&](int dx, int dy) { return a + Cell::xy(dx, dy); };
  if (m.move == 1) {
    if (m.k < 1) throw std::invalid_argument("move 1 needs k >= 1");
    tmpl.source.push_back(ell_at(set, at(0, 0)));
    for (int j = 1; j <= m.k; ++j) tmpl.source.push_back(domino_at(set, at(2 * j, 1)));
    tmpl.source.push_back(ell_at(set, at(2 * m.k + 1, 0)));

    tmpl.target.push_back(domino_at(set, at(0, 0)));
    tmpl.target.push_back(domino_at(set, at(1, 1)));
    for (int j = 1; j <= m.k; ++j) tmpl.target.push_back(domino_at(set, at(2 * j + 1, 1)));
    tmpl.target.push_back(domino_at(set, at(2 * m.k + 1, 0)));
  } else if (m.move == 2) {
    tmpl.source.push_back(domino_at(set, at(0, 0)));
    tmpl.source.push_back(domino_at(set, at(1, 1)));
    tmpl.source.push_back(ell_at(set, at(2, 0)));

    tmpl.target.push_back(ell_at(set, at(0, 0)));
    tmpl.target.push_back(domino_at(set, at(2, 1)));
    tmpl.target.push_back(domino_at(set, at(2, 0)));
  } else {
    throw std::invalid_argument("move must be 1 or 2");
  }
  if (m.direction == MoveDirection::backward) std::swap(tmpl.source, tmpl.target);
  return tmpl;
}

Tiling apply_move(const Tiling& t, const MoveApplication& m) {
  require_domino_l(t);
  MoveTemplate tmpl = move_template(m);
  std::map<PlacementKey, std::size_t> where;
  for (std::size_t i = 0; i < t.placements.size(); ++i)
    where.emplace(PlacementKey{t.placements[i].tile_index, t.placements[i].offset}, i);
  std::vector<bool> drop(t.placements.size(), false);
  for (const Placement& p : tmpl.source) {
    auto it = where.find({p.tile_index, p.offset});
    if (it == where.end())
      throw std::invalid_argument("move template does not match the tiling at " + m.anchor.to_string());
    drop[it->second] = true;
  }
  Tiling out;
  out.region = t.region;
  out.tiles = t.tiles;
  out.placements.reserve(t.placements.size());
  for (std::size_t i = 0; i < t.placements.size(); ++i)
    if (!drop[i]) out.placements.push_back(t.placements[i]);
  for (const Placement& p : tmpl.target) out.placements.push_back(p);
  return out;
}

std::vector<MoveApplication> find_move_applications(const Tiling& t) {
  require_domino_l(t);
  std::map<PlacementKey, std::size_t> where;
  for (std::size_t i = 0; i < t.placements.size(); ++i)
    where.emplace(PlacementKey{t.placements[i].tile_index, t.placements[i].offset}, i);
  auto has = [&](int tile, const Cell& off) { return where.count({tile, off}) != 0; };

  std::vector<MoveApplication> out;
  for (const auto& [key, idx] : where) {
    const Cell a = key.second;
    auto at = [&](int dx, int dy) { return a + Cell::xy(dx, dy); };
    if (key.first == 1) {
      // L anchored here: move 1 forward chains, move 2 backward
      for (int j = 1; has(0, at(2 * j, 1)); ++j)
        if (has(1, at(2 * j + 1, 0))) out.push_back(MoveApplication{1, MoveDirection::forward, a, j});
      if (has(0, at(2, 1)) && has(0, at(2, 0))) out.push_back(MoveApplication{2, MoveDirection::backward, a, 1});
    } else {
      // domino anchored here: move 1 backward chains, move 2 forward
      if (has(0, at(1, 1))) {
        for (int j = 1; has(0, at(2 * j + 1, 1)); ++j)
          if (has(0, at(2 * j + 1, 0))) out.push_back(MoveApplication{1, MoveDirection::backward, a, j});
        if (has(1, at(2, 0))) out.push_back(MoveApplication{2, MoveDirection::forward, a, 1});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const MoveApplication& x, const MoveApplication& y) {
    if (x.move != y.move) return x.move < y.move;
    if (x.direction != y.direction) return x.direction == MoveDirection::forward;
    if (!(x.anchor == y.anchor)) return scan_less(x.anchor, y.anchor);
    return x.k < y.k;
  });
  return out;
}

bool equivalent_tilings(const Tiling& a, const Tiling& b) {
  return a.region == b.region && tiling_key(a) == tiling_key(b);
}

ConnectResult connect_tilings(const Tiling& t1, const Tiling& t2, const OracleBudget& budget) {
  require_domino_l(t1);
  require_domino_l(t2);
  if (!(t1.region == t2.region)) throw std::invalid_argument("tilings cover different regions");
  if (!validate_tiling(t1).ok() || !validate_tiling(t2).ok()) throw std::invalid_argument("tilings must be valid");

  ConnectResult result;
  auto key2 = tiling_key(t2);
  std::map<std::vector<PlacementKey>, int> id_of;
  std::vector<Tiling> states;
  std::vector<std::pair<int, MoveApplication>> parent;  // state id -> (parent id, move)

  auto intern = [&](const Tiling& t) {
    auto key = tiling_key(t);
    auto [it, inserted] = id_of.emplace(std::move(key), static_cast<int>(states.size()));
    if (inserted) {
      states.push_back(t);
      parent.emplace_back(-1, MoveApplication{});
    }
    return std::pair<int, bool>{it->second, inserted};
  };

  auto [start, ignored] = intern(t1);
  if (tiling_key(t1) == key2) return result;  // empty move sequence

  std::deque<int> queue{start};
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    if (++result.explored > budget.max_steps) {
      result.status = ConnectResult::Status::budget_exceeded;
      return result;
    }
    Tiling snapshot = states[static_cast<std::size_t>(cur)];
    for (const MoveApplication& m : find_move_applications(snapshot)) {
      Tiling next = apply_move(snapshot, m);
      auto [id, inserted] = intern(next);
      if (!inserted) continue;
      parent[static_cast<std::size_t>(id)] = {cur, m};
      if (tiling_key(next) == key2) {
        std::vector<MoveApplication> path;
        for (int at = id; at != start; at = parent[static_cast<std::size_t>(at)].first)
          path.push_back(parent[static_cast<std::size_t>(at)].second);
        std::reverse(path.begin(), path.end());
        result.moves = std::move(path);
        return result;
      }
      queue.push_back(id);
    }
  }
  result.status = ConnectResult::Status::disconnected;
  return result;
}

}  // namespace tessella
