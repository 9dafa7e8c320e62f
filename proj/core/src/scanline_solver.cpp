#include "tessella/scanline_solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "tessella/tilesets.hpp"

namespace tessella {

RunIndex::RunIndex(const Polyomino& region) {
  if (region.dim() != 2) throw std::invalid_argument("scanline index is 2D only");
  if (region.empty()) throw std::invalid_argument("scanline index needs a nonempty region");
  remaining_ = region.size();
  // region cells come sorted by (y, x); cut them into maximal runs
  const auto& cells = region.cells();
  std::size_t i = 0;
  while (i < cells.size()) {
    int y = cells[i].y();
    int x_lo = cells[i].x();
    int x_hi = x_lo;
    std::size_t j = i + 1;
    while (j < cells.size() && cells[j].y() == y && cells[j].x() == x_hi + 1) {
      ++x_hi;
      ++j;
    }
    rows_[y].runs.emplace(x_lo, x_hi);
    i = j;
  }
  for (const auto& [y, row] : rows_) {
    for (const auto& [x_lo, x_hi] : row.runs) {
      on_run_created(y, x_lo, x_hi);
      push_corner_candidate(x_lo, y);
    }
  }
}

bool RunIndex::contains(int x, int y) const {
  auto rit = rows_.find(y);
  if (rit == rows_.end()) return false;
  const auto& runs = rit->second.runs;
  auto it = runs.upper_bound(x);
  if (it == runs.begin()) return false;
  --it;
  return x <= it->second;
}

std::optional<Run> RunIndex::run_at(int x, int y) const {
  auto rit = rows_.find(y);
  if (rit == rows_.end()) return std::nullopt;
  const auto& runs = rit->second.runs;
  auto it = runs.upper_bound(x);
  if (it == runs.begin()) return std::nullopt;
  --it;
  if (x > it->second) return std::nullopt;
  return Run{y, it->first, it->second, count_uncovered_above(y, it->first, it->second)};
}

bool RunIndex::run_is_top(int y, int x_lo, int x_hi) const {
  auto rit = rows_.find(y + 1);
  if (rit == rows_.end()) return true;
  const auto& runs = rit->second.runs;
  auto it = runs.upper_bound(x_hi);
  if (it == runs.begin()) return true;
  --it;
  return it->second < x_lo;
}

int RunIndex::count_uncovered_above(int y, int x_lo, int x_hi) const {
  auto rit = rows_.find(y + 1);
  if (rit == rows_.end()) return 0;
  const auto& runs = rit->second.runs;
  auto it = runs.upper_bound(x_lo);
  if (it != runs.begin()) --it;
  int total = 0;
  for (; it != runs.end() && it->first <= x_hi; ++it) {
    int lo = std::max(it->first, x_lo);
    int hi = std::min(it->second, x_hi);
    if (lo <= hi) total += hi - lo + 1;
  }
  return total;
}

RowDecomposition RunIndex::decompose() const {
  RowDecomposition d;
  std::vector<int> ys;
  ys.reserve(rows_.size());
  for (const auto& [y, row] : rows_) ys.push_back(y);
  std::sort(ys.begin(), ys.end());
  for (int y : ys)
    for (const auto& [x_lo, x_hi] : rows_.at(y).runs)
      d.runs.push_back(Run{y, x_lo, x_hi, count_uncovered_above(y, x_lo, x_hi)});
  for (const Run& r : d.runs)
    if (r.is_top_row()) d.top_rows.push_back(r);
  std::sort(d.top_rows.begin(), d.top_rows.end(), [](const Run& a, const Run& b) {
    if (a.x_hi != b.x_hi) return a.x_hi < b.x_hi;
    return a.y > b.y;
  });
  if (!d.top_rows.empty()) d.leftmost_top_row = d.top_rows.front();
  return d;
}

bool RunIndex::corner_case1_at(int x, int y) const {
  return contains(x, y) && contains(x + 1, y) && !contains(x - 1, y) && !contains(x, y - 1) && !contains(x, y + 1) &&
         !contains(x + 1, y + 1);
}

bool RunIndex::corner_case2_at(int x, int y) const {
  return contains(x, y) && contains(x + 1, y) && contains(x, y + 1) && contains(x + 1, y + 1) && !contains(x - 1, y) &&
         !contains(x - 1, y + 1) && !contains(x, y + 2) && !contains(x + 1, y + 2);
}

void RunIndex::on_run_created(int y, int x_lo, int x_hi) {
  if (!run_is_top(y, x_lo, x_hi)) return;
  top_rows_.push({x_hi, -y, x_lo});
  if ((x_hi - x_lo + 1) % 2 == 0) even_top_rows_.push({y, x_lo, x_hi});
}

void RunIndex::consider_promotion(int y, int x) {
  auto rit = rows_.find(y);
  if (rit == rows_.end()) return;
  const auto& runs = rit->second.runs;
  auto it = runs.upper_bound(x);
  if (it == runs.begin()) return;
  --it;
  if (x > it->second) return;
  on_run_created(y, it->first, it->second);
}

void RunIndex::push_corner_candidate(int x, int y) {
  if (corner_case1_at(x, y)) corners_.push({y, x, 0});
  if (corner_case2_at(x, y)) corners_.push({y, x, 1});
}

void RunIndex::seed_corner_candidates_near(int x, int y) {
  // anchors whose corner conditions can turn true when (x, y) is removed
  push_corner_candidate(x + 1, y);
  push_corner_candidate(x, y + 1);
  push_corner_candidate(x, y - 1);
  push_corner_candidate(x - 1, y - 1);
  push_corner_candidate(x + 1, y - 1);
  push_corner_candidate(x, y - 2);
  push_corner_candidate(x - 1, y - 2);
}

void RunIndex::remove_cell_bookkeeping(int x, int y) {
  if (contains(x, y - 1)) consider_promotion(y - 1, x);
  seed_corner_candidates_near(x, y);
}

void RunIndex::remove_segment(int y, int x_lo, int x_hi) {
  auto rit = rows_.find(y);
  if (rit == rows_.end()) throw std::logic_error("remove_segment: no runs at this height");
  auto& runs = rit->second.runs;
  auto it = runs.upper_bound(x_lo);
  if (it == runs.begin()) throw std::logic_error("remove_segment: segment not covered by one run");
  --it;
  int run_lo = it->first, run_hi = it->second;
  if (x_lo < run_lo || x_hi > run_hi) throw std::logic_error("remove_segment: segment not covered by one run");
  runs.erase(it);
  if (run_lo < x_lo) runs.emplace(run_lo, x_lo - 1);
  if (x_hi < run_hi) runs.emplace(x_hi + 1, run_hi);
  if (runs.empty()) rows_.erase(rit);
  remaining_ -= static_cast<std::size_t>(x_hi - x_lo + 1);

  for (int x = x_lo; x <= x_hi; ++x) remove_cell_bookkeeping(x, y);
  if (run_lo < x_lo) on_run_created(y, run_lo, x_lo - 1);
  if (x_hi < run_hi) on_run_created(y, x_hi + 1, run_hi);
}

std::optional<Run> RunIndex::pop_even_top_row() {
  while (!even_top_rows_.empty()) {
    auto [y, x_lo, x_hi] = even_top_rows_.top();
    even_top_rows_.pop();
    auto rit = rows_.find(y);
    if (rit == rows_.end()) continue;
    auto it = rit->second.runs.find(x_lo);
    if (it == rit->second.runs.end() || it->second != x_hi) continue;
    if (!run_is_top(y, x_lo, x_hi)) continue;
    return Run{y, x_lo, x_hi, 0};
  }
  return std::nullopt;
}

std::optional<Run> RunIndex::pop_leftmost_top_row() {
  while (!top_rows_.empty()) {
    auto [x_hi, neg_y, x_lo] = top_rows_.top();
    top_rows_.pop();
    int y = -neg_y;
    auto rit = rows_.find(y);
    if (rit == rows_.end()) continue;
    auto it = rit->second.runs.find(x_lo);
    if (it == rit->second.runs.end() || it->second != x_hi) continue;
    if (!run_is_top(y, x_lo, x_hi)) continue;
    return Run{y, x_lo, x_hi, 0};
  }
  return std::nullopt;
}

std::optional<Corner> RunIndex::pop_corner() {
  while (!corners_.empty()) {
    auto [y, x, kind] = corners_.top();
    corners_.pop();
    if (kind == 0 && corner_case1_at(x, y)) return Corner{Corner::Kind::case1, Cell::xy(x, y)};
    if (kind == 1 && corner_case2_at(x, y)) return Corner{Corner::Kind::case2, Cell::xy(x, y)};
  }
  return std::nullopt;
}

std::optional<Corner> RunIndex::find_corner() {
  auto c = pop_corner();
  if (c) corners_.push({c->anchor.y(), c->anchor.x(), c->kind == Corner::Kind::case1 ? 0 : 1});
  return c;
}

ScanlineResult solve_domino_l(const Polyomino& region) {
  if (region.dim() != 2) throw std::invalid_argument("the domino+L solver is 2D only");
  if (region.empty()) throw std::invalid_argument("cannot tile an empty region");

  ScanlineResult result;
  result.tiling.region = region;
  result.tiling.tiles = tileset_domino_l();
  const Tile domino = result.tiling.tiles[0];
  const Tile ell = result.tiling.tiles[1];
  result.tiling.placements.reserve(region.size() / 2 + 1);

  RunIndex index(region);
  while (!index.empty()) {
    if (auto row = index.pop_even_top_row()) {
      for (int x = row->x_lo; x < row->x_hi; x += 2)
        result.tiling.placements.push_back(Placement{0, domino, Cell::xy(x, row->y)});
      index.remove_segment(row->y, row->x_lo, row->x_hi);
      continue;
    }
    if (auto corner = index.pop_corner()) {
      int x = corner->anchor.x();
      int y = corner->anchor.y() + (corner->kind == Corner::Kind::case2 ? 1 : 0);
      result.tiling.placements.push_back(Placement{0, domino, Cell::xy(x, y)});
      index.remove_segment(y, x, x + 1);
      continue;
    }
    auto row = index.pop_leftmost_top_row();
    if (!row) throw std::logic_error("nonempty remainder without a top row");
    int x0 = row->x_lo, h = row->y;
    if (index.contains(x0 - 1, h - 1) && index.contains(x0, h - 1)) {
      result.tiling.placements.push_back(Placement{1, ell, Cell::xy(x0 - 1, h - 1)});
      index.remove_segment(h, x0, x0);
      index.remove_segment(h - 1, x0 - 1, x0);
      continue;
    }
    result.status = ScanlineResult::Status::untileable;
    result.failing_row = *row;
    result.tiling.placements.clear();
    return result;
  }
  result.status = ScanlineResult::Status::tiled;
  return result;
}

}  // namespace tessella
