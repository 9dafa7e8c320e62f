#include "tessella/polyomino.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace tessella {

Polyomino::Polyomino(int dim, std::vector<Cell> cells) : dim_(dim), cells_(std::move(cells)) {
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("polyomino dimension out of range");
  for (const Cell& c : cells_) {
    if (c.dim != dim_) throw std::invalid_argument("cell dimension mismatch in polyomino");
  }
  std::sort(cells_.begin(), cells_.end(), scan_less);
  auto dup = std::adjacent_find(cells_.begin(), cells_.end());
  if (dup != cells_.end()) throw std::invalid_argument("duplicate cell in polyomino: " + dup->to_string());
}

Polyomino Polyomino::from_cells(std::vector<Cell> cells) {
  if (cells.empty()) throw std::invalid_argument("empty cell list");
  int dim = cells.front().dim;
  return Polyomino(dim, std::move(cells));
}

bool Polyomino::contains(const Cell& c) const {
  auto it = std::lower_bound(cells_.begin(), cells_.end(), c, scan_less);
  return it != cells_.end() && *it == c;
}

Polyomino Polyomino::translated(const Cell& by) const {
  Polyomino p;
  p.dim_ = dim_;
  p.cells_.reserve(cells_.size());
  for (const Cell& c : cells_) p.cells_.push_back(c + by);
  return p;  // translation preserves scan order
}

Polyomino Polyomino::normalized() const {
  if (cells_.empty()) return *this;
  Cell mn = bounding_box().first;
  Cell shift = Cell::zero(dim_);
  shift = shift - mn;
  return translated(shift);
}

std::pair<Cell, Cell> Polyomino::bounding_box() const {
  if (cells_.empty()) throw std::invalid_argument("bounding box of empty region");
  Cell mn = cells_.front(), mx = cells_.front();
  for (const Cell& c : cells_) {
    for (int i = 0; i < dim_; ++i) {
      mn[i] = std::min(mn[i], c[i]);
      mx[i] = std::max(mx[i], c[i]);
    }
  }
  return {mn, mx};
}

bool is_connected(const Polyomino& p) {
  if (p.empty()) throw std::invalid_argument("connectivity of empty region");
  std::unordered_set<Cell, CellHash> todo(p.cells().begin(), p.cells().end());
  std::vector<Cell> stack{p.cells().front()};
  todo.erase(p.cells().front());
  while (!stack.empty()) {
    Cell c = stack.back();
    stack.pop_back();
    for (const Cell& nb : face_neighbors(c)) {
      auto it = todo.find(nb);
      if (it != todo.end()) {
        stack.push_back(*it);
        todo.erase(it);
      }
    }
  }
  return todo.empty();
}

bool is_simply_connected(const Polyomino& p) {
  if (p.dim() != 2) throw std::invalid_argument("simple connectivity is only defined here for 2D regions");
  if (p.empty()) throw std::invalid_argument("simple connectivity of empty region");
  if (!is_connected(p)) return false;
  auto [mn, mx] = p.bounding_box();
  int x0 = mn.x() - 1, x1 = mx.x() + 1;
  int y0 = mn.y() - 1, y1 = mx.y() + 1;
  int w = x1 - x0 + 1, h = y1 - y0 + 1;
  std::vector<char> seen(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), 0);
  auto idx = [&](int x, int y) { return static_cast<std::size_t>(y - y0) * static_cast<std::size_t>(w) + static_cast<std::size_t>(x - x0); };
  std::size_t complement = 0;
  for (int y = y0; y <= y1; ++y)
    for (int x = x0; x <= x1; ++x)
      if (!p.contains(Cell::xy(x, y))) ++complement;
  std::vector<std::pair<int, int>> stack{{x0, y0}};
  seen[idx(x0, y0)] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    ++reached;
    const int dx[4] = {1, -1, 0, 0};
    const int dy[4] = {0, 0, 1, -1};
    for (int k = 0; k < 4; ++k) {
      int nx = x + dx[k], ny = y + dy[k];
      if (nx < x0 || nx > x1 || ny < y0 || ny > y1) continue;
      if (seen[idx(nx, ny)]) continue;
      if (p.contains(Cell::xy(nx, ny))) continue;
      seen[idx(nx, ny)] = 1;
      stack.emplace_back(nx, ny);
    }
  }
  return reached == complement;
}

}  // namespace tessella
