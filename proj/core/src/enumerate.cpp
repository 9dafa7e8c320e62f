#include "tessella/enumerate.hpp"

#include <stdexcept>

namespace tessella {

namespace {

// Growth enumeration with a canonical first cell: the origin is the
// scanline-least cell, so candidate cells live in y > 0 or (y == 0, x >= 0).
// Cells are blocked when first added to the frontier; each polyomino is
// produced exactly once as "take the popped cell" vs "exclude it for the
// rest of this level".
class Enumerator {
 public:
  Enumerator(int n, const std::function<void(const Polyomino&)>& visit) : n_(n), visit_(visit) {
    width_ = 2 * n - 1;
    height_ = n;
    blocked_.assign(static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_), 0);
    current_.reserve(static_cast<std::size_t>(n));
  }

  void run() {
    block(0, 0);
    std::vector<std::pair<int, int>> untried{{0, 0}};
    recurse(untried, 1);
  }

 private:
  bool allowed(int x, int y) const {
    if (y < 0 || y >= height_) return false;
    if (x < -(n_ - 1) || x > n_ - 1) return false;
    return y > 0 || x >= 0;
  }
  std::size_t idx(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x + n_ - 1);
  }
  void block(int x, int y) { blocked_[idx(x, y)] = 1; }
  void unblock(int x, int y) { blocked_[idx(x, y)] = 0; }
  bool is_blocked(int x, int y) const { return blocked_[idx(x, y)] != 0; }

  void recurse(std::vector<std::pair<int, int>> untried, int depth) {
    while (!untried.empty()) {
      auto [x, y] = untried.back();
      untried.pop_back();
      current_.emplace_back(x, y);
      if (depth == n_) {
        emit();
      } else {
        std::vector<std::pair<int, int>> next = untried;
        std::vector<std::pair<int, int>> added;
        const int dx[4] = {1, -1, 0, 0};
        const int dy[4] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k) {
          int nx = x + dx[k], ny = y + dy[k];
          if (allowed(nx, ny) && !is_blocked(nx, ny)) {
            block(nx, ny);
            next.emplace_back(nx, ny);
            added.emplace_back(nx, ny);
          }
        }
        recurse(std::move(next), depth + 1);
        for (auto [ax, ay] : added) unblock(ax, ay);
      }
      current_.pop_back();
      // the popped cell stays blocked for the rest of this level; the call
      // that first added it will unblock it
    }
  }

  void emit() {
    if (!visit_) return;
    std::vector<Cell> cells;
    cells.reserve(current_.size());
    int min_x = current_.front().first;
    for (auto [x, y] : current_) min_x = std::min(min_x, x);
    for (auto [x, y] : current_) cells.push_back(Cell::xy(x - min_x, y));
    visit_(Polyomino(2, std::move(cells)));
  }

  int n_;
  int width_, height_;
  const std::function<void(const Polyomino&)>& visit_;
  std::vector<char> blocked_;
  std::vector<std::pair<int, int>> current_;
};

}  // namespace

void enumerate_fixed_polyominoes(int n, const std::function<void(const Polyomino&)>& visit) {
  if (n < 1 || n > kMaxEnumerationSize)
    throw std::invalid_argument("enumeration size must be in [1, " + std::to_string(kMaxEnumerationSize) + "]");
  Enumerator e(n, visit);
  e.run();
}

std::vector<Polyomino> enumerate_fixed_polyominoes(int n) {
  std::vector<Polyomino> out;
  enumerate_fixed_polyominoes(n, [&](const Polyomino& p) { out.push_back(p); });
  return out;
}

std::uint64_t count_fixed_polyominoes(int n) {
  std::uint64_t count = 0;
  enumerate_fixed_polyominoes(n, [&](const Polyomino&) { ++count; });
  return count;
}

}  // namespace tessella
