#pragma once

#include <array>
#include <map>
#include <optional>
#include <queue>
#include <unordered_map>
#include <vector>

#include "tessella/tiling.hpp"

namespace tessella {

// A maximal horizontal run of untiled cells at height y, spanning
// [x_lo, x_hi]. uncovered_above counts run cells with an untiled cell
// directly above; a run is a top row iff that count is zero.
struct Run {
  int y = 0;
  int x_lo = 0;
  int x_hi = 0;
  int uncovered_above = 0;

  int length() const { return x_hi - x_lo + 1; }
  bool is_top_row() const { return uncovered_above == 0; }
  bool operator==(const Run& o) const {
    return y == o.y && x_lo == o.x_lo && x_hi == o.x_hi && uncovered_above == o.uncovered_above;
  }
};

// The two forced-domino boundary configurations. case1 is anchored at the
// left cell of a horizontal pair with nothing above either cell and nothing
// left of or below the anchor; case2 at the lower-left cell of an untiled
// 2x2 block with nothing to its left column and nothing above its top edge.
struct Corner {
  enum class Kind { case1, case2 };
  Kind kind = Kind::case1;
  Cell anchor;
};

struct RowDecomposition {
  std::vector<Run> runs;       // all runs, by (y, x_lo)
  std::vector<Run> top_rows;   // ordered by (x_hi asc, y desc)
  std::optional<Run> leftmost_top_row;
};

// Scanline state of the untiled remainder: per-height ordered interval sets
// plus lazily validated priority queues of even top rows, corners, and top
// rows. Single-threaded, confined to one solver call.
class RunIndex {
 public:
  explicit RunIndex(const Polyomino& region);  // 2D, nonempty

  bool contains(int x, int y) const;
  bool empty() const { return remaining_ == 0; }
  std::size_t remaining() const { return remaining_; }

  std::optional<Run> run_at(int x, int y) const;
  RowDecomposition decompose() const;  // materialized, with uncovered_above filled in

  // Deterministic smallest-(y, x) corner currently present, if any.
  std::optional<Corner> find_corner();

  // Removes a horizontal segment of currently untiled cells.
  void remove_segment(int y, int x_lo, int x_hi);

  // Used by the solver: pop the smallest valid entry from each worklist.
  std::optional<Run> pop_even_top_row();
  std::optional<Run> pop_leftmost_top_row();
  std::optional<Corner> pop_corner();

 private:
  struct Row {
    std::map<int, int> runs;  // x_lo -> x_hi
  };
  using RowMap = std::unordered_map<int, Row>;

  bool run_is_top(int y, int x_lo, int x_hi) const;
  int count_uncovered_above(int y, int x_lo, int x_hi) const;
  bool corner_case1_at(int x, int y) const;
  bool corner_case2_at(int x, int y) const;
  void on_run_created(int y, int x_lo, int x_hi);
  void consider_promotion(int y, int x);
  void seed_corner_candidates_near(int x, int y);
  void push_corner_candidate(int x, int y);
  void remove_cell_bookkeeping(int x, int y);

  RowMap rows_;
  std::size_t remaining_ = 0;

  // (y, x_lo, x_hi) of candidate even-length top rows, smallest (y, x_lo) first
  std::priority_queue<std::array<int, 3>, std::vector<std::array<int, 3>>, std::greater<>> even_top_rows_;
  // (x_hi, -y, x_lo) candidates for the leftmost top row
  std::priority_queue<std::array<int, 3>, std::vector<std::array<int, 3>>, std::greater<>> top_rows_;
  // (y, x, kind) corner candidates, smallest (y, x) first
  std::priority_queue<std::array<int, 3>, std::vector<std::array<int, 3>>, std::greater<>> corners_;
};

struct ScanlineResult {
  enum class Status { tiled, untileable };
  Status status = Status::untileable;
  Tiling tiling;                  // valid iff status == tiled
  std::optional<Run> failing_row; // the top row whose left end rejected the L
};

// Greedy scanline solver for the fixed-orientation domino+L pair: fills even
// top rows with dominoes, places forced corner dominoes, then commits an
// L at the left end of the leftmost top row. O(n log n).
ScanlineResult solve_domino_l(const Polyomino& region);

}  // namespace tessella
