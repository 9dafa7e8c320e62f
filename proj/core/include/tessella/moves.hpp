#pragma once

#include <optional>
#include <vector>

#include "tessella/oracle.hpp"
#include "tessella/tiling.hpp"

namespace tessella {

enum class MoveDirection { forward, backward };

// A local rewrite of a domino+L tiling. Move 1 (k >= 1 dominoes between two
// L-tiles) trades the pair of L-tiles for dominoes; move 2 slides an L by two
// columns. Anchored at the lower-left cell of the affected block.
struct MoveApplication {
  int move = 1;  // 1 or 2
  MoveDirection direction = MoveDirection::forward;
  Cell anchor;
  int k = 1;  // move 1 only

  bool operator==(const MoveApplication& o) const {
    return move == o.move && direction == o.direction && anchor == o.anchor && (move != 1 || k == o.k);
  }
};

// The tiles rewritten by a move, in tiling coordinates.
struct MoveTemplate {
  std::vector<Placement> source;
  std::vector<Placement> target;
};
MoveTemplate move_template(const MoveApplication& m);

// Applies m to a valid domino+L tiling whose placements contain the source
// template verbatim. Throws std::invalid_argument on a template mismatch.
Tiling apply_move(const Tiling& t, const MoveApplication& m);

// All applications whose source template is present in t.
std::vector<MoveApplication> find_move_applications(const Tiling& t);

// Same region and same placement set, ignoring placement order.
bool equivalent_tilings(const Tiling& a, const Tiling& b);

struct ConnectResult {
  enum class Status { ok, budget_exceeded, disconnected };
  Status status = Status::ok;
  std::vector<MoveApplication> moves;  // transforms t1 into t2 when ok
  std::int64_t explored = 0;
};

// Breadth-first search over the tiling graph of moves 1 and 2. Intended for
// small regions; budget.max_steps caps explored states.
ConnectResult connect_tilings(const Tiling& t1, const Tiling& t2, const OracleBudget& budget = {});

}  // namespace tessella
