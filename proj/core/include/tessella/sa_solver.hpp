#pragma once

#include <cstdint>
#include <vector>

#include "tessella/tiling.hpp"

namespace tessella {

// Crenellated regions: simply connected unions of plus shapes that only meet
// at shared spoke tips. Besides single cells, exactly these resist the
// domino/L/3-bar/T set.
struct CrenellationReport {
  enum class Reason { ok, too_small, coverage_gap, overlap_violation, not_simply_connected };
  bool in_class = false;
  std::vector<Cell> centers;  // plus centers when in_class
  Reason reason = Reason::too_small;
  std::int64_t cell_visits = 0;  // instrumentation: cell probes performed
};

const char* to_string(CrenellationReport::Reason r);

// Linear-time membership test. Requires a connected 2D region.
CrenellationReport in_crenellated_class(const Polyomino& region);

enum class SaDecision { tileable, untileable };

// Polynomial-time decision for the domino/L/3-bar/T set with rotations.
SaDecision decide_sa(const Polyomino& region);

struct SaResult {
  enum class Status { tiled, untileable };
  Status status = Status::untileable;
  Tiling tiling;  // over the domino/L/3-bar/T set, plus-free, when tiled
};

// Constructs a tiling by running the incremental five-tile tiler and then
// eliminating plus placements by locally re-solving bounded unions.
SaResult solve_sa(const Polyomino& region);

}  // namespace tessella
