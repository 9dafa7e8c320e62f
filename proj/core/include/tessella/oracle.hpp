#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tessella/tiling.hpp"

namespace tessella {

// Caps for the exhaustive search. Exceeding a cap is reported, never silently
// turned into a wrong answer.
struct OracleBudget {
  int max_cells = 64;
  std::int64_t max_solutions = -1;  // < 0 means unlimited
  std::int64_t max_steps = 100'000'000;  // backtracking nodes (placements tried)
};

enum class OracleVerdict { yes, no, budget_exceeded };

struct DecisionResult {
  OracleVerdict verdict = OracleVerdict::no;
  std::int64_t nodes = 0;
};

struct EnumerationResult {
  bool budget_exceeded = false;
  std::vector<Tiling> tilings;
  std::int64_t nodes = 0;
};

struct CountResult {
  bool budget_exceeded = false;
  std::int64_t count = 0;
  std::int64_t nodes = 0;
};

// Exact tileability by depth-first search, branching on the scanline-least
// uncovered cell with every admissible placement. Deterministic.
DecisionResult is_tileable(const Polyomino& region, const TileSet& tiles, const OracleBudget& budget = {});

// Every distinct tiling exactly once, in deterministic search order.
EnumerationResult enumerate_tilings(const Polyomino& region, const TileSet& tiles, const OracleBudget& budget = {});

CountResult count_tilings(const Polyomino& region, const TileSet& tiles, const OracleBudget& budget = {});

// First solution only, as a convenience for retiling small unions.
struct FirstSolutionResult {
  OracleVerdict verdict = OracleVerdict::no;
  Tiling tiling;
};
FirstSolutionResult first_tiling(const Polyomino& region, const TileSet& tiles, const OracleBudget& budget = {});

}  // namespace tessella
