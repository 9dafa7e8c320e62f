#include "tessella/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace tessella {

namespace {

using Mask = std::vector<std::uint64_t>;

struct CandidatePlacement {
  Mask mask;
  int tile_index;
  const Tile* variant;
  Cell offset;
};

// Search state shared by decide/enumerate/count.
class Search {
 public:
  Search(const Polyomino& region, const TileSet& tiles, const OracleBudget& budget)
      : region_(region), tiles_(tiles), budget_(budget) {
    if (region.empty()) throw std::invalid_argument("oracle requires a nonempty region");
    if (region.dim() != tiles.dim) throw std::invalid_argument("region and tile set dimension mismatch");
    n_ = region.size();
    words_ = (n_ + 63) / 64;
    index_.reserve(n_ * 2);
    for (std::size_t i = 0; i < n_; ++i) index_.emplace(region.cells()[i], static_cast<int>(i));
    build_candidates();
  }

  bool over_cell_budget() const { return static_cast<std::int64_t>(n_) > budget_.max_cells; }

  // Runs the search; on_solution may stop it by returning false.
  // Returns false iff the step budget was exhausted.
  bool run(const std::function<bool(const std::vector<const CandidatePlacement*>&)>& on_solution) {
    on_solution_ = &on_solution;
    covered_.assign(words_, 0);
    stack_.clear();
    nodes_ = 0;
    stopped_ = false;
    exhausted_ = false;
    dfs(0);
    return !exhausted_;
  }

  std::int64_t nodes() const { return nodes_; }

  Tiling materialize(const std::vector<const CandidatePlacement*>& stack) const {
    Tiling t;
    t.region = region_;
    t.tiles = tiles_;
    t.placements.reserve(stack.size());
    for (const CandidatePlacement* p : stack) t.placements.push_back(Placement{p->tile_index, *p->variant, p->offset});
    return t;
  }

  // True iff region size is a nonnegative integer combination of tile sizes.
  bool size_reachable() const {
    std::vector<char> dp(n_ + 1, 0);
    dp[0] = 1;
    for (std::size_t s = 1; s <= n_; ++s)
      for (const Tile& t : tiles_.tiles)
        if (t.size() <= s && dp[s - t.size()]) {
          dp[s] = 1;
          break;
        }
    return dp[n_] != 0;
  }

 private:
  void build_candidates() {
    candidates_.resize(n_);
    for (std::size_t ti = 0; ti < tiles_.size(); ++ti) {
      variants_.emplace_back(tile_orbit(tiles_.tiles[ti], tiles_.symmetry));
    }
    for (std::size_t ti = 0; ti < tiles_.size(); ++ti) {
      for (const Tile& v : variants_[ti]) {
        // anchor the variant's scan-least cell on each region cell
        for (std::size_t ci = 0; ci < n_; ++ci) {
          Cell offset = region_.cells()[ci] - v.cells().front();
          Mask mask(words_, 0);
          bool ok = true;
          for (const Cell& vc : v.cells()) {
            auto it = index_.find(vc + offset);
            if (it == index_.end()) {
              ok = false;
              break;
            }
            mask[static_cast<std::size_t>(it->second) / 64] |= 1ull << (static_cast<std::size_t>(it->second) % 64);
          }
          if (ok)
            candidates_[ci].push_back(CandidatePlacement{std::move(mask), static_cast<int>(ti), &v, offset});
        }
      }
    }
  }

  int first_uncovered(std::size_t from_word) const {
    for (std::size_t w = from_word; w < words_; ++w) {
      std::uint64_t bits = ~covered_[w];
      if (w == words_ - 1 && n_ % 64 != 0) bits &= (1ull << (n_ % 64)) - 1;
      if (bits) return static_cast<int>(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)));
    }
    return -1;
  }

  void dfs(std::size_t from_word) {
    if (stopped_ || exhausted_) return;
    int cell = first_uncovered(from_word);
    if (cell < 0) {
      if (!(*on_solution_)(stack_)) stopped_ = true;
      return;
    }
    for (const CandidatePlacement& cand : candidates_[static_cast<std::size_t>(cell)]) {
      if (++nodes_ > budget_.max_steps) {
        exhausted_ = true;
        return;
      }
      bool clash = false;
      for (std::size_t w = 0; w < words_; ++w)
        if (cand.mask[w] & covered_[w]) {
          clash = true;
          break;
        }
      if (clash) continue;
      for (std::size_t w = 0; w < words_; ++w) covered_[w] |= cand.mask[w];
      stack_.push_back(&cand);
      dfs(static_cast<std::size_t>(cell) / 64);
      stack_.pop_back();
      for (std::size_t w = 0; w < words_; ++w) covered_[w] &= ~cand.mask[w];
      if (stopped_ || exhausted_) return;
    }
  }

  const Polyomino& region_;
  const TileSet& tiles_;
  OracleBudget budget_;
  std::size_t n_ = 0, words_ = 0;
  std::unordered_map<Cell, int, CellHash> index_;
  std::vector<std::vector<Tile>> variants_;
  std::vector<std::vector<CandidatePlacement>> candidates_;

  Mask covered_;
  std::vector<const CandidatePlacement*> stack_;
  const std::function<bool(const std::vector<const CandidatePlacement*>&)>* on_solution_ = nullptr;
  std::int64_t nodes_ = 0;
  bool stopped_ = false, exhausted_ = false;
};

}  // namespace

DecisionResult is_tileable(const Polyomino& region, const TileSet& tiles, const OracleBudget& budget) {
  Search s(region, tiles, budget);
  if (s.over_cell_budget()) return {OracleVerdict::budget_exceeded, 0};
  if (!s.size_reachable()) return {OracleVerdict::no, 0};
  bool found = false;
  bool within = s.run([&](const auto&) {
    found = true;
    return false;  // stop at the first solution
  });
  if (!within && !found) return {OracleVerdict::budget_exceeded, s.nodes()};
  return {found ? OracleVerdict::yes : OracleVerdict::no, s.nodes()};
}

EnumerationResult enumerate_tilings(const Polyomino& region, const TileSet& tiles, const OracleBudget& budget) {
  Search s(region, tiles, budget);
  EnumerationResult out;
  if (s.over_cell_budget()) {
    out.budget_exceeded = true;
    return out;
  }
  bool within = s.run([&](const std::vector<const CandidatePlacement*>& stack) {
    out.tilings.push_back(s.materialize(stack));
    return budget.max_solutions < 0 || static_cast<std::int64_t>(out.tilings.size()) < budget.max_solutions;
  });
  out.budget_exceeded = !within;
  out.nodes = s.nodes();
  return out;
}

CountResult count_tilings(const Polyomino& region, const TileSet& tiles, const OracleBudget& budget) {
  Search s(region, tiles, budget);
  CountResult out;
  if (s.over_cell_budget()) {
    out.budget_exceeded = true;
    return out;
  }
  bool within = s.run([&](const auto&) {
    ++out.count;
    return budget.max_solutions < 0 || out.count < budget.max_solutions;
  });
  out.budget_exceeded = !within;
  out.nodes = s.nodes();
  return out;
}

FirstSolutionResult first_tiling(const Polyomino& region, const TileSet& tiles, const OracleBudget& budget) {
  Search s(region, tiles, budget);
  FirstSolutionResult out;
  if (s.over_cell_budget()) {
    out.verdict = OracleVerdict::budget_exceeded;
    return out;
  }
  bool found = false;
  bool within = s.run([&](const std::vector<const CandidatePlacement*>& stack) {
    out.tiling = s.materialize(stack);
    found = true;
    return false;
  });
  if (found) out.verdict = OracleVerdict::yes;
  else out.verdict = within ? OracleVerdict::no : OracleVerdict::budget_exceeded;
  return out;
}

}  // namespace tessella
