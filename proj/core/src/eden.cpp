#include "tessella/eden.hpp"

#include <random>
#include <stdexcept>
#include <unordered_set>

namespace tessella {

Polyomino eden_region(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("region size must be positive");
  std::mt19937_64 rng(seed);
  std::unordered_set<Cell, CellHash> in_region, in_boundary;
  in_region.reserve(n * 2);
  std::vector<Cell> boundary;

  auto add_cell = [&](const Cell& c) {
    in_region.insert(c);
    for (const Cell& nb : face_neighbors(c)) {
      if (in_region.count(nb) || !in_boundary.insert(nb).second) continue;
      boundary.push_back(nb);
    }
  };

  add_cell(Cell::xy(0, 0));
  while (in_region.size() < n) {
    std::size_t pick = static_cast<std::size_t>(rng() % boundary.size());
    Cell c = boundary[pick];
    boundary[pick] = boundary.back();
    boundary.pop_back();
    in_boundary.erase(c);
    add_cell(c);
  }
  return Polyomino(2, std::vector<Cell>(in_region.begin(), in_region.end()));
}

}  // namespace tessella
