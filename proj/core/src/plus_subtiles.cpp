#include "tessella/plus_subtiles.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace tessella {

namespace {

void check_dim(int dim) {
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("dimension out of range");
}

Tile subtile_from_mask(int dim, unsigned mask) {
  std::vector<Cell> cells{Cell::zero(dim)};
  for (int i = 0; i < 2 * dim; ++i) {
    if (!(mask >> i & 1u)) continue;
    Cell c = Cell::zero(dim);
    c[i / 2] = i % 2 == 0 ? 1 : -1;
    cells.push_back(c);
  }
  return Tile(dim, std::move(cells));
}

// Spoke subsets (center implied) as 2d-bit masks, bit 2i = +axis i,
// bit 2i+1 = -axis i. The hyperoctahedral group permutes spoke slots; its
// generators are adjacent axis swaps and one axis flip. Orbits are the
// connected components under those generators.
std::vector<unsigned> orbit_representatives(int dim) {
  std::vector<std::vector<int>> generators;
  for (int i = 0; i + 1 < dim; ++i) {
    std::vector<int> g(static_cast<std::size_t>(2 * dim));
    for (int s = 0; s < 2 * dim; ++s) g[static_cast<std::size_t>(s)] = s;
    std::swap(g[static_cast<std::size_t>(2 * i)], g[static_cast<std::size_t>(2 * i + 2)]);
    std::swap(g[static_cast<std::size_t>(2 * i + 1)], g[static_cast<std::size_t>(2 * i + 3)]);
    generators.push_back(std::move(g));
  }
  {
    std::vector<int> g(static_cast<std::size_t>(2 * dim));
    for (int s = 0; s < 2 * dim; ++s) g[static_cast<std::size_t>(s)] = s;
    std::swap(g[0], g[1]);
    generators.push_back(std::move(g));
  }

  unsigned total = 1u << (2 * dim);
  std::vector<char> seen(total, 0);
  std::vector<unsigned> reps;
  for (unsigned m = 1; m < total; ++m) {
    if (seen[m]) continue;
    unsigned rep = m;
    std::vector<unsigned> stack{m};
    seen[m] = 1;
    while (!stack.empty()) {
      unsigned cur = stack.back();
      stack.pop_back();
      rep = std::min(rep, cur);
      for (const auto& g : generators) {
        unsigned img = 0;
        for (int s = 0; s < 2 * dim; ++s)
          if (cur >> s & 1u) img |= 1u << g[static_cast<std::size_t>(s)];
        if (!seen[img]) {
          seen[img] = 1;
          stack.push_back(img);
        }
      }
    }
    reps.push_back(rep);
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

}  // namespace

Tile plus_tile(int dim) {
  check_dim(dim);
  Tile t = subtile_from_mask(dim, (1u << (2 * dim)) - 1u);
  t.set_name("plus");
  return t;
}

std::vector<Tile> plus_subtiles(int dim) {
  check_dim(dim);
  std::vector<Tile> out;
  for (unsigned rep : orbit_representatives(dim))
    out.push_back(canonical_tile_form(subtile_from_mask(dim, rep), Symmetry::rotations_reflections));
  std::sort(out.begin(), out.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i].set_name("s" + std::to_string(i));
  return out;
}

std::int64_t count_plus_subtiles_with_spokes(int dim, int spokes) {
  check_dim(dim);
  if (spokes < 1 || spokes > 2 * dim) throw std::invalid_argument("spoke count out of range");
  std::int64_t count = 0;
  for (unsigned rep : orbit_representatives(dim))
    if (std::popcount(rep) == spokes) ++count;
  return count;
}

std::int64_t plus_subtile_count(int dim) {
  check_dim(dim);
  return static_cast<std::int64_t>(dim) * (dim + 3) / 2;
}

}  // namespace tessella
