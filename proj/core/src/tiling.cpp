#include "tessella/tiling.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace tessella {

std::vector<Cell> Placement::covered_cells() const {
  std::vector<Cell> out;
  out.reserve(variant.size());
  for (const Cell& c : variant.cells()) out.push_back(c + offset);
  return out;
}

ValidationResult validate_tiling(const Tiling& t) {
  std::unordered_map<Cell, int, CellHash> owner;
  owner.reserve(t.region.size() * 2);
  std::vector<std::vector<Tile>> orbits(t.tiles.size());
  for (std::size_t i = 0; i < t.tiles.size(); ++i) orbits[i] = tile_orbit(t.tiles.tiles[i], t.tiles.symmetry);

  for (std::size_t pi = 0; pi < t.placements.size(); ++pi) {
    const Placement& p = t.placements[pi];
    int idx = static_cast<int>(pi);
    if (p.tile_index < 0 || static_cast<std::size_t>(p.tile_index) >= t.tiles.size())
      return {Violation{Violation::Kind::bad_tile_index,
                        "placement " + std::to_string(pi) + " refers to tile " + std::to_string(p.tile_index),
                        std::nullopt, idx}};
    const auto& orbit = orbits[static_cast<std::size_t>(p.tile_index)];
    if (std::find(orbit.begin(), orbit.end(), p.variant) == orbit.end())
      return {Violation{Violation::Kind::inadmissible_variant,
                        "placement " + std::to_string(pi) + " uses a variant not admissible under " +
                            std::string(to_string(t.tiles.symmetry)),
                        std::nullopt, idx}};
    for (const Cell& c : p.covered_cells()) {
      if (!t.region.contains(c))
        return {Violation{Violation::Kind::outside_region,
                          "placement " + std::to_string(pi) + " covers " + c.to_string() + " outside the region", c,
                          idx}};
      auto [it, inserted] = owner.emplace(c, idx);
      if (!inserted)
        return {Violation{Violation::Kind::overlap,
                          "cell " + c.to_string() + " covered by placements " + std::to_string(it->second) + " and " +
                              std::to_string(pi),
                          c, idx}};
    }
  }
  for (const Cell& c : t.region.cells())
    if (!owner.count(c))
      return {Violation{Violation::Kind::uncovered_cell, "cell " + c.to_string() + " is uncovered", c, std::nullopt}};
  return {};
}

VariantCatalog VariantCatalog::build(const TileSet& set) {
  VariantCatalog cat;
  cat.per_tile_.resize(set.size());
  cat.canonical_.reserve(set.size());
  const auto& group = symmetry_group(set.dim, set.symmetry);
  for (std::size_t ti = 0; ti < set.size(); ++ti) {
    Tile canon = canonical_tile_form(set.tiles[ti], set.symmetry);
    cat.canonical_.push_back(canon);
    for (const SignedPerm& g : group) {
      std::vector<Cell> img;
      img.reserve(canon.size());
      Cell mn = g.apply(canon.cells().front());
      for (const Cell& c : canon.cells()) {
        Cell t = g.apply(c);
        for (int i = 0; i < set.dim; ++i) mn[i] = std::min(mn[i], t[i]);
        img.push_back(t);
      }
      Tile variant = Tile::unchecked(set.dim, std::move(img), set.tiles[ti].name());
      if (!cat.by_shape_.count(variant)) {
        Cell shift = Cell::zero(set.dim) - mn;
        cat.by_shape_.emplace(variant, Info{static_cast<int>(ti), g, shift, variant});
        cat.per_tile_[ti].push_back(variant);
      }
    }
    std::sort(cat.per_tile_[ti].begin(), cat.per_tile_[ti].end());
  }
  return cat;
}

const VariantCatalog::Info* VariantCatalog::find(const Tile& variant) const {
  auto it = by_shape_.find(variant);
  return it == by_shape_.end() ? nullptr : &it->second;
}

}  // namespace tessella
