#pragma once

#include <array>
#include <cstdint>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace tessella {

// Highest lattice dimension the engine supports. Coordinates beyond dim are
// kept at zero so whole-array comparison and hashing stay well defined.
inline constexpr int kMaxDim = 8;

// A lattice cell: dim integer coordinates. In 2D, v[0] is x (rightward) and
// v[1] is y (upward).
struct Cell {
  int dim = 0;
  std::array<std::int32_t, kMaxDim> v{};

  Cell() = default;
  Cell(std::initializer_list<int> coords);
  static Cell of(std::span<const int> coords);
  static Cell xy(int x, int y) { return Cell{x, y}; }
  static Cell zero(int dim);

  int operator[](int i) const { return v[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return v[static_cast<std::size_t>(i)]; }
  int x() const { return v[0]; }
  int y() const { return v[1]; }

  Cell operator+(const Cell& o) const;
  Cell operator-(const Cell& o) const;
  bool operator==(const Cell& o) const { return dim == o.dim && v == o.v; }
  bool operator!=(const Cell& o) const { return !(*this == o); }

  std::string to_string() const;
};

// Scanline order: by y, then x, then remaining coordinates. This is the
// canonical cell order used for sorting cell lists and picking branch cells.
bool scan_less(const Cell& a, const Cell& b);

inline bool operator<(const Cell& a, const Cell& b) { return scan_less(a, b); }

struct CellHash {
  std::size_t operator()(const Cell& c) const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
      h ^= x;
      h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(c.dim));
    for (int i = 0; i < c.dim; ++i) mix(static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.v[static_cast<std::size_t>(i)])));
    return static_cast<std::size_t>(h);
  }
};

// The 2*dim face neighbors of a cell, in a fixed order (+e0, -e0, +e1, ...).
std::vector<Cell> face_neighbors(const Cell& c);

bool are_face_adjacent(const Cell& a, const Cell& b);

}  // namespace tessella
