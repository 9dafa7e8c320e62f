#include "tessella/cell.hpp"

#include <cmath>
#include <stdexcept>

namespace tessella {

Cell::Cell(std::initializer_list<int> coords) {
  if (coords.size() == 0 || coords.size() > static_cast<std::size_t>(kMaxDim))
    throw std::invalid_argument("cell dimension must be in [1, " + std::to_string(kMaxDim) + "]");
  dim = static_cast<int>(coords.size());
  int i = 0;
  for (int c : coords) v[static_cast<std::size_t>(i++)] = c;
}

Cell Cell::of(std::span<const int> coords) {
  if (coords.empty() || coords.size() > static_cast<std::size_t>(kMaxDim))
    throw std::invalid_argument("cell dimension must be in [1, " + std::to_string(kMaxDim) + "]");
  Cell c;
  c.dim = static_cast<int>(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) c.v[i] = coords[i];
  return c;
}

Cell Cell::zero(int dim) {
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("bad dimension");
  Cell c;
  c.dim = dim;
  return c;
}

Cell Cell::operator+(const Cell& o) const {
  Cell r = *this;
  for (int i = 0; i < dim; ++i) r.v[static_cast<std::size_t>(i)] += o.v[static_cast<std::size_t>(i)];
  return r;
}

Cell Cell::operator-(const Cell& o) const {
  Cell r = *this;
  for (int i = 0; i < dim; ++i) r.v[static_cast<std::size_t>(i)] -= o.v[static_cast<std::size_t>(i)];
  return r;
}

std::string Cell::to_string() const {
  std::string s = "(";
  for (int i = 0; i < dim; ++i) {
    if (i) s += ",";
    s += std::to_string(v[static_cast<std::size_t>(i)]);
  }
  s += ")";
  return s;
}

bool scan_less(const Cell& a, const Cell& b) {
  if (a.dim >= 2 && b.dim >= 2) {
    if (a.v[1] != b.v[1]) return a.v[1] < b.v[1];
    if (a.v[0] != b.v[0]) return a.v[0] < b.v[0];
    for (int i = 2; i < a.dim; ++i)
      if (a.v[static_cast<std::size_t>(i)] != b.v[static_cast<std::size_t>(i)])
        return a.v[static_cast<std::size_t>(i)] < b.v[static_cast<std::size_t>(i)];
    return false;
  }
  return a.v[0] < b.v[0];
}

std::vector<Cell> face_neighbors(const Cell& c) {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(2 * c.dim));
  for (int i = 0; i < c.dim; ++i) {
    Cell p = c;
    p[i] += 1;
    out.push_back(p);
    p[i] -= 2;
    out.push_back(p);
  }
  return out;
}

bool are_face_adjacent(const Cell& a, const Cell& b) {
  if (a.dim != b.dim) return false;
  int total = 0;
  for (int i = 0; i < a.dim; ++i) {
    int d = std::abs(a.v[static_cast<std::size_t>(i)] - b.v[static_cast<std::size_t>(i)]);
    if (d > 1) return false;
    total += d;
  }
  return total == 1;
}

}  // namespace tessella
