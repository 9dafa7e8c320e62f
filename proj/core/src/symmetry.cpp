#include "tessella/symmetry.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace tessella {

const char* to_string(Symmetry s) {
  switch (s) {
    case Symmetry::fixed: return "fixed";
    case Symmetry::rotations: return "rotations";
    case Symmetry::rotations_reflections: return "rotations-and-reflections";
  }
  return "?";
}

SignedPerm SignedPerm::identity(int dim) {
  SignedPerm p;
  p.dim = dim;
  for (int i = 0; i < dim; ++i) {
    p.perm[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(i);
    p.sign[static_cast<std::size_t>(i)] = 1;
  }
  return p;
}

Cell SignedPerm::apply(const Cell& c) const {
  Cell r = Cell::zero(dim);
  for (int i = 0; i < dim; ++i)
    r[i] = sign[static_cast<std::size_t>(i)] * c[perm[static_cast<std::size_t>(i)]];
  return r;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm r;
  r.dim = dim;
  for (int i = 0; i < dim; ++i) {
    r.perm[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = static_cast<std::int8_t>(i);
    r.sign[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = sign[static_cast<std::size_t>(i)];
  }
  return r;
}

int SignedPerm::determinant() const {
  // sign of the permutation times the product of the axis signs
  int det = 1;
  std::array<bool, kMaxDim> seen{};
  for (int i = 0; i < dim; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    int j = i;
    while (!seen[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      j = perm[static_cast<std::size_t>(j)];
      ++len;
    }
    if (len % 2 == 0) det = -det;
  }
  for (int i = 0; i < dim; ++i) det *= sign[static_cast<std::size_t>(i)];
  return det;
}

namespace {

std::vector<SignedPerm> build_group(int dim, Symmetry mode) {
  std::vector<SignedPerm> out;
  if (mode == Symmetry::fixed) {
    out.push_back(SignedPerm::identity(dim));
    return out;
  }
  std::vector<int> perm(static_cast<std::size_t>(dim));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (int bits = 0; bits < (1 << dim); ++bits) {
      SignedPerm p;
      p.dim = dim;
      for (int i = 0; i < dim; ++i) {
        p.perm[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(perm[static_cast<std::size_t>(i)]);
        p.sign[static_cast<std::size_t>(i)] = (bits >> i) & 1 ? -1 : 1;
      }
      if (mode == Symmetry::rotations && p.determinant() != 1) continue;
      out.push_back(p);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

const std::vector<SignedPerm>& symmetry_group(int dim, Symmetry mode) {
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("symmetry group dimension out of range");
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<std::vector<SignedPerm>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(dim, static_cast<int>(mode));
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<std::vector<SignedPerm>>(build_group(dim, mode))).first;
  return *it->second;
}

}  // namespace tessella
