#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "tessella/cell.hpp"

namespace tessella {

// Which images of a tile are admissible placements.
enum class Symmetry {
  fixed,                    // translations only
  rotations,                // proper rotations of the hypercubic lattice
  rotations_reflections,    // full hyperoctahedral group (signed axis permutations)
};

const char* to_string(Symmetry s);

// A signed axis permutation: (apply(c))[i] = sign[i] * c[perm[i]].
struct SignedPerm {
  int dim = 0;
  std::array<std::int8_t, kMaxDim> perm{};
  std::array<std::int8_t, kMaxDim> sign{};

  static SignedPerm identity(int dim);
  Cell apply(const Cell& c) const;
  SignedPerm inverse() const;
  // Determinant is +1 for proper rotations, -1 otherwise.
  int determinant() const;
  bool operator==(const SignedPerm& o) const { return dim == o.dim && perm == o.perm && sign == o.sign; }
};

// All group elements for the given dimension and symmetry mode, in a fixed
// deterministic order. Cached; the returned reference stays valid.
const std::vector<SignedPerm>& symmetry_group(int dim, Symmetry mode);

}  // namespace tessella
