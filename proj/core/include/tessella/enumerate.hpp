#pragma once

#include <functional>
#include <vector>

#include "tessella/polyomino.hpp"

namespace tessella {

inline constexpr int kMaxEnumerationSize = 16;

// Visits every connected 2D polyomino of n cells exactly once up to
// translation, normalized, in a deterministic order.
void enumerate_fixed_polyominoes(int n, const std::function<void(const Polyomino&)>& visit);

std::vector<Polyomino> enumerate_fixed_polyominoes(int n);

std::uint64_t count_fixed_polyominoes(int n);

}  // namespace tessella
