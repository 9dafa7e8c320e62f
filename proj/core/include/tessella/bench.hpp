#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tessella/polyomino.hpp"

namespace tessella {

struct BenchRecord {
  std::string generator;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::int64_t wall_ns = 0;
  std::size_t tiles_placed = 0;
  std::string result;
};

struct PowerFit {
  double a = 0.0;  // time ~ a * n^b, nanoseconds
  double b = 0.0;
};

// Least-squares fit of log(time) against log(n).
PowerFit fit_power_law(const std::vector<std::pair<std::size_t, std::int64_t>>& medians);

enum class BenchSolver { domino_l, s2 };

struct BenchSummary {
  std::vector<BenchRecord> records;
  std::vector<std::pair<std::size_t, std::int64_t>> medians;  // per size
  PowerFit fit;
};

// Times the chosen solver on fresh Eden regions, repetitions per size, and
// fits the scaling exponent over the per-size medians. Generation time is
// excluded from the timings.
BenchSummary run_scaling_benchmark(const std::vector<std::size_t>& sizes, BenchSolver solver, int repetitions,
                                   std::uint64_t seed);

}  // namespace tessella
