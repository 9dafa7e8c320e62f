#include "tessella/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "tessella/eden.hpp"
#include "tessella/fountain.hpp"
#include "tessella/scanline_solver.hpp"
#include "tessella/tilesets.hpp"

namespace tessella {

PowerFit fit_power_law(const std::vector<std::pair<std::size_t, std::int64_t>>& medians) {
  if (medians.size() < 2) throw std::invalid_argument("fit needs at least two sizes");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [n, t] : medians) {
    double x = std::log(static_cast<double>(n));
    double y = std::log(std::max<double>(1.0, static_cast<double>(t)));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double m = static_cast<double>(medians.size());
  PowerFit fit;
  fit.b = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  fit.a = std::exp((sy - fit.b * sx) / m);
  return fit;
}

BenchSummary run_scaling_benchmark(const std::vector<std::size_t>& sizes, BenchSolver solver, int repetitions,
                                   std::uint64_t seed) {
  if (repetitions < 1) throw std::invalid_argument("repetitions must be positive");
  for (std::size_t i = 1; i < sizes.size(); ++i)
    if (sizes[i] <= sizes[i - 1]) throw std::invalid_argument("sizes must be ascending");

  TileSet s2 = tileset_s2();
  RetileTable table = solver == BenchSolver::s2 ? RetileTable::build(s2) : RetileTable();
  std::vector<Tile> generators{s2[0]};

  BenchSummary summary;
  std::uint64_t stream = seed;
  for (std::size_t n : sizes) {
    std::vector<std::int64_t> times;
    for (int rep = 0; rep < repetitions; ++rep) {
      BenchRecord record;
      record.generator = "eden";
      record.seed = stream++;
      record.n = n;
      Polyomino region = eden_region(n, record.seed);
      auto start = std::chrono::steady_clock::now();
      if (solver == BenchSolver::domino_l) {
        ScanlineResult r = solve_domino_l(region);
        record.tiles_placed = r.tiling.placements.size();
        record.result = r.status == ScanlineResult::Status::tiled ? "tiled" : "untileable";
      } else {
        IncrementalResult r = incremental_tile(region, s2, generators, table);
        record.tiles_placed = r.tiling.placements.size();
        record.result = r.status == IncrementalResult::Status::tiled ? "tiled" : "no-seed";
      }
      auto stop = std::chrono::steady_clock::now();
      record.wall_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
      times.push_back(record.wall_ns);
      summary.records.push_back(std::move(record));
    }
    std::sort(times.begin(), times.end());
    summary.medians.emplace_back(n, times[times.size() / 2]);
  }
  if (summary.medians.size() >= 2) summary.fit = fit_power_law(summary.medians);
  return summary;
}

}  // namespace tessella
