#include "dfvs/scaling.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "dfvs/generators.hpp"
#include "dfvs/solver.hpp"

namespace dfvs {

ScalingReport bench_scaling(int k, const std::vector<std::size_t>& sizes, int reps,
                            std::uint64_t seed, std::size_t arcs_per_vertex) {
  if (reps < 1) throw std::invalid_argument("bench_scaling: reps must be positive");
  if (arcs_per_vertex < 1) throw std::invalid_argument("bench_scaling: arcs_per_vertex must be positive");
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    if (sizes[i] <= sizes[i - 1]) throw std::invalid_argument("bench_scaling: sizes must increase");
  }
  ScalingReport report;
  report.k = k;
  report.seed = seed;
  report.reps = reps;
  SolveOptions options;
  options.record_trace = false;
  for (std::size_t m : sizes) {
    ScalingPoint point;
    point.m = m;
    point.n = std::max<std::size_t>(m / arcs_per_vertex, static_cast<std::size_t>(k) + 2);
    for (int r = 0; r < reps; ++r) {
      const PlantedInstance inst = gen_planted(point.n, m, k, seed + static_cast<std::uint64_t>(r));
      const auto start = std::chrono::steady_clock::now();
      auto sol = solve_dfvs(inst.graph, k, options);
      const auto stop = std::chrono::steady_clock::now();
      point.seconds.push_back(std::chrono::duration<double>(stop - start).count());
      point.opts.push_back(sol ? sol->opt_size : -1);
    }
    std::vector<double> sorted = point.seconds;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t h = sorted.size() / 2;
    point.median_seconds = sorted.size() % 2 ? sorted[h] : (sorted[h - 1] + sorted[h]) / 2;
    report.points.push_back(std::move(point));
  }
  for (std::size_t i = 1; i < report.points.size(); ++i) {
    const double prev = report.points[i - 1].median_seconds;
    report.ratios.push_back(prev > 0 ? report.points[i].median_seconds / prev : 0.0);
  }
  return report;
}

}  // namespace dfvs
