#pragma once

#include <cstdint>
#include <vector>

namespace dfvs {

struct ScalingPoint {
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<double> seconds;  // one per repetition
  std::vector<int> opts;        // solver optimum per repetition, -1 for NO
  double median_seconds = 0.0;
};

struct ScalingReport {
  int k = 0;
  std::uint64_t seed = 0;
  int reps = 0;
  std::vector<ScalingPoint> points;
  std::vector<double> ratios;   // median(i + 1) / median(i)
};

// Times solve_dfvs(k) on planted instances with n = m / arcs_per_vertex.
// Repetition r uses seed + r, so each median is taken over distinct
// instances. Generation time is excluded. Sizes must strictly increase.
ScalingReport bench_scaling(int k, const std::vector<std::size_t>& sizes, int reps,
                            std::uint64_t seed, std::size_t arcs_per_vertex = 4);

}  // namespace dfvs
