#pragma once

#include <cstdint>
#include <vector>

#include "dfvs/digraph.hpp"

namespace dfvs {

// SplitMix64; see docs/formats.md for the exact definition.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

// DFVS_SEED from the environment if set, else a fixed constant.
std::uint64_t default_seed();

struct PlantedInstance {
  Digraph graph;
  int planted_k = 0;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t target_m = 0;
  std::size_t planted_arcs = 0;  // arcs incident to planted vertices
  VertexList planted;            // removing these leaves a DAG
};

// Random DAG plus k vertices wired in both directions to it. Requires
// k <= n, n <= m and enough room for the DAG arcs; throws std::invalid_argument.
PlantedInstance gen_planted(std::size_t n, std::size_t m, int k, std::uint64_t seed);

// Every digraph without self-loops on exactly n vertices (2^(n(n-1)) of them).
std::vector<Digraph> gen_exhaustive_small(int n);

// m distinct arcs without self-loops, drawn uniformly (m clamped to n(n-1)).
Digraph gen_random(std::size_t n, std::size_t m, SplitMix64& rng);

struct SampledGraph {
  Digraph graph;
  int k = 0;
};

// Seeded stream: n uniform in [1, n_max], m uniform in [0, min(m_max, n(n-1))],
// k uniform in [0, k_max].
std::vector<SampledGraph> gen_corpus(std::size_t count, std::size_t n_max, std::size_t m_max,
                                     int k_max, std::uint64_t seed);

}  // namespace dfvs
