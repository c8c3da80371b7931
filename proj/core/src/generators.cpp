#include "dfvs/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dfvs {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("SplitMix64::below: bound must be positive");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("DFVS_SEED")) {
    try {
      return std::stoull(env, nullptr, 0);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("DFVS_SEED is not an integer: ") + env);
    }
  }
  return 20220607ULL;
}

PlantedInstance gen_planted(std::size_t n, std::size_t m, int k, std::uint64_t seed) {
  if (k < 0) throw std::invalid_argument("gen_planted: k must be non-negative");
  const auto kk = static_cast<std::size_t>(k);
  if (n < kk) throw std::invalid_argument("gen_planted: need n >= k");
  if (m < n) throw std::invalid_argument("gen_planted: need m >= n");
  const std::size_t rest = n - kk;
  // A quarter of the arcs touch planted vertices, half in each direction.
  std::size_t planted_arcs = kk == 0 || rest == 0 ? 0 : std::min(m / 4, 2 * kk * rest);
  planted_arcs = std::max<std::size_t>(planted_arcs, kk == 0 || rest == 0 ? 0 : 2 * kk);
  const std::size_t dag_arcs = m - std::min(m, planted_arcs);
  if (rest < 2 ? dag_arcs > 0 : dag_arcs > rest * (rest - 1) / 2) {
    throw std::invalid_argument("gen_planted: too many arcs for the acyclic part");
  }

  SplitMix64 rng(seed);
  VertexList perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);

  PlantedInstance out;
  out.planted_k = k;
  out.seed = seed;
  out.n = n;
  out.target_m = m;
  out.planted.assign(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(kk));
  // perm[kk + i] is the i-th vertex of the topological order.
  std::vector<Arc> arcs;
  arcs.reserve(m);
  for (std::size_t a = 0; a < dag_arcs; ++a) {
    std::size_t i = rng.below(rest), j = rng.below(rest);
    while (i == j) j = rng.below(rest);
    if (i > j) std::swap(i, j);
    arcs.push_back({perm[kk + i], perm[kk + j]});
  }
  for (std::size_t a = 0; a < planted_arcs; ++a) {
    const Vertex p = out.planted[a % kk];
    const Vertex x = perm[kk + rng.below(rest)];
    if ((a / kk) % 2 == 0) {
      arcs.push_back({p, x});
    } else {
      arcs.push_back({x, p});
    }
  }
  out.graph = Digraph(n, arcs);
  out.planted_arcs = planted_arcs;
  std::sort(out.planted.begin(), out.planted.end());
  return out;
}

std::vector<Digraph> gen_exhaustive_small(int n) {
  if (n < 0 || n > 4) throw std::invalid_argument("gen_exhaustive_small: n must lie in [0, 4]");
  std::vector<Arc> all;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      if (a != b) all.push_back({a, b});
    }
  }
  std::vector<Digraph> out;
  out.reserve(std::size_t{1} << all.size());
  for (std::uint32_t mask = 0; mask < (1U << all.size()); ++mask) {
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (mask >> i & 1U) arcs.push_back(all[i]);
    }
    out.emplace_back(static_cast<std::size_t>(n), arcs);
  }
  return out;
}

Digraph gen_random(std::size_t n, std::size_t m, SplitMix64& rng) {
  const std::size_t cap = n < 2 ? 0 : n * (n - 1);
  m = std::min(m, cap);
  std::vector<char> used(n * n, 0);
  std::vector<Arc> arcs;
  arcs.reserve(m);
  while (arcs.size() < m) {
    const auto a = static_cast<Vertex>(rng.below(n));
    const auto b = static_cast<Vertex>(rng.below(n));
    if (a == b || used[a * n + b]) continue;
    used[a * n + b] = 1;
    arcs.push_back({a, b});
  }
  return Digraph(n, arcs);
}

std::vector<SampledGraph> gen_corpus(std::size_t count, std::size_t n_max, std::size_t m_max,
                                     int k_max, std::uint64_t seed) {
  if (n_max == 0) throw std::invalid_argument("gen_corpus: n_max must be positive");
  SplitMix64 rng(seed);
  std::vector<SampledGraph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 1 + rng.below(n_max);
    const std::size_t m = rng.below(std::min(m_max, n * (n - 1)) + 1);
    const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(k_max) + 1));
    out.push_back({gen_random(n, m, rng), k});
  }
  return out;
}

}  // namespace dfvs
