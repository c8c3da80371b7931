#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "dfvs/digraph.hpp"

namespace dfvs {

// Returned instead of a result when no separator fits the budget.
// `infinite` is set when no separator exists at all (t is an out-neighbour of s).
struct ExceedsBudget {
  bool infinite = false;
  friend bool operator==(const ExceedsBudget&, const ExceedsBudget&) = default;
};

template <class T>
using Bounded = std::variant<T, ExceedsBudget>;

template <class T>
bool exceeds(const Bounded<T>& r) {
  return std::holds_alternative<ExceedsBudget>(r);
}

struct VertexFlow {
  int value = 0;
  std::vector<std::uint8_t> through;  // per vertex, 1 if a flow path crosses it
  std::vector<std::uint8_t> arc_flow;  // per arc id
  Digraph residual;                    // split network: v_in = 2v, v_out = 2v+1
};

// Unit vertex-capacity max flow from s to t, cut off after budget + 1 paths.
Bounded<VertexFlow> max_vertex_flow(const Digraph& d, Vertex s, Vertex t, int budget);

// Nested sets X_1 < X_2 < ... < X_q, each with a minimum s-t separator N+(X_i)
// as out-boundary, and every minimum separator inside the union of boundaries.
struct SeparatorChain {
  Vertex source = kNoVertex;
  Vertex sink = kNoVertex;
  int lambda = 0;
  std::vector<VertexList> deltas;      // X_1, X_2 \ X_1, ...
  std::vector<VertexList> boundaries;  // N+(X_i), sorted
  VertexList beyond;                   // X_{q+1} \ X_q where X_{q+1} = R(s) \ {t}

  std::size_t length() const noexcept { return deltas.size(); }
  // X_i for 1 <= i <= q + 1, sorted.
  VertexList prefix_set(std::size_t i) const;
  // 1-based layer index per vertex: i on X_i \ X_{i-1}, q + 1 on `beyond`,
  // 0 on t and on vertices not reachable from s.
  std::vector<int> labels(std::size_t num_vertices) const;
};

// Fails with ExceedsBudget when lambda(s, t) > k. Throws std::invalid_argument if s == t.
Bounded<SeparatorChain> separator_layers(const Digraph& d, Vertex s, Vertex t, int k);

// N+(X_1) of the chain: the minimum separator closest to s.
Bounded<VertexList> min_separator(const Digraph& d, Vertex s, Vertex t, int k);

// Topological positions of the residual network's strong components, per
// split node (2v, 2v+1). Exposed for reference checks of the layer BFS.
struct ResidualLevels {
  int lambda = 0;
  std::vector<int> alpha;
  int source_level = 0;
  int sink_level = 0;
};
Bounded<ResidualLevels> residual_levels(const Digraph& d, Vertex s, Vertex t, int k);

}  // namespace dfvs
