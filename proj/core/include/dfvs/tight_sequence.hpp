#pragma once

#include <optional>
#include <vector>

#include "dfvs/digraph.hpp"
#include "dfvs/separators.hpp"
#include "dfvs/structure.hpp"

namespace dfvs {

// Nested vertex sets H_1 < ... < H_q around u, each with a minimal u-v
// separator Z_i = N+(H_i) of size at most k, leaving no separator of size
// at most k between consecutive boundaries or beyond the last one.
struct TightSeparatorSequence {
  Vertex source = kNoVertex;
  Vertex sink = kNoVertex;
  int order = 0;                        // the k it was built for
  std::vector<VertexList> deltas;       // H_1, H_2 \ H_1, ...
  std::vector<VertexList> boundaries;   // Z_i, sorted
  std::vector<int> label;               // i on H_i \ H_{i-1}, q + 1 outside H_q
  std::vector<int> first_boundary;      // least i with w in Z_i, 0 if none

  std::size_t length() const noexcept { return deltas.size(); }
  const VertexList& boundary(std::size_t i) const { return boundaries.at(i - 1); }
  // H_i, sorted; 1 <= i <= q.
  VertexList prefix_set(std::size_t i) const;
  // Vertices of the gap H_{i+1} \ N+[H_i]; 1 <= i < q.
  VertexList gap(std::size_t i) const;
};

// Requires v reachable from u; throws std::invalid_argument otherwise.
Bounded<TightSeparatorSequence> tight_separator_sequence(const Digraph& d, Vertex u, Vertex v,
                                                         int k);

// Layer i of a separator chain with P_i contracted to s_i and Q_i to t_i.
// Local ids: s_i = 0, t_i = 1, then Y_i \ P_i, then W_i when included.
struct LocalGraph {
  Digraph graph;
  Vertex source = 0;
  Vertex sink = 1;
  VertexList to_parent;  // kNoVertex for s_i and t_i
  VertexList p_set;      // P_i = Y_i & N+(X_{i-1}); {s} for i = 1
  VertexList q_set;      // Q_i = N+(X_i) \ N+(X_{i-1})
  VertexList w_set;      // W_i = N+(X_i) & N+(X_{i-1})
  bool direct_arc = false;  // some vertex of P_i points into Q_i
};

enum class LocalGraphMode { kWithW, kWithoutW };

// All q + 1 layers in one linear pass.
std::vector<LocalGraph> build_local_graphs(const Digraph& d, const SeparatorChain& chain,
                                           LocalGraphMode mode = LocalGraphMode::kWithW);
// Single layer, 1 <= i <= q + 1.
LocalGraph build_local_graph(const Digraph& d, const SeparatorChain& chain, std::size_t i,
                             LocalGraphMode mode = LocalGraphMode::kWithW);

// Least i in [1, q-1] with Z_i l-light and Z_{i+1} not, where l-light means
// 2 |Q[H_i]| <= |Q|. Prefix counts over labels; no set is materialized.
std::optional<std::size_t> llight_transition(const StructureInstance& q,
                                             const TightSeparatorSequence& seq, int k);

// Least i in [1, q-1] whose gap substructure is outside the family.
std::optional<std::size_t> find_bad_gap(const StructureInstance& q,
                                        const TightSeparatorSequence& seq, int k,
                                        const StructureFamily& family = acyclic_family());

}  // namespace dfvs
