#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dfvs/digraph.hpp"
#include "dfvs/structure.hpp"

namespace dfvs {

struct SccDecomposition {
  std::vector<int> component;         // component index per vertex
  VertexList vertices;                // grouped by component, each group sorted
  std::vector<std::uint32_t> offsets;  // group c is vertices[offsets[c], offsets[c+1])
  std::vector<char> trivial;          // single vertex without a self-loop

  // Components are numbered in topological order: arcs only go forward.
  std::size_t count() const noexcept { return trivial.size(); }
  bool strongly_connected() const noexcept { return count() == 1; }
  std::span<const Vertex> members(std::size_t c) const {
    return {vertices.data() + offsets[c], vertices.data() + offsets[c + 1]};
  }
};

SccDecomposition scc_decompose(const Digraph& d);

struct CyclePair {
  Vertex u = kNoVertex;
  Vertex v = kNoVertex;
  friend bool operator==(const CyclePair&, const CyclePair&) = default;
};

// For the first back arc (a, b) of a DFS inside the first non-trivial
// component, returns (u, v) = (b, a). Every deletion set avoiding u and v
// then separates u from v. Throws std::invalid_argument when d has no cycle
// through two distinct vertices.
CyclePair find_cycle_pair(const StructureInstance& q);

// Drops every strongly connected component whose induced substructure is
// already in the family.
InducedStructure strip_trivial_components(const StructureInstance& q,
                                          const StructureFamily& family = acyclic_family());

}  // namespace dfvs
