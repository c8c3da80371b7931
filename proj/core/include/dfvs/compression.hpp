#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "dfvs/digraph.hpp"

namespace dfvs {

// Cut every X_i -> Y_j path with i >= j by deleting non-terminal vertices.
struct SkewCutInstance {
  Digraph graph;
  std::vector<std::pair<VertexList, VertexList>> pairs;  // (X_i, Y_i) in order
  int budget = 0;
};

// Minimum skew separator of size <= budget, or nullopt.
std::optional<VertexList> skew_separator(const SkewCutInstance& inst);

// Minimum dfvs of size <= k avoiding w. Requires d - w acyclic.
std::optional<VertexList> disjoint_dfvs(const Digraph& d, int k, const VertexList& w);

// Minimum dfvs of size <= k, given a dfvs w with |w| <= k + 1.
// `lower_bound` is an optional hint: a value known not to exceed the optimum.
std::optional<VertexList> compress(const Digraph& d, int k, const VertexList& w,
                                   int lower_bound = 0);

// As compress, for a dfvs w of any size; vertices of w are added one at a time.
std::optional<VertexList> smart_compress(const Digraph& d, int k, const VertexList& w,
                                         int lower_bound = 0);

// Enumerates important X-Y separators of size <= budget in `graph`, avoiding
// the undeletable vertices. The callback returns true to stop; the function
// then returns true as well.
bool for_each_important_separator(const Digraph& graph, const VertexList& sources,
                                  const VertexList& sinks, const std::vector<char>& undeletable,
                                  int budget,
                                  const std::function<bool(const VertexList&)>& visit);

}  // namespace dfvs
