#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dfvs/digraph.hpp"

namespace dfvs {

enum class RecursionCase { kSccSplit, kCase1, kCase2, kCase3, kCase4 };
std::string to_string(RecursionCase c);

struct TraceEntry {
  int depth = 0;
  RecursionCase which = RecursionCase::kSccSplit;
  std::size_t instance_size = 0;  // |Q| after stripping
  int budget = 0;
};

struct Solution {
  enum class Kind { kVertices, kArcs };
  Kind kind = Kind::kVertices;
  VertexList vertices;    // sorted; set when kind == kVertices
  std::vector<Arc> arcs;  // sorted; set when kind == kArcs
  int opt_size = 0;
  std::vector<TraceEntry> trace;
  std::size_t reduced_size = 0;  // |D'| of the arc-to-vertex reduction, when one was built
};

struct SolveOptions {
  bool record_trace = true;
};

// Exact minimum directed feedback vertex set of size <= k, or nullopt.
std::optional<Solution> solve_dfvs(const Digraph& d, int k, const SolveOptions& options = {});

// Smallest k' <= k_max with a solution, trying k' = 0, 1, ... in turn.
std::optional<Solution> solve_dfvs_min(const Digraph& d, int k_max,
                                       const SolveOptions& options = {});

struct DfasReduction {
  Digraph graph;
  int copies = 0;             // k + 1 copies of each original vertex
  std::size_t first_arc_vertex = 0;  // vertex n*copies + e stands for arc e
  std::vector<Arc> arcs;      // original arcs, by id
};

DfasReduction reduce_dfas_to_dfvs(const Digraph& d, int k);

// Exact minimum feedback arc set of size <= k, or nullopt.
std::optional<Solution> solve_dfas(const Digraph& d, int k, const SolveOptions& options = {});

}  // namespace dfvs
