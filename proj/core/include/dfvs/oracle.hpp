#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "dfvs/crux.hpp"
#include "dfvs/digraph.hpp"
#include "dfvs/structure.hpp"

namespace dfvs {

// Exhaustive reference solvers; subsets are tried in order of size, so the
// first hit is a minimum. Intended for n (or m) up to about 20.
std::optional<VertexList> brute_force_dfvs(const Digraph& d, int k);
std::optional<std::vector<Arc>> brute_force_dfas(const Digraph& d, int k);

// True if every s-t path meets `sep` (sep must avoid s and t).
bool is_separator(const Digraph& d, Vertex s, Vertex t, const VertexList& sep);

struct MinSeparators {
  std::optional<int> lambda;         // nullopt when t is an out-neighbour of s
  std::vector<VertexList> separators;  // every minimum s-t separator, sorted
};
MinSeparators enumerate_min_separators(const Digraph& d, Vertex s, Vertex t);

// Every inclusion-minimal s-t separator (no proper subset separates).
std::vector<VertexList> enumerate_minimal_separators(const Digraph& d, Vertex s, Vertex t);

// Exact minimum deletion-set size of a structure, or nullopt above `cap`.
using DeletionOracle = std::function<std::optional<int>(const StructureInstance&, int cap)>;
DeletionOracle dfvs_oracle();

// Checks a crux outcome: P1-P3 literally, P4 and "no separator" against the
// oracle, |S| <= 2p + 2, and that the tag is the earliest property.
bool verify_outcome(const StructureInstance& q, Vertex u, Vertex v, const CruxOutcome& out, int p,
                    const DeletionOracle& oracle,
                    const StructureFamily& family = acyclic_family());

}  // namespace dfvs
