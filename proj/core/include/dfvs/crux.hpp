#pragma once

#include <string>
#include <vector>

#include "dfvs/digraph.hpp"
#include "dfvs/structure.hpp"
#include "dfvs/tight_sequence.hpp"

namespace dfvs {

// Which sides of a u-v separator induce substructures inside the family.
// Left = reachable from u after deleting the separator; right = the rest.
enum class Goodness {
  kLeft,      // left in, right out
  kRight,     // left out, right in
  kDual,      // both out
  kComplete,  // both in
};

struct SeparatorClass {
  Goodness goodness = Goodness::kComplete;
  bool l_light = false;  // 2 |left| <= |Q|
  bool r_light = false;  // 2 |right| <= |Q|
  std::size_t left_size = 0;
  std::size_t right_size = 0;
};

// Throws std::invalid_argument unless sep avoids u, v and separates them.
SeparatorClass classify(const StructureInstance& q, Vertex u, Vertex v, const VertexList& sep,
                        const StructureFamily& family = acyclic_family());

enum class CruxProperty {
  kDeletionSet = 1,       // Q - S is in the family
  kTwoBadComponents = 2,  // D - S has at least two strong components outside the family
  kBalancedSplit = 3,     // exactly one such component, of at most half the size
  kBudgetDrop = 4,        // a solution of size <= p forces one of size <= p - 1 in Q - S
};

std::string to_string(Goodness g);
std::string to_string(CruxProperty p);

// Earliest property that S satisfies literally; P4 when none of P1-P3 holds.
struct PropertyCheck {
  CruxProperty property = CruxProperty::kBudgetDrop;
  std::vector<VertexList> bad_components;  // strong components of D - S outside the family
};
PropertyCheck evaluate_properties(const StructureInstance& q, const VertexList& s,
                                  const StructureFamily& family = acyclic_family());

struct CruxOutcome {
  bool no_separator = false;
  VertexList set;  // sorted
  CruxProperty property = CruxProperty::kBudgetDrop;
  std::vector<VertexList> bad_components;
  std::vector<std::string> path;  // cascade steps, for tracing
};

// Requires q outside the family, its digraph strongly connected, u != v.
CruxOutcome crux(const StructureInstance& q, Vertex u, Vertex v, int p,
                 const StructureFamily& family = acyclic_family());

}  // namespace dfvs
