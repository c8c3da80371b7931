#include "dfvs/structure.hpp"

#include <stdexcept>

namespace dfvs {

StructureInstance::StructureInstance(Digraph graph, std::vector<Relation> relations, int epsilon)
    : graph_(std::move(graph)), relations_(std::move(relations)), epsilon_(epsilon) {
  if (epsilon_ < 1) throw std::invalid_argument("epsilon must be positive");
  const auto n = static_cast<Vertex>(graph_.num_vertices());
  for (const Relation& r : relations_) {
    if (r.arity < 1 || r.arity > epsilon_) {
      throw std::invalid_argument("relation arity must lie in [1, epsilon]");
    }
    if (r.entries.size() % r.arity != 0) {
      throw std::invalid_argument("relation entries are not a whole number of tuples");
    }
    for (Vertex v : r.entries) {
      if (v < 0 || v >= n) throw std::out_of_range("relation tuple names an unknown vertex");
    }
  }
}

std::size_t StructureInstance::size() const noexcept {
  std::size_t tuples = 0;
  for (const Relation& r : relations_) tuples += r.num_tuples();
  return graph_.size() + static_cast<std::size_t>(epsilon_) * tuples;
}

namespace {

std::vector<Relation> restrict_relations(const std::vector<Relation>& relations,
                                         const VertexList& from_parent) {
  std::vector<Relation> out;
  out.reserve(relations.size());
  for (const Relation& r : relations) {
    Relation kept{r.arity, {}};
    for (std::size_t i = 0; i < r.num_tuples(); ++i) {
      auto t = r.tuple(i);
      bool inside = true;
      for (Vertex v : t) inside = inside && from_parent[v] != kNoVertex;
      if (!inside) continue;
      for (Vertex v : t) kept.entries.push_back(from_parent[v]);
    }
    out.push_back(std::move(kept));
  }
  return out;
}

}  // namespace

InducedStructure induce(const StructureInstance& q, std::span<const Vertex> keep) {
  InducedGraph g = induced(q.graph(), keep);
  auto rel = restrict_relations(q.relations(), g.from_parent);
  return {StructureInstance(std::move(g.graph), std::move(rel), q.epsilon()),
          std::move(g.to_parent)};
}

InducedStructure remove(const StructureInstance& q, std::span<const Vertex> removed) {
  InducedGraph g = without(q.graph(), removed);
  auto rel = restrict_relations(q.relations(), g.from_parent);
  return {StructureInstance(std::move(g.graph), std::move(rel), q.epsilon()),
          std::move(g.to_parent)};
}

std::vector<InducedStructure> induce_parts(const StructureInstance& q, std::span<const int> part,
                                           int num_parts) {
  auto graphs = induce_parts(q.graph(), part, num_parts);
  // Local ids: position inside the part's to_parent list.
  std::vector<Vertex> local(q.num_vertices(), kNoVertex);
  for (const InducedGraph& g : graphs) {
    for (std::size_t i = 0; i < g.to_parent.size(); ++i) {
      local[g.to_parent[i]] = static_cast<Vertex>(i);
    }
  }
  std::vector<std::vector<Relation>> rels(graphs.size());
  for (auto& r : rels) {
    for (const Relation& src : q.relations()) r.push_back({src.arity, {}});
  }
  for (std::size_t ri = 0; ri < q.relations().size(); ++ri) {
    const Relation& src = q.relations()[ri];
    for (std::size_t i = 0; i < src.num_tuples(); ++i) {
      auto t = src.tuple(i);
      int p = part[t[0]];
      bool inside = p >= 0;
      for (Vertex v : t) inside = inside && part[v] == p;
      if (!inside) continue;
      for (Vertex v : t) rels[p][ri].entries.push_back(local[v]);
    }
  }
  std::vector<InducedStructure> out;
  out.reserve(graphs.size());
  for (std::size_t p = 0; p < graphs.size(); ++p) {
    out.push_back({StructureInstance(std::move(graphs[p].graph), std::move(rels[p]), q.epsilon()),
                   std::move(graphs[p].to_parent)});
  }
  return out;
}

bool AcyclicFamily::recognize(const StructureInstance& q) const {
  return is_acyclic(q.graph());
}

const StructureFamily& acyclic_family() {
  static const AcyclicFamily family;
  return family;
}

bool dfvs_family_recognize(const StructureInstance& q) {
  if (!q.relations().empty()) {
    for (const Relation& r : q.relations()) {
      if (r.num_tuples() != 0) {
        throw std::invalid_argument("the acyclic family takes structures without relations");
      }
    }
  }
  return is_acyclic(q.graph());
}

}  // namespace dfvs
