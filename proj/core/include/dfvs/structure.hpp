#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "dfvs/digraph.hpp"

namespace dfvs {

// A relation over the vertex set, stored as a flat array of fixed-arity tuples.
struct Relation {
  int arity = 1;
  std::vector<Vertex> entries;

  std::size_t num_tuples() const { return arity > 0 ? entries.size() / arity : 0; }
  std::span<const Vertex> tuple(std::size_t i) const {
    return {entries.data() + i * arity, static_cast<std::size_t>(arity)};
  }
  friend bool operator==(const Relation&, const Relation&) = default;
};

// A digraph plus relations of arity at most epsilon.
class StructureInstance {
 public:
  StructureInstance() = default;
  explicit StructureInstance(Digraph graph, std::vector<Relation> relations = {},
                             int epsilon = 1);

  const Digraph& graph() const noexcept { return graph_; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  int epsilon() const noexcept { return epsilon_; }
  std::size_t num_vertices() const noexcept { return graph_.num_vertices(); }

  // n + m + epsilon * (total number of tuples).
  std::size_t size() const noexcept;

 private:
  Digraph graph_;
  std::vector<Relation> relations_;
  int epsilon_ = 1;
};

struct InducedStructure {
  StructureInstance instance;
  VertexList to_parent;
};

// Relations are restricted to the tuples lying entirely inside the kept set.
InducedStructure induce(const StructureInstance& q, std::span<const Vertex> keep);
InducedStructure remove(const StructureInstance& q, std::span<const Vertex> removed);
std::vector<InducedStructure> induce_parts(const StructureInstance& q, std::span<const int> part,
                                           int num_parts);

// A hereditary, rigid class of structures with a linear-time recognizer.
// Rigidity lets callers skip recognition of arc-free pieces.
class StructureFamily {
 public:
  virtual ~StructureFamily() = default;
  virtual bool recognize(const StructureInstance& q) const = 0;
  virtual std::string_view name() const = 0;
  std::size_t size(const StructureInstance& q) const { return q.size(); }
};

// Acyclic digraphs: the family behind Directed Feedback Vertex Set.
class AcyclicFamily final : public StructureFamily {
 public:
  bool recognize(const StructureInstance& q) const override;
  std::string_view name() const override { return "acyclic"; }
};

const StructureFamily& acyclic_family();

bool dfvs_family_recognize(const StructureInstance& q);

}  // namespace dfvs
