#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dfvs {

using Vertex = std::int32_t;
inline constexpr Vertex kNoVertex = -1;
using VertexList = std::vector<Vertex>;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

namespace detail {
struct DigraphBuilder;
}

// Immutable digraph in CSR layout. Arcs are sorted by (tail, head) and
// deduplicated; an arc's id is its position in that order.
class Digraph {
 public:
  Digraph() = default;
  Digraph(std::size_t num_vertices, std::span<const Arc> arcs);
  Digraph(std::size_t num_vertices, std::initializer_list<Arc> arcs)
      : Digraph(num_vertices, std::span<const Arc>(arcs.begin(), arcs.size())) {}

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_arcs() const noexcept { return heads_.size(); }
  // |D| = n + m.
  std::size_t size() const noexcept { return n_ + heads_.size(); }
  bool empty() const noexcept { return n_ == 0; }

  std::span<const Vertex> out(Vertex v) const {
    return {heads_.data() + out_offsets_[v], heads_.data() + out_offsets_[v + 1]};
  }
  std::span<const Vertex> in(Vertex v) const {
    return {in_tails_.data() + in_offsets_[v], in_tails_.data() + in_offsets_[v + 1]};
  }
  // Arc ids parallel to in(v).
  std::span<const std::uint32_t> in_arc_ids(Vertex v) const {
    return {in_ids_.data() + in_offsets_[v], in_ids_.data() + in_offsets_[v + 1]};
  }
  // Arc ids of out(v) are the contiguous range [first_out_arc(v), first_out_arc(v+1)).
  std::uint32_t first_out_arc(Vertex v) const { return out_offsets_[v]; }
  std::size_t out_degree(Vertex v) const { return out_offsets_[v + 1] - out_offsets_[v]; }
  std::size_t in_degree(Vertex v) const { return in_offsets_[v + 1] - in_offsets_[v]; }

  Arc arc(std::size_t id) const { return {tails_[id], heads_[id]}; }
  std::vector<Arc> arcs() const;
  bool has_arc(Vertex tail, Vertex head) const;
  bool has_self_loop(Vertex v) const { return has_arc(v, v); }
  std::size_t num_self_loops() const noexcept { return self_loops_; }

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.tails_ == b.tails_ && a.heads_ == b.heads_;
  }

 private:
  friend struct detail::DigraphBuilder;
  // Arcs already sorted by (tail, head), distinct and in range.
  static Digraph from_sorted(std::size_t n, std::vector<Vertex> tails, std::vector<Vertex> heads);
  void build_in_lists();

  std::size_t n_ = 0;
  std::vector<std::uint32_t> out_offsets_{0};
  std::vector<Vertex> tails_;
  std::vector<Vertex> heads_;
  std::vector<std::uint32_t> in_offsets_{0};
  std::vector<Vertex> in_tails_;
  std::vector<std::uint32_t> in_ids_;
  std::size_t self_loops_ = 0;
};

// Subgraph together with its id translation. to_parent is a bijection from
// the new ids onto the kept vertices; from_parent holds kNoVertex for vertices
// that were dropped.
struct InducedGraph {
  Digraph graph;
  VertexList to_parent;
  VertexList from_parent;
};

// Same digraph with vertices renumbered in depth-first preorder, so that
// traversals touch memory roughly sequentially. to_parent gives the old ids.
InducedGraph reorder_for_locality(const Digraph& d);

// New ids follow the parent's vertex order. Throws std::out_of_range on a bad id.
InducedGraph induced(const Digraph& d, std::span<const Vertex> keep);
InducedGraph without(const Digraph& d, std::span<const Vertex> removed);

// Splits d into the subgraphs induced by each part in a single pass.
// part[v] in [0, num_parts) or -1 for vertices that belong to no part.
// from_parent is left empty in the results.
std::vector<InducedGraph> induce_parts(const Digraph& d, std::span<const int> part, int num_parts);

// Marks every vertex reachable from `sources` without entering a blocked vertex.
// Sources are marked even if blocked.
std::vector<char> reachable_from(const Digraph& d, std::span<const Vertex> sources,
                                 std::span<const char> blocked = {});

bool is_acyclic(const Digraph& d);
bool is_acyclic_without(const Digraph& d, std::span<const Vertex> removed);

// Sorts and removes duplicates in place.
void normalize(VertexList& set);
VertexList normalized(VertexList set);

}  // namespace dfvs
