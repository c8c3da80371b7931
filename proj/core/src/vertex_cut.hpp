#pragma once

#include <cstdint>
#include <vector>

#include "dfvs/digraph.hpp"

namespace dfvs::detail {

// Unit vertex-capacity flow between vertex sets, on the split network where
// each vertex v becomes in-node 2v and out-node 2v+1. Arc capacities are
// unbounded and never materialized: residual arcs are derived on the fly from
// the flow counters.
class VertexCutNetwork {
 public:
  enum class Role : std::uint8_t {
    kFree,     // capacity 1
    kFixed,    // undeletable, unbounded capacity
    kSource,
    kSink,
    kBlocked,  // removed from the graph
  };

  explicit VertexCutNetwork(const Digraph& d);

  const Digraph& graph() const { return *d_; }
  void set_role(Vertex v, Role r) { roles_[v] = r; }
  Role role(Vertex v) const { return roles_[v]; }
  void reset_roles(Role r = Role::kFree);
  void clear_flow();

  // Pushes augmenting paths until none is left or `limit` units were added.
  // Returns the total flow value.
  int augment(int limit);
  int value() const { return value_; }

  // Per split node: reachable from a source in the residual network.
  std::vector<char> reach_from_sources() const;
  // Per split node: can reach a sink in the residual network.
  std::vector<char> reach_to_sinks() const;
  // The residual network as an explicit digraph on 2n nodes.
  Digraph residual_digraph() const;

  int through(Vertex v) const { return through_[v]; }
  int arc_flow(std::size_t arc_id) const { return arc_flow_[arc_id]; }

 private:
  bool internal_forward_open(Vertex v) const {
    return roles_[v] != Role::kFree || through_[v] == 0;
  }
  bool internal_backward_open(Vertex v) const {
    return roles_[v] == Role::kSource || roles_[v] == Role::kSink || through_[v] > 0;
  }
  bool alive(Vertex v) const { return roles_[v] != Role::kBlocked; }
  bool find_path();

  static std::int32_t in_node(Vertex v) { return 2 * v; }
  static std::int32_t out_node(Vertex v) { return 2 * v + 1; }

  // Visits residual arcs leaving `node` as f(next_node, via) until f returns
  // false. via: -1 / -2 for the internal arc forward / backward, 2e / 2e+1
  // for arc e used forward / backward.
  template <class F>
  void for_each_residual_out(std::int32_t node, F&& f) const {
    const Vertex v = node >> 1;
    if ((node & 1) == 0) {
      if (internal_forward_open(v) && !f(out_node(v), std::int64_t{-1})) return;
      auto tails = d_->in(v);
      auto ids = d_->in_arc_ids(v);
      for (std::size_t i = 0; i < tails.size(); ++i) {
        if (arc_flow_[ids[i]] > 0 && alive(tails[i]) &&
            !f(out_node(tails[i]), 2 * static_cast<std::int64_t>(ids[i]) + 1)) {
          return;
        }
      }
    } else {
      if (internal_backward_open(v) && !f(in_node(v), std::int64_t{-2})) return;
      auto heads = d_->out(v);
      const std::uint32_t first = d_->first_out_arc(v);
      for (std::size_t i = 0; i < heads.size(); ++i) {
        if (alive(heads[i]) &&
            !f(in_node(heads[i]), 2 * static_cast<std::int64_t>(first + i))) {
          return;
        }
      }
    }
  }

  const Digraph* d_;
  std::vector<Role> roles_;
  std::vector<int> through_;
  std::vector<int> arc_flow_;
  int value_ = 0;

  // BFS scratch, per split node.
  std::vector<std::int32_t> parent_;
  std::vector<std::int64_t> via_;
  std::vector<std::int32_t> queue_;
};

}  // namespace dfvs::detail
