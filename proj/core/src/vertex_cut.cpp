#include "vertex_cut.hpp"

#include <algorithm>

namespace dfvs::detail {

namespace {

constexpr std::int64_t kInternalForward = -1;
constexpr std::int64_t kInternalBackward = -2;
constexpr std::int32_t kUnseen = -2;
constexpr std::int32_t kRoot = -1;

}  // namespace

VertexCutNetwork::VertexCutNetwork(const Digraph& d)
    : d_(&d),
      roles_(d.num_vertices(), Role::kFree),
      through_(d.num_vertices(), 0),
      arc_flow_(d.num_arcs(), 0),
      parent_(2 * d.num_vertices(), kUnseen),
      via_(2 * d.num_vertices(), 0) {
  queue_.reserve(2 * d.num_vertices());
}

void VertexCutNetwork::reset_roles(Role r) { std::fill(roles_.begin(), roles_.end(), r); }

void VertexCutNetwork::clear_flow() {
  std::fill(through_.begin(), through_.end(), 0);
  std::fill(arc_flow_.begin(), arc_flow_.end(), 0);
  value_ = 0;
}

bool VertexCutNetwork::find_path() {
  std::fill(parent_.begin(), parent_.end(), kUnseen);
  queue_.clear();
  const auto n = static_cast<Vertex>(d_->num_vertices());
  for (Vertex v = 0; v < n; ++v) {
    if (roles_[v] != Role::kSource) continue;
    parent_[in_node(v)] = parent_[out_node(v)] = kRoot;
    queue_.push_back(out_node(v));
  }
  std::int32_t found = -1;
  for (std::size_t head = 0; head < queue_.size() && found < 0; ++head) {
    const std::int32_t node = queue_[head];
    for_each_residual_out(node, [&](std::int32_t next, std::int64_t via) {
      if (parent_[next] != kUnseen) return true;
      parent_[next] = node;
      via_[next] = via;
      if (roles_[next >> 1] == Role::kSink) {
        found = next;
        return false;
      }
      queue_.push_back(next);
      return true;
    });
  }
  if (found < 0) return false;
  for (std::int32_t node = found; parent_[node] != kRoot; node = parent_[node]) {
    const std::int64_t via = via_[node];
    const Vertex v = node >> 1;
    if (via == kInternalForward) {
      if (roles_[v] == Role::kFree || roles_[v] == Role::kFixed) ++through_[v];
    } else if (via == kInternalBackward) {
      if (roles_[v] == Role::kFree || roles_[v] == Role::kFixed) --through_[v];
    } else if ((via & 1) == 0) {
      ++arc_flow_[via >> 1];
    } else {
      --arc_flow_[via >> 1];
    }
  }
  ++value_;
  return true;
}

int VertexCutNetwork::augment(int limit) {
  for (int pushed = 0; pushed < limit; ++pushed) {
    if (!find_path()) break;
  }
  return value_;
}

std::vector<char> VertexCutNetwork::reach_from_sources() const {
  const auto n = static_cast<Vertex>(d_->num_vertices());
  std::vector<char> seen(2 * n, 0);
  std::vector<std::int32_t> queue;
  for (Vertex v = 0; v < n; ++v) {
    if (roles_[v] != Role::kSource) continue;
    seen[in_node(v)] = seen[out_node(v)] = 1;
    queue.push_back(in_node(v));
    queue.push_back(out_node(v));
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::int32_t node = queue[head];
    for_each_residual_out(node, [&](std::int32_t next, std::int64_t) {
      if (!seen[next]) {
        seen[next] = 1;
        queue.push_back(next);
      }
      return true;
    });
  }
  return seen;
}

std::vector<char> VertexCutNetwork::reach_to_sinks() const {
  const auto n = static_cast<Vertex>(d_->num_vertices());
  std::vector<char> seen(2 * n, 0);
  std::vector<std::int32_t> queue;
  for (Vertex v = 0; v < n; ++v) {
    if (roles_[v] != Role::kSink) continue;
    seen[in_node(v)] = seen[out_node(v)] = 1;
    queue.push_back(in_node(v));
    queue.push_back(out_node(v));
  }
  auto visit = [&](std::int32_t node) {
    if (!seen[node]) {
      seen[node] = 1;
      queue.push_back(node);
    }
  };
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::int32_t node = queue[head];
    const Vertex v = node >> 1;
    if ((node & 1) == 0) {
      // Predecessors of v_in: v_out via the backward internal arc, a_out via arc (a, v).
      if (internal_backward_open(v)) visit(out_node(v));
      for (Vertex a : d_->in(v)) {
        if (alive(a)) visit(out_node(a));
      }
    } else {
      // Predecessors of v_out: v_in via the forward internal arc, b_in via a used arc (v, b).
      if (internal_forward_open(v)) visit(in_node(v));
      auto heads = d_->out(v);
      const std::uint32_t first = d_->first_out_arc(v);
      for (std::size_t i = 0; i < heads.size(); ++i) {
        if (alive(heads[i]) && arc_flow_[first + i] > 0) visit(in_node(heads[i]));
      }
    }
  }
  return seen;
}

Digraph VertexCutNetwork::residual_digraph() const {
  const auto n = static_cast<Vertex>(d_->num_vertices());
  std::vector<Arc> arcs;
  arcs.reserve(2 * d_->num_arcs() + 2 * d_->num_vertices());
  for (std::int32_t node = 0; node < 2 * n; ++node) {
    if (!alive(node >> 1)) continue;
    for_each_residual_out(node, [&](std::int32_t next, std::int64_t) {
      arcs.push_back({node, next});
      return true;
    });
  }
  return Digraph(2 * static_cast<std::size_t>(n), arcs);
}

}  // namespace dfvs::detail
