#include "dfvs/separators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "dfvs/scc.hpp"
#include "vertex_cut.hpp"

namespace dfvs {

namespace {

using detail::VertexCutNetwork;

void check_terminals(const Digraph& d, Vertex s, Vertex t, int k) {
  const auto n = static_cast<Vertex>(d.num_vertices());
  if (s < 0 || s >= n || t < 0 || t >= n) throw std::out_of_range("terminal outside the graph");
  if (s == t) throw std::invalid_argument("source and sink must differ");
  if (k < 0) throw std::invalid_argument("budget must be non-negative");
}

// Runs at most k + 1 augmentations; nullopt-like ExceedsBudget when that many succeed.
Bounded<int> run_flow(VertexCutNetwork& net, const Digraph& d, Vertex s, Vertex t, int k) {
  if (d.has_arc(s, t)) return ExceedsBudget{true};
  net.set_role(s, VertexCutNetwork::Role::kSource);
  net.set_role(t, VertexCutNetwork::Role::kSink);
  const int value = net.augment(k + 1);
  if (value > k) return ExceedsBudget{false};
  return value;
}

}  // namespace

VertexList SeparatorChain::prefix_set(std::size_t i) const {
  if (i == 0 || i > deltas.size() + 1) throw std::out_of_range("prefix_set: index out of range");
  VertexList out;
  for (std::size_t j = 0; j < std::min(i, deltas.size()); ++j) {
    out.insert(out.end(), deltas[j].begin(), deltas[j].end());
  }
  if (i == deltas.size() + 1) out.insert(out.end(), beyond.begin(), beyond.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> SeparatorChain::labels(std::size_t num_vertices) const {
  std::vector<int> lab(num_vertices, 0);
  for (std::size_t j = 0; j < deltas.size(); ++j) {
    for (Vertex v : deltas[j]) lab[v] = static_cast<int>(j + 1);
  }
  for (Vertex v : beyond) lab[v] = static_cast<int>(deltas.size() + 1);
  return lab;
}

Bounded<VertexFlow> max_vertex_flow(const Digraph& d, Vertex s, Vertex t, int budget) {
  check_terminals(d, s, t, budget);
  VertexCutNetwork net(d);
  auto value = run_flow(net, d, s, t, budget);
  if (auto* e = std::get_if<ExceedsBudget>(&value)) return *e;
  VertexFlow flow;
  flow.value = std::get<int>(value);
  flow.through.resize(d.num_vertices());
  for (std::size_t v = 0; v < d.num_vertices(); ++v) {
    flow.through[v] = net.through(static_cast<Vertex>(v)) > 0 ? 1 : 0;
  }
  flow.arc_flow.resize(d.num_arcs());
  for (std::size_t e = 0; e < d.num_arcs(); ++e) flow.arc_flow[e] = net.arc_flow(e) > 0 ? 1 : 0;
  flow.residual = net.residual_digraph();
  return flow;
}

Bounded<ResidualLevels> residual_levels(const Digraph& d, Vertex s, Vertex t, int k) {
  check_terminals(d, s, t, k);
  VertexCutNetwork net(d);
  auto value = run_flow(net, d, s, t, k);
  if (auto* e = std::get_if<ExceedsBudget>(&value)) return *e;
  ResidualLevels levels;
  levels.lambda = std::get<int>(value);
  SccDecomposition scc = scc_decompose(net.residual_digraph());
  levels.alpha = std::move(scc.component);
  levels.source_level = levels.alpha[2 * s];
  levels.sink_level = levels.alpha[2 * t];
  return levels;
}

Bounded<SeparatorChain> separator_layers(const Digraph& d, Vertex s, Vertex t, int k) {
  auto computed = residual_levels(d, s, t, k);
  if (auto* e = std::get_if<ExceedsBudget>(&computed)) return *e;
  const ResidualLevels& lv = std::get<ResidualLevels>(computed);
  const auto n = d.num_vertices();

  SeparatorChain chain;
  chain.source = s;
  chain.sink = t;
  chain.lambda = lv.lambda;

  if (lv.lambda == 0) {
    auto reach = reachable_from(d, std::span<const Vertex>(&s, 1));
    VertexList x;
    for (std::size_t v = 0; v < n; ++v) {
      if (reach[v]) x.push_back(static_cast<Vertex>(v));
    }
    chain.deltas.push_back(std::move(x));
    chain.boundaries.emplace_back();
    return chain;
  }

  // Layer i holds the vertices w whose out-node sits at topological level >= i.
  // Vertices met too early wait in `pending` until the level drops far enough.
  std::vector<char> in_x(n, 0), waiting(n, 0);
  VertexList stack{s}, pending, delta{s};
  in_x[s] = 1;
  int level = lv.source_level;
  auto allowed = [&](Vertex w) { return lv.alpha[2 * w + 1] >= level; };

  while (true) {
    while (!stack.empty()) {
      Vertex a = stack.back();
      stack.pop_back();
      for (Vertex w : d.out(a)) {
        if (in_x[w] || waiting[w]) continue;
        if (allowed(w)) {
          in_x[w] = 1;
          delta.push_back(w);
          stack.push_back(w);
        } else {
          waiting[w] = 1;
          pending.push_back(w);
        }
      }
    }
    if (!delta.empty()) {
      VertexList boundary = pending;
      std::sort(boundary.begin(), boundary.end());
      if (static_cast<int>(boundary.size()) != lv.lambda ||
          std::binary_search(boundary.begin(), boundary.end(), t)) {
        throw std::logic_error("separator_layers: layer boundary is not a minimum separator");
      }
      chain.deltas.push_back(std::move(delta));
      chain.boundaries.push_back(std::move(boundary));
      delta.clear();
    }
    if (--level <= lv.sink_level) break;
    std::size_t kept = 0;
    for (Vertex w : pending) {
      if (allowed(w)) {
        waiting[w] = 0;
        in_x[w] = 1;
        delta.push_back(w);
        stack.push_back(w);
      } else {
        pending[kept++] = w;
      }
    }
    pending.resize(kept);
  }

  auto reach = reachable_from(d, std::span<const Vertex>(&s, 1));
  for (std::size_t v = 0; v < n; ++v) {
    if (reach[v] && !in_x[v] && static_cast<Vertex>(v) != t) {
      chain.beyond.push_back(static_cast<Vertex>(v));
    }
  }
  return chain;
}

Bounded<VertexList> min_separator(const Digraph& d, Vertex s, Vertex t, int k) {
  auto chain = separator_layers(d, s, t, k);
  if (auto* e = std::get_if<ExceedsBudget>(&chain)) return *e;
  return std::get<SeparatorChain>(chain).boundaries.front();
}

}  // namespace dfvs
