#include "dfvs/tight_sequence.hpp"

#include <algorithm>
#include <stdexcept>

namespace dfvs {

namespace {

const VertexList& layer_boundary(const SeparatorChain& chain, std::size_t i,
                                 const VertexList& sink_only) {
  static const VertexList kEmpty;
  if (i == 0) return kEmpty;
  if (i <= chain.length()) return chain.boundaries[i - 1];
  return sink_only;
}

const VertexList& layer_vertices(const SeparatorChain& chain, std::size_t i) {
  return i <= chain.length() ? chain.deltas[i - 1] : chain.beyond;
}

}  // namespace

std::vector<LocalGraph> build_local_graphs(const Digraph& d, const SeparatorChain& chain,
                                           LocalGraphMode mode) {
  const std::size_t n = d.num_vertices();
  const std::size_t q = chain.length();
  const std::vector<int> lab = chain.labels(n);
  const VertexList sink_only{chain.sink};
  std::vector<int> mark_prev(n, 0), mark_cur(n, 0);
  std::vector<Vertex> local(n, kNoVertex);
  std::vector<LocalGraph> layers(q + 1);

  for (std::size_t i = 1; i <= q + 1; ++i) {
    const int stamp = static_cast<int>(i);
    const VertexList& y_set = layer_vertices(chain, i);
    for (Vertex w : layer_boundary(chain, i - 1, sink_only)) mark_prev[w] = stamp;
    for (Vertex w : layer_boundary(chain, i, sink_only)) mark_cur[w] = stamp;

    auto in_p = [&](Vertex z) {
      return i == 1 ? z == chain.source : mark_prev[z] == stamp;
    };
    auto in_rest = [&](Vertex z) { return lab[z] == stamp && !in_p(z); };
    auto in_q = [&](Vertex z) { return mark_cur[z] == stamp && mark_prev[z] != stamp; };

    LocalGraph& g = layers[i - 1];
    g.to_parent = {kNoVertex, kNoVertex};
    for (Vertex y : y_set) {
      if (in_p(y)) {
        g.p_set.push_back(y);
      } else {
        local[y] = static_cast<Vertex>(g.to_parent.size());
        g.to_parent.push_back(y);
      }
    }
    for (Vertex w : layer_boundary(chain, i, sink_only)) {
      (mark_prev[w] == stamp ? g.w_set : g.q_set).push_back(w);
    }
    std::sort(g.p_set.begin(), g.p_set.end());

    std::vector<Arc> arcs;
    for (std::size_t li = 2; li < g.to_parent.size(); ++li) {
      const Vertex y = g.to_parent[li];
      for (Vertex z : d.out(y)) {
        if (in_rest(z)) {
          arcs.push_back({static_cast<Vertex>(li), local[z]});
        } else if (in_q(z)) {
          arcs.push_back({static_cast<Vertex>(li), g.sink});
        }
      }
    }
    for (Vertex p : g.p_set) {
      for (Vertex z : d.out(p)) {
        if (in_rest(z)) {
          arcs.push_back({g.source, local[z]});
        } else if (in_q(z)) {
          g.direct_arc = true;
        }
      }
    }
    if (g.direct_arc) arcs.push_back({g.source, g.sink});
    if (mode == LocalGraphMode::kWithW) {
      for (Vertex w : g.w_set) {
        const auto lw = static_cast<Vertex>(g.to_parent.size());
        g.to_parent.push_back(w);
        arcs.push_back({g.source, lw});
        arcs.push_back({lw, g.sink});
      }
    }
    g.graph = Digraph(g.to_parent.size(), arcs);
  }
  return layers;
}

LocalGraph build_local_graph(const Digraph& d, const SeparatorChain& chain, std::size_t i,
                             LocalGraphMode mode) {
  if (i == 0 || i > chain.length() + 1) throw std::out_of_range("layer index out of range");
  return std::move(build_local_graphs(d, chain, mode)[i - 1]);
}

namespace {

// Delta encoding of a tight sequence, or nullopt when lambda(s, t) > k.
std::optional<std::vector<VertexList>> tight_deltas(const Digraph& d, Vertex s, Vertex t, int k,
                                                   bool top_level) {
  auto computed = separator_layers(d, s, t, k);
  if (exceeds(computed)) return std::nullopt;
  const SeparatorChain& chain = std::get<SeparatorChain>(computed);
  if (chain.lambda == 0) {
    if (top_level) throw std::invalid_argument("tight sequence: sink not reachable from source");
    throw std::logic_error("tight sequence: local layer lost its source-sink connection");
  }

  const std::size_t q = chain.length();
  auto layers = build_local_graphs(d, chain, LocalGraphMode::kWithoutW);
  std::vector<char> in_h(d.num_vertices(), 0);
  std::vector<VertexList> out;

  for (std::size_t i = 1; i <= q + 1; ++i) {
    const LocalGraph& g = layers[i - 1];
    const int budget = k - static_cast<int>(g.w_set.size());
    std::optional<std::vector<VertexList>> sub;
    if (!g.direct_arc && budget >= 1) sub = tight_deltas(g.graph, g.source, g.sink, budget, false);
    if (sub) {
      for (std::size_t j = 0; j < sub->size(); ++j) {
        VertexList mapped;
        for (Vertex x : (*sub)[j]) {
          if (x == g.source) {
            mapped.insert(mapped.end(), g.p_set.begin(), g.p_set.end());
          } else {
            mapped.push_back(g.to_parent[x]);
          }
        }
        for (Vertex w : mapped) in_h[w] = 1;
        out.push_back(std::move(mapped));
      }
    }
    if (i <= q) {
      VertexList rest;
      for (Vertex y : chain.deltas[i - 1]) {
        if (!in_h[y]) rest.push_back(y);
      }
      if (rest.empty()) throw std::logic_error("tight sequence: layer absorbed by its local part");
      out.push_back(std::move(rest));
    }
  }
  return out;
}

}  // namespace

Bounded<TightSeparatorSequence> tight_separator_sequence(const Digraph& d, Vertex u, Vertex v,
                                                         int k) {
  auto deltas = tight_deltas(d, u, v, k, true);
  if (!deltas) {
    return ExceedsBudget{d.has_arc(u, v)};
  }
  const std::size_t n = d.num_vertices();
  TightSeparatorSequence seq;
  seq.source = u;
  seq.sink = v;
  seq.order = k;
  seq.deltas = std::move(*deltas);
  const int q = static_cast<int>(seq.deltas.size());
  seq.label.assign(n, q + 1);
  for (int j = 0; j < q; ++j) {
    for (Vertex w : seq.deltas[j]) seq.label[w] = j + 1;
  }
  seq.first_boundary.assign(n, 0);
  seq.boundaries.assign(q, {});
  for (std::size_t w = 0; w < n; ++w) {
    int lo = q + 1;
    for (Vertex x : d.in(static_cast<Vertex>(w))) lo = std::min(lo, seq.label[x]);
    if (lo >= seq.label[w]) continue;
    seq.first_boundary[w] = lo;
    for (int i = lo; i < seq.label[w]; ++i) seq.boundaries[i - 1].push_back(static_cast<Vertex>(w));
  }
  for (const VertexList& z : seq.boundaries) {
    if (static_cast<int>(z.size()) > k) {
      throw std::logic_error("tight sequence: boundary larger than the order");
    }
  }
  return seq;
}

VertexList TightSeparatorSequence::prefix_set(std::size_t i) const {
  if (i == 0 || i > deltas.size()) throw std::out_of_range("prefix_set: index out of range");
  VertexList out;
  for (std::size_t j = 0; j < i; ++j) out.insert(out.end(), deltas[j].begin(), deltas[j].end());
  std::sort(out.begin(), out.end());
  return out;
}

VertexList TightSeparatorSequence::gap(std::size_t i) const {
  if (i == 0 || i >= deltas.size()) throw std::out_of_range("gap: index out of range");
  VertexList out;
  for (Vertex w : deltas[i]) {
    const int fb = first_boundary[w];
    if (fb == 0 || fb > static_cast<int>(i)) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::size_t> llight_transition(const StructureInstance& q,
                                             const TightSeparatorSequence& seq,
                                             [[maybe_unused]] int k) {
  const std::size_t len = seq.length();
  if (len < 2) return std::nullopt;
  const Digraph& d = q.graph();
  // mass[l] = size contribution of elements whose largest label is l.
  std::vector<std::size_t> mass(len + 2, 0);
  for (std::size_t w = 0; w < d.num_vertices(); ++w) {
    const auto v = static_cast<Vertex>(w);
    mass[seq.label[w]] += 1;
    for (Vertex x : d.out(v)) mass[std::max(seq.label[w], seq.label[x])] += 1;
  }
  for (const Relation& r : q.relations()) {
    for (std::size_t i = 0; i < r.num_tuples(); ++i) {
      int top = 0;
      for (Vertex x : r.tuple(i)) top = std::max(top, seq.label[x]);
      mass[top] += static_cast<std::size_t>(q.epsilon());
    }
  }
  const std::size_t total = q.size();
  std::size_t prefix = 0;
  std::vector<char> light(len + 1, 0);
  for (std::size_t i = 1; i <= len; ++i) {
    prefix += mass[i];
    light[i] = 2 * prefix <= total;
  }
  for (std::size_t i = 1; i + 1 <= len; ++i) {
    if (light[i] && !light[i + 1]) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> find_bad_gap(const StructureInstance& q,
                                        const TightSeparatorSequence& seq,
                                        [[maybe_unused]] int k, const StructureFamily& family) {
  const std::size_t len = seq.length();
  if (len < 2) return std::nullopt;
  const Digraph& d = q.graph();
  const std::size_t n = d.num_vertices();
  // gap_of[w] = i when w lies in H_{i+1} \ N+[H_i], else 0.
  std::vector<int> gap_of(n, 0);
  for (std::size_t w = 0; w < n; ++w) {
    const int l = seq.label[w];
    if (l < 2 || l > static_cast<int>(len)) continue;
    const int fb = seq.first_boundary[w];
    if (fb == 0 || fb > l - 1) gap_of[w] = l - 1;
  }
  // Arc-free gaps are in every rigid family; recognize only the others.
  std::vector<char> has_arc(len, 0);
  for (std::size_t w = 0; w < n; ++w) {
    if (gap_of[w] == 0) continue;
    for (Vertex x : d.out(static_cast<Vertex>(w))) {
      if (gap_of[x] == gap_of[w]) has_arc[gap_of[w]] = 1;
    }
  }
  std::vector<int> part_of_gap(len, -1);
  std::vector<std::size_t> gap_of_part;
  for (std::size_t i = 1; i < len; ++i) {
    if (!has_arc[i]) continue;
    part_of_gap[i] = static_cast<int>(gap_of_part.size());
    gap_of_part.push_back(i);
  }
  if (gap_of_part.empty()) return std::nullopt;
  std::vector<int> part(n, -1);
  for (std::size_t w = 0; w < n; ++w) {
    if (gap_of[w] != 0) part[w] = part_of_gap[gap_of[w]];
  }
  auto pieces = induce_parts(q, part, static_cast<int>(gap_of_part.size()));
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    if (!family.recognize(pieces[p].instance)) return gap_of_part[p];
  }
  return std::nullopt;
}

}  // namespace dfvs
