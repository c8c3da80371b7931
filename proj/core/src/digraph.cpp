#include "dfvs/digraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dfvs {

namespace {

[[noreturn, gnu::noinline]] void bad_vertex(Vertex v, std::size_t n) {
  throw std::out_of_range("vertex id " + std::to_string(v) + " outside [0, " + std::to_string(n) +
                          ")");
}

inline void check_vertex(Vertex v, std::size_t n) {
  if (v < 0 || static_cast<std::size_t>(v) >= n) [[unlikely]] bad_vertex(v, n);
}

}  // namespace

Digraph::Digraph(std::size_t num_vertices, std::span<const Arc> arcs) : n_(num_vertices) {
  for (const Arc& a : arcs) {
    check_vertex(a.tail, n_);
    check_vertex(a.head, n_);
  }
  // Two stable counting passes: by head, then by tail.
  std::vector<std::uint32_t> count(n_ + 1, 0);
  std::vector<Arc> by_head(arcs.size());
  for (const Arc& a : arcs) ++count[a.head + 1];
  for (std::size_t i = 0; i < n_; ++i) count[i + 1] += count[i];
  for (const Arc& a : arcs) by_head[count[a.head]++] = a;

  std::fill(count.begin(), count.end(), 0);
  std::vector<Arc> sorted(arcs.size());
  for (const Arc& a : by_head) ++count[a.tail + 1];
  for (std::size_t i = 0; i < n_; ++i) count[i + 1] += count[i];
  for (const Arc& a : by_head) sorted[count[a.tail]++] = a;

  tails_.reserve(sorted.size());
  heads_.reserve(sorted.size());
  out_offsets_.assign(n_ + 1, 0);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0 && sorted[i] == sorted[i - 1]) continue;
    tails_.push_back(sorted[i].tail);
    heads_.push_back(sorted[i].head);
    ++out_offsets_[sorted[i].tail + 1];
    if (sorted[i].tail == sorted[i].head) ++self_loops_;
  }
  for (std::size_t i = 0; i < n_; ++i) out_offsets_[i + 1] += out_offsets_[i];
  build_in_lists();
}

void Digraph::build_in_lists() {
  in_offsets_.assign(n_ + 1, 0);
  for (Vertex h : heads_) ++in_offsets_[h + 1];
  for (std::size_t i = 0; i < n_; ++i) in_offsets_[i + 1] += in_offsets_[i];
  in_tails_.resize(heads_.size());
  in_ids_.resize(heads_.size());
  std::vector<std::uint32_t> fill(in_offsets_.begin(), in_offsets_.end() - 1);
  for (std::uint32_t id = 0; id < heads_.size(); ++id) {
    std::uint32_t pos = fill[heads_[id]]++;
    in_tails_[pos] = tails_[id];
    in_ids_[pos] = id;
  }
}

Digraph Digraph::from_sorted(std::size_t n, std::vector<Vertex> tails, std::vector<Vertex> heads) {
  Digraph d;
  d.n_ = n;
  d.out_offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < tails.size(); ++i) {
    ++d.out_offsets_[tails[i] + 1];
    if (tails[i] == heads[i]) ++d.self_loops_;
  }
  for (std::size_t i = 0; i < n; ++i) d.out_offsets_[i + 1] += d.out_offsets_[i];
  d.tails_ = std::move(tails);
  d.heads_ = std::move(heads);
  d.build_in_lists();
  return d;
}

struct detail::DigraphBuilder {
  static Digraph make(std::size_t n, std::vector<Vertex> tails, std::vector<Vertex> heads) {
    return Digraph::from_sorted(n, std::move(tails), std::move(heads));
  }
};

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> out(heads_.size());
  for (std::size_t i = 0; i < heads_.size(); ++i) out[i] = {tails_[i], heads_[i]};
  return out;
}

bool Digraph::has_arc(Vertex tail, Vertex head) const {
  auto nb = out(tail);
  return std::binary_search(nb.begin(), nb.end(), head);
}

InducedGraph induced(const Digraph& d, std::span<const Vertex> keep) {
  const std::size_t n = d.num_vertices();
  InducedGraph r;
  r.from_parent.assign(n, kNoVertex);
  for (Vertex v : keep) {
    check_vertex(v, n);
    r.from_parent[v] = 0;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (r.from_parent[v] != kNoVertex) {
      r.from_parent[v] = static_cast<Vertex>(r.to_parent.size());
      r.to_parent.push_back(static_cast<Vertex>(v));
    }
  }
  // The relabelling is monotone, so walking the parent's CSR yields sorted arcs.
  std::vector<Vertex> tails, heads;
  for (Vertex v : r.to_parent) {
    for (Vertex w : d.out(v)) {
      if (r.from_parent[w] == kNoVertex) continue;
      tails.push_back(r.from_parent[v]);
      heads.push_back(r.from_parent[w]);
    }
  }
  r.graph = detail::DigraphBuilder::make(r.to_parent.size(), std::move(tails), std::move(heads));
  return r;
}

InducedGraph reorder_for_locality(const Digraph& d) {
  const std::size_t n = d.num_vertices();
  InducedGraph r;
  r.from_parent.assign(n, kNoVertex);
  r.to_parent.reserve(n);
  std::vector<std::pair<Vertex, std::uint32_t>> stack;
  for (std::size_t root = 0; root < n; ++root) {
    if (r.from_parent[root] != kNoVertex) continue;
    r.from_parent[root] = static_cast<Vertex>(r.to_parent.size());
    r.to_parent.push_back(static_cast<Vertex>(root));
    stack.push_back({static_cast<Vertex>(root), 0});
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      auto nb = d.out(v);
      if (next == nb.size()) {
        stack.pop_back();
        continue;
      }
      const Vertex w = nb[next++];
      if (r.from_parent[w] != kNoVertex) continue;
      r.from_parent[w] = static_cast<Vertex>(r.to_parent.size());
      r.to_parent.push_back(w);
      stack.push_back({w, 0});
    }
  }
  std::vector<Arc> arcs;
  arcs.reserve(d.num_arcs());
  for (Vertex v : r.to_parent) {
    for (Vertex w : d.out(v)) arcs.push_back({r.from_parent[v], r.from_parent[w]});
  }
  r.graph = Digraph(n, arcs);
  return r;
}

InducedGraph without(const Digraph& d, std::span<const Vertex> removed) {
  std::vector<char> gone(d.num_vertices(), 0);
  for (Vertex v : removed) {
    check_vertex(v, d.num_vertices());
    gone[v] = 1;
  }
  VertexList keep;
  keep.reserve(d.num_vertices());
  for (std::size_t v = 0; v < d.num_vertices(); ++v) {
    if (!gone[v]) keep.push_back(static_cast<Vertex>(v));
  }
  return induced(d, keep);
}

std::vector<InducedGraph> induce_parts(const Digraph& d, std::span<const int> part,
                                       int num_parts) {
  const std::size_t n = d.num_vertices();
  if (part.size() != n) throw std::invalid_argument("induce_parts: part map has wrong length");
  std::vector<InducedGraph> parts(static_cast<std::size_t>(std::max(num_parts, 0)));
  std::vector<Vertex> local(n, kNoVertex);
  for (std::size_t v = 0; v < n; ++v) {
    int p = part[v];
    if (p < 0) continue;
    if (p >= num_parts) throw std::out_of_range("induce_parts: part id out of range");
    local[v] = static_cast<Vertex>(parts[p].to_parent.size());
    parts[p].to_parent.push_back(static_cast<Vertex>(v));
  }
  std::vector<std::vector<Vertex>> tails(parts.size()), heads(parts.size());
  for (std::size_t v = 0; v < n; ++v) {
    int p = part[v];
    if (p < 0) continue;
    for (Vertex w : d.out(static_cast<Vertex>(v))) {
      if (part[w] != p) continue;
      tails[p].push_back(local[v]);
      heads[p].push_back(local[w]);
    }
  }
  for (std::size_t p = 0; p < parts.size(); ++p) {
    parts[p].graph = detail::DigraphBuilder::make(parts[p].to_parent.size(),
                                                       std::move(tails[p]), std::move(heads[p]));
  }
  return parts;
}

std::vector<char> reachable_from(const Digraph& d, std::span<const Vertex> sources,
                                 std::span<const char> blocked) {
  std::vector<char> seen(d.num_vertices(), 0);
  VertexList stack;
  for (Vertex s : sources) {
    check_vertex(s, d.num_vertices());
    if (!seen[s]) {
      seen[s] = 1;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : d.out(v)) {
      if (seen[w] || (!blocked.empty() && blocked[w])) continue;
      seen[w] = 1;
      stack.push_back(w);
    }
  }
  return seen;
}

namespace {

bool kahn_acyclic(const Digraph& d, const std::vector<char>* gone) {
  const std::size_t n = d.num_vertices();
  std::vector<std::uint32_t> indeg(n, 0);
  VertexList ready;
  std::size_t alive = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (gone && (*gone)[v]) continue;
    ++alive;
    for (Vertex u : d.in(static_cast<Vertex>(v))) {
      if (!gone || !(*gone)[u]) ++indeg[v];
    }
    if (indeg[v] == 0) ready.push_back(static_cast<Vertex>(v));
  }
  std::size_t done = 0;
  while (!ready.empty()) {
    Vertex v = ready.back();
    ready.pop_back();
    ++done;
    for (Vertex w : d.out(v)) {
      if (gone && (*gone)[w]) continue;
      if (--indeg[w] == 0) ready.push_back(w);
    }
  }
  return done == alive;
}

}  // namespace

bool is_acyclic(const Digraph& d) { return kahn_acyclic(d, nullptr); }

bool is_acyclic_without(const Digraph& d, std::span<const Vertex> removed) {
  std::vector<char> gone(d.num_vertices(), 0);
  for (Vertex v : removed) {
    check_vertex(v, d.num_vertices());
    gone[v] = 1;
  }
  return kahn_acyclic(d, &gone);
}

void normalize(VertexList& set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
}

VertexList normalized(VertexList set) {
  normalize(set);
  return set;
}

}  // namespace dfvs
