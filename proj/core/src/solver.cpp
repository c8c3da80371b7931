#include "dfvs/solver.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "dfvs/compression.hpp"
#include "dfvs/crux.hpp"
#include "dfvs/scc.hpp"
#include "dfvs/structure.hpp"

namespace dfvs {

std::string to_string(RecursionCase c) {
  switch (c) {
    case RecursionCase::kSccSplit: return "scc-split";
    case RecursionCase::kCase1: return "case1";
    case RecursionCase::kCase2: return "case2";
    case RecursionCase::kCase3: return "case3";
    case RecursionCase::kCase4: return "case4";
  }
  return "?";
}

namespace {

class Driver {
 public:
  explicit Driver(const SolveOptions& options) : options_(options) {}

  // Minimum dfvs of q of size <= k in q's ids, or nullopt. q has no self-loops.
  std::optional<VertexList> solve(const StructureInstance& q, int k, int depth,
                                  std::size_t parent_measure) {
    const std::size_t measure = static_cast<std::size_t>(k) + q.size();
    if (measure >= parent_measure) {
      throw std::logic_error("solver: recursion measure k + |Q| did not decrease");
    }
    InducedStructure stripped = strip_trivial_components(q);
    const StructureInstance& sq = stripped.instance;
    if (sq.num_vertices() == 0) return VertexList{};
    if (k == 0) return std::nullopt;

    auto local = solve_stripped(sq, k, depth, measure);
    if (!local) return std::nullopt;
    VertexList out;
    out.reserve(local->size());
    for (Vertex v : *local) out.push_back(stripped.to_parent[v]);
    return out;
  }

  std::vector<TraceEntry> trace;

 private:
  void record(int depth, RecursionCase c, const StructureInstance& q, int k) {
    if (options_.record_trace) trace.push_back({depth, c, q.size(), k});
  }

  static VertexList lift(const InducedStructure& part, const VertexList& local) {
    VertexList out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(part.to_parent[v]);
    return out;
  }

  std::optional<VertexList> finish(const StructureInstance& q, int k, const VertexList& w,
                                   int lower_bound) {
    if (static_cast<int>(w.size()) > 5 * k) {
      throw std::logic_error("solver: compression set larger than 5k");
    }
    return smart_compress(q.graph(), k, w, lower_bound);
  }

  std::optional<VertexList> solve_stripped(const StructureInstance& q, int k, int depth,
                                           std::size_t measure) {
    SccDecomposition scc = scc_decompose(q.graph());
    if (!scc.strongly_connected()) {
      record(depth, RecursionCase::kSccSplit, q, k);
      const auto c = scc.members(0);
      InducedStructure inside = induce(q, c);
      InducedStructure outside = remove(q, c);
      auto x1 = solve(inside.instance, k - 1, depth + 1, measure);
      if (!x1) return std::nullopt;
      auto x2 = solve(outside.instance, k - 1, depth + 1, measure);
      if (!x2) return std::nullopt;
      VertexList w = lift(inside, *x1);
      VertexList w2 = lift(outside, *x2);
      w.insert(w.end(), w2.begin(), w2.end());
      return finish(q, k, w, static_cast<int>(x1->size() + x2->size()));
    }

    const CyclePair pair = find_cycle_pair(q);
    CruxOutcome out = crux(q, pair.u, pair.v, k);
    VertexList s = out.set;
    PropertyCheck check{out.property, out.bad_components};
    if (out.no_separator) {
      s = normalized({pair.u, pair.v});
      check = evaluate_properties(q, s);
    }

    switch (check.property) {
      case CruxProperty::kDeletionSet: {
        record(depth, RecursionCase::kCase1, q, k);
        return finish(q, k, s, 0);
      }
      case CruxProperty::kTwoBadComponents: {
        record(depth, RecursionCase::kCase2, q, k);
        const VertexList& c = check.bad_components.front();
        VertexList gone = s;
        gone.insert(gone.end(), c.begin(), c.end());
        InducedStructure inside = induce(q, c);
        InducedStructure outside = remove(q, gone);
        auto x1 = solve(inside.instance, k - 1, depth + 1, measure);
        if (!x1) return std::nullopt;
        auto x2 = solve(outside.instance, k - 1, depth + 1, measure);
        if (!x2) return std::nullopt;
        VertexList w = lift(inside, *x1);
        VertexList w2 = lift(outside, *x2);
        w.insert(w.end(), w2.begin(), w2.end());
        w.insert(w.end(), s.begin(), s.end());
        return finish(q, k, w, static_cast<int>(x1->size() + x2->size()));
      }
      case CruxProperty::kBalancedSplit: {
        record(depth, RecursionCase::kCase3, q, k);
        InducedStructure small = induce(q, check.bad_components.front());
        auto x = solve(small.instance, k, depth + 1, measure);
        if (!x) return std::nullopt;
        VertexList w = lift(small, *x);
        w.insert(w.end(), s.begin(), s.end());
        return finish(q, k, w, static_cast<int>(x->size()));
      }
      case CruxProperty::kBudgetDrop: {
        record(depth, RecursionCase::kCase4, q, k);
        InducedStructure rest = remove(q, s);
        auto x = solve(rest.instance, k - 1, depth + 1, measure);
        if (!x) return std::nullopt;
        VertexList w = lift(rest, *x);
        w.insert(w.end(), s.begin(), s.end());
        return finish(q, k, w, static_cast<int>(x->size()));
      }
    }
    throw std::logic_error("solver: unknown crux property");
  }

  SolveOptions options_;
};

}  // namespace

std::optional<Solution> solve_dfvs(const Digraph& d, int k, const SolveOptions& options) {
  if (k < 0) throw std::invalid_argument("solve_dfvs: budget must be non-negative");
  VertexList forced;
  for (std::size_t v = 0; v < d.num_vertices(); ++v) {
    if (d.has_self_loop(static_cast<Vertex>(v))) forced.push_back(static_cast<Vertex>(v));
  }
  if (static_cast<int>(forced.size()) > k) return std::nullopt;
  // Work on a depth-first renumbering; every pass below is cache-bound.
  const InducedGraph local = reorder_for_locality(d);
  VertexList forced_local;
  for (Vertex v : forced) forced_local.push_back(local.from_parent[v]);
  InducedGraph rest = without(local.graph, forced_local);
  Driver driver(options);
  auto x = driver.solve(StructureInstance(std::move(rest.graph)), k - static_cast<int>(forced.size()),
                        0, std::numeric_limits<std::size_t>::max());
  if (!x) return std::nullopt;

  Solution sol;
  sol.kind = Solution::Kind::kVertices;
  sol.vertices = forced;
  for (Vertex v : *x) sol.vertices.push_back(local.to_parent[rest.to_parent[v]]);
  normalize(sol.vertices);
  if (!is_acyclic_without(d, sol.vertices)) {
    throw std::logic_error("solve_dfvs: returned set leaves a cycle");
  }
  sol.opt_size = static_cast<int>(sol.vertices.size());
  sol.trace = std::move(driver.trace);
  return sol;
}

std::optional<Solution> solve_dfvs_min(const Digraph& d, int k_max, const SolveOptions& options) {
  for (int k = 0; k <= k_max; ++k) {
    if (auto s = solve_dfvs(d, k, options)) return s;
  }
  return std::nullopt;
}

DfasReduction reduce_dfas_to_dfvs(const Digraph& d, int k) {
  if (k < 0) throw std::invalid_argument("reduce_dfas_to_dfvs: budget must be non-negative");
  DfasReduction r;
  r.copies = k + 1;
  const auto c = static_cast<Vertex>(r.copies);
  const std::size_t n = d.num_vertices();
  r.first_arc_vertex = n * r.copies;
  r.arcs = d.arcs();
  std::vector<Arc> arcs;
  arcs.reserve(2 * r.copies * r.arcs.size());
  for (std::size_t e = 0; e < r.arcs.size(); ++e) {
    const auto x = static_cast<Vertex>(r.first_arc_vertex + e);
    for (Vertex i = 0; i < c; ++i) {
      arcs.push_back({r.arcs[e].tail * c + i, x});
      arcs.push_back({x, r.arcs[e].head * c + i});
    }
  }
  r.graph = Digraph(r.first_arc_vertex + r.arcs.size(), arcs);
  return r;
}

std::optional<Solution> solve_dfas(const Digraph& d, int k, const SolveOptions& options) {
  if (k < 0) throw std::invalid_argument("solve_dfas: budget must be non-negative");
  // Only arcs inside a strong component can lie on a cycle.
  SccDecomposition scc = scc_decompose(d);
  std::vector<Arc> core;
  std::vector<std::size_t> core_id;
  for (std::size_t e = 0; e < d.num_arcs(); ++e) {
    const Arc a = d.arc(e);
    if (scc.component[a.tail] == scc.component[a.head]) {
      core.push_back(a);
      core_id.push_back(e);
    }
  }
  Solution sol;
  sol.kind = Solution::Kind::kArcs;
  if (core.empty()) return sol;
  if (k == 0) return std::nullopt;

  // Compact the vertices touched by core arcs.
  std::vector<Vertex> local(d.num_vertices(), kNoVertex);
  Vertex count = 0;
  for (Arc& a : core) {
    for (Vertex* end : {&a.tail, &a.head}) {
      if (local[*end] == kNoVertex) local[*end] = count++;
      *end = local[*end];
    }
  }
  const Digraph small(static_cast<std::size_t>(count), core);
  DfasReduction red = reduce_dfas_to_dfvs(small, k);
  sol.reduced_size = red.graph.size();
  auto x = solve_dfvs(red.graph, k, options);
  if (!x) return std::nullopt;

  // Back-map: small's arc ids follow the sorted order of `core` after compaction.
  std::vector<Arc> original_of_small(small.num_arcs());
  {
    std::vector<Arc> remapped = core;
    for (std::size_t i = 0; i < core.size(); ++i) {
      const std::size_t e = core_id[i];
      const std::size_t sid = [&] {
        auto nb = small.out(remapped[i].tail);
        return small.first_out_arc(remapped[i].tail) +
               static_cast<std::size_t>(std::lower_bound(nb.begin(), nb.end(),
                                                         remapped[i].head) - nb.begin());
      }();
      original_of_small[sid] = d.arc(e);
    }
  }
  for (Vertex v : x->vertices) {
    if (static_cast<std::size_t>(v) < red.first_arc_vertex) {
      throw std::logic_error("solve_dfas: minimum solution contains a vertex copy");
    }
    sol.arcs.push_back(original_of_small[v - red.first_arc_vertex]);
  }
  std::sort(sol.arcs.begin(), sol.arcs.end());
  sol.opt_size = static_cast<int>(sol.arcs.size());
  sol.trace = std::move(x->trace);

  // Self-check: removing the arcs leaves no cycle.
  std::vector<Arc> kept;
  for (const Arc& a : d.arcs()) {
    if (!std::binary_search(sol.arcs.begin(), sol.arcs.end(), a)) kept.push_back(a);
  }
  if (!is_acyclic(Digraph(d.num_vertices(), kept))) {
    throw std::logic_error("solve_dfas: returned arc set leaves a cycle");
  }
  return sol;
}

}  // namespace dfvs
