#include "dfvs/compression.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <stdexcept>

#include "vertex_cut.hpp"

namespace dfvs {

namespace {

using detail::VertexCutNetwork;
using Role = VertexCutNetwork::Role;

void check_ids(const Digraph& d, const VertexList& set, const char* what) {
  const auto n = static_cast<Vertex>(d.num_vertices());
  for (Vertex v : set) {
    if (v < 0 || v >= n) throw std::out_of_range(std::string(what) + ": vertex id out of range");
  }
}

// Enumerates important separators by the push-or-delete branching. The
// `removed` mask is shared with the caller: while `visit` runs, the vertices
// of the separator being reported are marked in it.
class ImportantSeparatorSearch {
 public:
  ImportantSeparatorSearch(const Digraph& g, std::vector<char>& removed,
                           const std::vector<char>& undeletable)
      : g_(g), net_(g), removed_(removed), undeletable_(undeletable) {}

  bool run(const VertexList& sources, const VertexList& sinks, int budget,
           const std::function<bool(const VertexList&)>& visit) {
    const std::size_t n = g_.num_vertices();
    is_sink_.assign(n, 0);
    for (Vertex t : sinks) is_sink_[t] = 1;
    for (Vertex s : sources) {
      if (is_sink_[s]) return false;
    }
    prefix_.clear();
    return branch(sources, budget, visit);
  }

 private:
  bool branch(const VertexList& sources, int budget,
              const std::function<bool(const VertexList&)>& visit) {
    const auto n = static_cast<Vertex>(g_.num_vertices());
    std::vector<char> is_source(n, 0);
    for (Vertex s : sources) is_source[s] = 1;
    for (Vertex v = 0; v < n; ++v) {
      Role r = Role::kFree;
      if (removed_[v]) {
        r = Role::kBlocked;
      } else if (is_source[v]) {
        r = Role::kSource;
      } else if (is_sink_[v]) {
        r = Role::kSink;
      } else if (undeletable_[v]) {
        r = Role::kFixed;
      }
      net_.set_role(v, r);
    }
    net_.clear_flow();
    const int lambda = net_.augment(budget + 1);
    if (lambda > budget) return false;
    if (lambda == 0) return visit(prefix_);

    // Furthest minimum cut: split nodes that can no longer reach a sink.
    const auto to_sink = net_.reach_to_sinks();
    std::vector<char> cut(n, 0);
    Vertex pick = kNoVertex;
    for (Vertex v = 0; v < n; ++v) {
      if (net_.role(v) == Role::kFree && !to_sink[2 * v] && to_sink[2 * v + 1]) {
        cut[v] = 1;
        if (pick == kNoVertex) pick = v;
      }
    }
    if (pick == kNoVertex) throw std::logic_error("important separators: empty minimum cut");
    std::vector<char> stop(n, 0);
    for (Vertex v = 0; v < n; ++v) stop[v] = removed_[v] || cut[v];
    const auto reach = reachable_from(g_, sources, stop);
    VertexList far;
    for (Vertex v = 0; v < n; ++v) {
      if (reach[v]) far.push_back(v);
    }

    if (budget >= 1) {
      removed_[pick] = 1;
      prefix_.push_back(pick);
      const bool done = branch(far, budget - 1, visit);
      prefix_.pop_back();
      removed_[pick] = 0;
      if (done) return true;
    }
    for (Vertex w : g_.out(pick)) {
      if (is_sink_[w]) return false;
    }
    far.push_back(pick);
    return branch(far, budget, visit);
  }

  const Digraph& g_;
  VertexCutNetwork net_;
  std::vector<char>& removed_;
  const std::vector<char>& undeletable_;
  std::vector<char> is_sink_;
  VertexList prefix_;
};

// Searches for a skew separator of size <= budget for pairs[0..count).
class SkewSearch {
 public:
  SkewSearch(const Digraph& g, const std::vector<std::pair<VertexList, VertexList>>& pairs,
             std::vector<char>& removed)
      : g_(g), pairs_(pairs), removed_(removed), undeletable_(g.num_vertices(), 0) {
    for (const auto& [xs, ys] : pairs_) {
      for (Vertex v : xs) undeletable_[v] = 1;
      for (Vertex v : ys) undeletable_[v] = 1;
    }
  }

  std::optional<VertexList> solve(int budget) {
    chosen_.clear();
    if (feasible(pairs_.size(), budget)) return normalized(chosen_);
    return std::nullopt;
  }

 private:
  bool feasible(std::size_t count, int budget) {
    if (count == 0) return true;
    VertexList sinks;
    for (std::size_t j = 0; j < count; ++j) {
      sinks.insert(sinks.end(), pairs_[j].second.begin(), pairs_[j].second.end());
    }
    // One search object per depth: each owns a flow network sized to the graph.
    if (searches_.size() < count) searches_.resize(count);
    if (!searches_[count - 1]) {
      searches_[count - 1] =
          std::make_unique<ImportantSeparatorSearch>(g_, removed_, undeletable_);
    }
    return searches_[count - 1]->run(pairs_[count - 1].first, sinks, budget, [&](const VertexList& sep) {
      const std::size_t mark = chosen_.size();
      chosen_.insert(chosen_.end(), sep.begin(), sep.end());
      if (feasible(count - 1, budget - static_cast<int>(sep.size()))) return true;
      chosen_.resize(mark);
      return false;
    });
  }

  const Digraph& g_;
  const std::vector<std::pair<VertexList, VertexList>>& pairs_;
  std::vector<char>& removed_;
  std::vector<char> undeletable_;
  VertexList chosen_;
  std::vector<std::unique_ptr<ImportantSeparatorSearch>> searches_;
};

bool subgraph_acyclic(const Digraph& d, const VertexList& keep) {
  return is_acyclic(induced(d, keep).graph);
}

// Any dfvs of size <= budget that avoids `w` and the already `removed`
// vertices, with D - removed - w acyclic and D[w] acyclic. Returns the set of
// newly deleted vertices.
std::optional<VertexList> disjoint_within(const Digraph& d, const std::vector<char>& removed_in,
                                          const VertexList& w, int budget) {
  const auto n = static_cast<Vertex>(d.num_vertices());
  std::vector<int> w_index(n, -1);
  for (std::size_t i = 0; i < w.size(); ++i) w_index[w[i]] = static_cast<int>(i);

  // Forced: self-loops, and 2-cycles through a vertex of w.
  std::vector<char> removed = removed_in;
  VertexList forced;
  for (Vertex x = 0; x < n; ++x) {
    if (removed[x] || w_index[x] >= 0) continue;
    bool force = d.has_self_loop(x);
    for (Vertex y : d.out(x)) {
      if (force) break;
      force = w_index[y] >= 0 && !removed[y] && d.has_arc(y, x);
    }
    if (force) forced.push_back(x);
  }
  if (static_cast<int>(forced.size()) > budget) return std::nullopt;
  for (Vertex x : forced) removed[x] = 1;
  const int rest = budget - static_cast<int>(forced.size());
  {
    VertexList gone;
    for (Vertex x = 0; x < n; ++x) {
      if (removed[x]) gone.push_back(x);
    }
    if (is_acyclic_without(d, gone)) return forced;
  }
  if (rest == 0 || w.empty()) return std::nullopt;

  // Split each w into an in-copy (its own id) and an out-copy (n + index).
  const auto t = static_cast<Vertex>(w.size());
  std::vector<Arc> arcs;
  arcs.reserve(d.num_arcs());
  for (Vertex a = 0; a < n; ++a) {
    if (removed[a]) continue;
    const Vertex tail = w_index[a] >= 0 ? n + w_index[a] : a;
    for (Vertex b : d.out(a)) {
      if (!removed[b]) arcs.push_back({tail, b});
    }
  }
  const Digraph h(static_cast<std::size_t>(n + t), arcs);
  std::vector<char> h_removed(n + t, 0);
  std::copy(removed.begin(), removed.end(), h_removed.begin());

  // before[i][j]: the out-copy of w_i cannot be cut from the in-copy of w_j
  // within budget, so w_i must come strictly before w_j in the ordering.
  std::vector<std::vector<char>> before(t, std::vector<char>(t, 0));
  {
    std::vector<char> terminal(n + t, 0);
    for (Vertex i = 0; i < t; ++i) terminal[w[i]] = terminal[n + i] = 1;
    VertexCutNetwork net(h);
    for (Vertex i = 0; i < t; ++i) {
      for (Vertex j = 0; j < t; ++j) {
        for (Vertex v = 0; v < n + t; ++v) {
          net.set_role(v, h_removed[v] ? Role::kBlocked
                          : terminal[v] ? Role::kFixed
                                        : Role::kFree);
        }
        net.set_role(n + i, Role::kSource);
        net.set_role(w[j], Role::kSink);
        net.clear_flow();
        if (net.augment(rest + 1) > rest) {
          if (i == j) return std::nullopt;
          before[i][j] = 1;
        }
      }
    }
  }

  // Orderings consistent with `before`, generated depth first.
  std::vector<Vertex> order;
  std::vector<char> placed(t, 0);
  std::optional<VertexList> answer;
  std::function<bool()> extend = [&]() -> bool {
    if (static_cast<Vertex>(order.size()) == t) {
      std::vector<std::pair<VertexList, VertexList>> pairs;
      for (Vertex i : order) pairs.push_back({{n + i}, {w[i]}});
      std::vector<char> mask = h_removed;
      SkewSearch search(h, pairs, mask);
      if (auto sep = search.solve(rest)) {
        VertexList out = forced;
        out.insert(out.end(), sep->begin(), sep->end());
        answer = std::move(out);
        return true;
      }
      return false;
    }
    for (Vertex i = 0; i < t; ++i) {
      if (placed[i]) continue;
      bool ready = true;
      for (Vertex j = 0; j < t && ready; ++j) ready = placed[j] || !before[j][i];
      if (!ready) continue;
      placed[i] = 1;
      order.push_back(i);
      const bool done = extend();
      order.pop_back();
      placed[i] = 0;
      if (done) return true;
    }
    return false;
  };
  extend();
  return answer;
}

void require_dfvs(const Digraph& d, const VertexList& w, const char* what) {
  if (!is_acyclic_without(d, w)) {
    throw std::invalid_argument(std::string(what) + ": the given set is not a feedback vertex set");
  }
}

void self_check(const Digraph& d, const VertexList& x, const char* what) {
  if (!is_acyclic_without(d, x)) {
    throw std::logic_error(std::string(what) + ": result leaves a cycle");
  }
}

}  // namespace

bool for_each_important_separator(const Digraph& graph, const VertexList& sources,
                                  const VertexList& sinks, const std::vector<char>& undeletable,
                                  int budget,
                                  const std::function<bool(const VertexList&)>& visit) {
  check_ids(graph, sources, "important separators");
  check_ids(graph, sinks, "important separators");
  if (undeletable.size() != graph.num_vertices()) {
    throw std::invalid_argument("important separators: undeletable mask has wrong length");
  }
  std::vector<char> removed(graph.num_vertices(), 0);
  ImportantSeparatorSearch search(graph, removed, undeletable);
  return search.run(sources, sinks, budget, [&](const VertexList& sep) {
    return visit(normalized(sep));
  });
}

std::optional<VertexList> skew_separator(const SkewCutInstance& inst) {
  for (const auto& [xs, ys] : inst.pairs) {
    check_ids(inst.graph, xs, "skew_separator");
    check_ids(inst.graph, ys, "skew_separator");
  }
  std::vector<char> removed(inst.graph.num_vertices(), 0);
  for (int b = 0; b <= inst.budget; ++b) {
    SkewSearch search(inst.graph, inst.pairs, removed);
    if (auto sep = search.solve(b)) return sep;
  }
  return std::nullopt;
}

std::optional<VertexList> disjoint_dfvs(const Digraph& d, int k, const VertexList& w_in) {
  if (k < 0) throw std::invalid_argument("disjoint_dfvs: budget must be non-negative");
  check_ids(d, w_in, "disjoint_dfvs");
  const VertexList w = normalized(w_in);
  require_dfvs(d, w, "disjoint_dfvs");
  if (!subgraph_acyclic(d, w)) return std::nullopt;
  const std::vector<char> none(d.num_vertices(), 0);
  for (int b = 0; b <= k; ++b) {
    if (auto x = disjoint_within(d, none, w, b)) {
      VertexList out = normalized(std::move(*x));
      self_check(d, out, "disjoint_dfvs");
      return out;
    }
  }
  return std::nullopt;
}

std::optional<VertexList> compress(const Digraph& d, int k, const VertexList& w_in,
                                   int lower_bound) {
  if (k < 0) throw std::invalid_argument("compress: budget must be non-negative");
  check_ids(d, w_in, "compress");
  const VertexList w = normalized(w_in);
  if (static_cast<int>(w.size()) > k + 1) {
    throw std::invalid_argument("compress: the given set has more than k + 1 vertices");
  }
  require_dfvs(d, w, "compress");
  if (is_acyclic(d)) return VertexList{};

  const auto t = static_cast<int>(w.size());
  const InducedGraph on_w = induced(d, w);
  std::vector<char> removed(d.num_vertices(), 0);

  for (int b = std::max(lower_bound, 1); b <= k; ++b) {
    // Larger guesses for the part of the solution inside w come first.
    for (int g = std::min(b, t); g >= 0; --g) {
      std::vector<int> pick(g);
      std::iota(pick.begin(), pick.end(), 0);
      while (true) {
        std::vector<char> in_g(t, 0);
        for (int i : pick) in_g[i] = 1;
        VertexList guess, keep_local, rest;
        for (int i = 0; i < t; ++i) {
          if (in_g[i]) {
            guess.push_back(w[i]);
          } else {
            keep_local.push_back(i);
            rest.push_back(w[i]);
          }
        }
        if (is_acyclic(induced(on_w.graph, keep_local).graph)) {
          for (Vertex x : guess) removed[x] = 1;
          auto found = disjoint_within(d, removed, rest, b - g);
          for (Vertex x : guess) removed[x] = 0;
          if (found) {
            VertexList out = guess;
            out.insert(out.end(), found->begin(), found->end());
            normalize(out);
            self_check(d, out, "compress");
            return out;
          }
        }
        // Next g-combination of [0, t) in lexicographic order.
        int i = g - 1;
        while (i >= 0 && pick[i] == t - g + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < g; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  }
  return std::nullopt;
}

std::optional<VertexList> smart_compress(const Digraph& d, int k, const VertexList& w_in,
                                         int lower_bound) {
  if (k < 0) throw std::invalid_argument("smart_compress: budget must be non-negative");
  check_ids(d, w_in, "smart_compress");
  // Keep the caller's order, dropping repeats.
  VertexList w;
  {
    std::vector<char> seen(d.num_vertices(), 0);
    for (Vertex v : w_in) {
      if (!seen[v]) w.push_back(v);
      seen[v] = 1;
    }
  }
  require_dfvs(d, w, "smart_compress");
  const auto t = static_cast<int>(w.size());
  if (t <= k + 1) return compress(d, k, w, lower_bound);

  std::vector<char> in_w(d.num_vertices(), 0);
  for (Vertex v : w) in_w[v] = 1;
  VertexList base;
  for (std::size_t v = 0; v < d.num_vertices(); ++v) {
    if (!in_w[v]) base.push_back(static_cast<Vertex>(v));
  }

  VertexList x;  // current solution in d's ids
  for (int i = k + 1; i <= t; ++i) {
    VertexList keep = base;
    keep.insert(keep.end(), w.begin(), w.begin() + i);
    InducedGraph di = induced(d, keep);
    VertexList wi;
    if (i == k + 1) {
      for (int j = 0; j < i; ++j) wi.push_back(di.from_parent[w[j]]);
    } else {
      for (Vertex v : x) wi.push_back(di.from_parent[v]);
      wi.push_back(di.from_parent[w[i - 1]]);
    }
    int lb = i == k + 1 ? 0 : static_cast<int>(x.size());
    if (i == t) lb = std::max(lb, lower_bound);
    auto xi = compress(di.graph, k, wi, lb);
    if (!xi) return std::nullopt;
    x.clear();
    for (Vertex v : *xi) x.push_back(di.to_parent[v]);
  }
  normalize(x);
  self_check(d, x, "smart_compress");
  return x;
}

}  // namespace dfvs
