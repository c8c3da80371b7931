#include "dfvs/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dfvs {

namespace {

// Calls f(subset) for every size-r subset of `pool` in lexicographic order
// of positions; stops early when f returns true.
template <class T, class F>
bool for_each_subset(const std::vector<T>& pool, int r, F&& f) {
  const int n = static_cast<int>(pool.size());
  if (r < 0 || r > n) return false;
  std::vector<int> pick(r);
  std::iota(pick.begin(), pick.end(), 0);
  std::vector<T> subset(r);
  while (true) {
    for (int i = 0; i < r; ++i) subset[i] = pool[pick[i]];
    if (f(subset)) return true;
    int i = r - 1;
    while (i >= 0 && pick[i] == n - r + i) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
}

bool acyclic_without_arcs(const Digraph& d, const std::vector<char>& arc_gone) {
  const std::size_t n = d.num_vertices();
  std::vector<int> indeg(n, 0);
  for (std::size_t e = 0; e < d.num_arcs(); ++e) {
    if (!arc_gone[e]) ++indeg[d.arc(e).head];
  }
  VertexList ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (indeg[v] == 0) ready.push_back(static_cast<Vertex>(v));
  }
  std::size_t done = 0;
  while (!ready.empty()) {
    Vertex v = ready.back();
    ready.pop_back();
    ++done;
    const std::uint32_t first = d.first_out_arc(v);
    auto heads = d.out(v);
    for (std::size_t i = 0; i < heads.size(); ++i) {
      if (arc_gone[first + i]) continue;
      if (--indeg[heads[i]] == 0) ready.push_back(heads[i]);
    }
  }
  return done == n;
}

VertexList inner_vertices(const Digraph& d, Vertex s, Vertex t) {
  VertexList pool;
  for (std::size_t v = 0; v < d.num_vertices(); ++v) {
    if (static_cast<Vertex>(v) != s && static_cast<Vertex>(v) != t) {
      pool.push_back(static_cast<Vertex>(v));
    }
  }
  return pool;
}

}  // namespace

std::optional<VertexList> brute_force_dfvs(const Digraph& d, int k) {
  VertexList all(d.num_vertices());
  std::iota(all.begin(), all.end(), 0);
  std::optional<VertexList> found;
  for (int r = 0; r <= std::min<int>(k, static_cast<int>(all.size())) && !found; ++r) {
    for_each_subset(all, r, [&](const VertexList& x) {
      if (!is_acyclic_without(d, x)) return false;
      found = x;
      return true;
    });
  }
  return found;
}

std::optional<std::vector<Arc>> brute_force_dfas(const Digraph& d, int k) {
  std::vector<std::size_t> ids(d.num_arcs());
  std::iota(ids.begin(), ids.end(), 0);
  std::optional<std::vector<Arc>> found;
  std::vector<char> gone(d.num_arcs(), 0);
  for (int r = 0; r <= std::min<int>(k, static_cast<int>(ids.size())) && !found; ++r) {
    for_each_subset(ids, r, [&](const std::vector<std::size_t>& x) {
      for (std::size_t e : x) gone[e] = 1;
      const bool ok = acyclic_without_arcs(d, gone);
      for (std::size_t e : x) gone[e] = 0;
      if (!ok) return false;
      std::vector<Arc> arcs;
      for (std::size_t e : x) arcs.push_back(d.arc(e));
      found = std::move(arcs);
      return true;
    });
  }
  return found;
}

bool is_separator(const Digraph& d, Vertex s, Vertex t, const VertexList& sep) {
  std::vector<char> blocked(d.num_vertices(), 0);
  for (Vertex v : sep) {
    if (v == s || v == t) throw std::invalid_argument("is_separator: set contains a terminal");
    blocked.at(v) = 1;
  }
  return !reachable_from(d, std::span<const Vertex>(&s, 1), blocked)[t];
}

MinSeparators enumerate_min_separators(const Digraph& d, Vertex s, Vertex t) {
  MinSeparators out;
  if (d.has_arc(s, t)) return out;
  const VertexList pool = inner_vertices(d, s, t);
  for (int r = 0; r <= static_cast<int>(pool.size()); ++r) {
    for_each_subset(pool, r, [&](const VertexList& x) {
      if (is_separator(d, s, t, x)) out.separators.push_back(x);
      return false;
    });
    if (!out.separators.empty()) {
      out.lambda = r;
      break;
    }
  }
  return out;
}

std::vector<VertexList> enumerate_minimal_separators(const Digraph& d, Vertex s, Vertex t) {
  std::vector<VertexList> out;
  if (d.has_arc(s, t)) return out;
  const VertexList pool = inner_vertices(d, s, t);
  for (int r = 0; r <= static_cast<int>(pool.size()); ++r) {
    for_each_subset(pool, r, [&](const VertexList& x) {
      if (!is_separator(d, s, t, x)) return false;
      // Separation is monotone, so single removals decide minimality.
      for (std::size_t i = 0; i < x.size(); ++i) {
        VertexList smaller = x;
        smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
        if (is_separator(d, s, t, smaller)) return false;
      }
      out.push_back(x);
      return false;
    });
  }
  return out;
}

DeletionOracle dfvs_oracle() {
  return [](const StructureInstance& q, int cap) -> std::optional<int> {
    if (cap < 0) return std::nullopt;
    auto x = brute_force_dfvs(q.graph(), cap);
    if (!x) return std::nullopt;
    return static_cast<int>(x->size());
  };
}

bool verify_outcome(const StructureInstance& q, Vertex u, Vertex v, const CruxOutcome& out, int p,
                    const DeletionOracle& oracle, const StructureFamily& family) {
  const Digraph& d = q.graph();
  if (out.no_separator) {
    VertexList pool = inner_vertices(d, u, v);
    for (int r = 0; r <= std::min<int>(p, static_cast<int>(pool.size())); ++r) {
      if (for_each_subset(pool, r, [&](const VertexList& x) { return is_separator(d, u, v, x); })) {
        return false;
      }
    }
    return true;
  }
  const VertexList& s = out.set;
  if (static_cast<int>(s.size()) > 2 * p + 2) return false;
  if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end()) {
    return false;
  }
  for (Vertex w : s) {
    if (w < 0 || static_cast<std::size_t>(w) >= d.num_vertices()) return false;
  }
  PropertyCheck check = evaluate_properties(q, s, family);
  if (check.property != out.property) return false;
  auto sorted_components = [](std::vector<VertexList> c) {
    std::sort(c.begin(), c.end());
    return c;
  };
  if (sorted_components(check.bad_components) != sorted_components(out.bad_components)) {
    return false;
  }
  if (out.property == CruxProperty::kBudgetDrop) {
    if (oracle(q, p).has_value() && !oracle(remove(q, s).instance, p - 1).has_value()) {
      return false;
    }
  }
  return true;
}

}  // namespace dfvs
