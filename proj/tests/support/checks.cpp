#include "checks.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dfvs/oracle.hpp"

namespace dfvs::testing {

namespace {

// Calls f on every subset of `pool` with at most r elements; stops at the first true.
template <class F>
bool any_subset_upto(const VertexList& pool, int r, F&& f) {
  const int n = static_cast<int>(pool.size());
  r = std::min(r, n);
  for (int size = 0; size <= r; ++size) {
    std::vector<int> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    VertexList subset(size);
    while (true) {
      for (int i = 0; i < size; ++i) subset[i] = pool[pick[i]];
      if (f(subset)) return true;
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return false;
}

bool contains(const VertexList& sorted, Vertex v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

VertexList minus(const VertexList& a, const VertexList& b) {
  VertexList out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool subset_of(const VertexList& a, const VertexList& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string join(const VertexList& xs) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  out << '}';
  return out.str();
}

std::string fail(const std::string& what, const PairInstance& in) {
  std::ostringstream out;
  out << what << " [n=" << in.graph.num_vertices() << " s=" << in.s << " t=" << in.t
      << " k=" << in.k << " arcs=";
  for (const Arc& a : in.graph.arcs()) out << a.tail << '>' << a.head << ' ';
  out << ']';
  return out.str();
}

// Checks the part of the tight-sequence / chain contract shared by both:
// H contains s, avoids t and N-(t), is reachable inside itself, and every
// vertex of N+(H) reaches t outside H.
std::string check_side(const Digraph& d, Vertex s, Vertex t, const VertexList& h) {
  if (!contains(h, s)) return "set misses the source";
  if (contains(h, t)) return "set contains the sink";
  for (Vertex w : d.in(t)) {
    if (contains(h, w)) return "set contains an in-neighbour of the sink";
  }
  if (!reachable_inside(d, s, h)) return "set not reachable from the source inside itself";
  std::vector<char> blocked(d.num_vertices(), 0);
  for (Vertex w : h) blocked[w] = 1;
  for (Vertex w : out_neighbourhood(d, h)) {
    if (!reachable_from(d, std::span<const Vertex>(&w, 1), blocked)[t]) {
      return "boundary vertex " + std::to_string(w) + " cannot reach the sink";
    }
  }
  return {};
}

}  // namespace

Digraph random_strong(std::size_t n, std::size_t extra_arcs, SplitMix64& rng) {
  VertexList perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  std::vector<Arc> arcs;
  if (n >= 2) {
    for (std::size_t i = 0; i < n; ++i) arcs.push_back({perm[i], perm[(i + 1) % n]});
  }
  for (std::size_t e = 0; e < extra_arcs && n >= 2; ++e) {
    const auto a = static_cast<Vertex>(rng.below(n));
    const auto b = static_cast<Vertex>(rng.below(n));
    if (a != b) arcs.push_back({a, b});
  }
  return Digraph(n, arcs);
}

PairInstance sample_pair(SplitMix64& rng, std::size_t n_max, std::size_t m_max, int k_max) {
  PairInstance out;
  const std::size_t n = 2 + rng.below(n_max - 1);
  const std::size_t m = rng.below(std::min(m_max, n * (n - 1)) + 1);
  out.graph = gen_random(n, m, rng);
  out.s = static_cast<Vertex>(rng.below(n));
  out.t = static_cast<Vertex>(rng.below(n - 1));
  if (out.t >= out.s) ++out.t;
  out.k = static_cast<int>(rng.below(static_cast<std::uint64_t>(k_max) + 1));
  return out;
}

PairInstance sample_reachable_pair(SplitMix64& rng, std::size_t n_max, std::size_t m_max,
                                   int k_max) {
  const bool strong = rng.below(2) == 0;
  while (true) {
    PairInstance in = sample_pair(rng, n_max, m_max, k_max);
    if (strong) {
      const std::size_t n = in.graph.num_vertices();
      in.graph = random_strong(n, rng.below(std::min(m_max, n * (n - 1)) + 1), rng);
    }
    in.k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(k_max)));
    if (in.graph.has_arc(in.s, in.t)) continue;
    if (reachable_from(in.graph, std::span<const Vertex>(&in.s, 1))[in.t]) return in;
  }
}

PairInstance sample_crux(SplitMix64& rng, std::size_t n_max, std::size_t m_max, int p_max) {
  PairInstance out;
  const std::size_t n = 2 + rng.below(n_max - 1);
  out.graph = random_strong(n, rng.below(std::min(m_max, n * (n - 1)) + 1), rng);
  const Arc a = out.graph.arc(rng.below(out.graph.num_arcs()));
  out.s = a.head;
  out.t = a.tail;
  out.k = static_cast<int>(rng.below(static_cast<std::uint64_t>(p_max) + 1));
  return out;
}

VertexList out_neighbourhood(const Digraph& d, const VertexList& x) {
  std::vector<char> in_x(d.num_vertices(), 0), seen(d.num_vertices(), 0);
  for (Vertex v : x) in_x[v] = 1;
  VertexList out;
  for (Vertex v : x) {
    for (Vertex w : d.out(v)) {
      if (!in_x[w] && !seen[w]) {
        seen[w] = 1;
        out.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexList closed_out_neighbourhood(const Digraph& d, const VertexList& x) {
  VertexList out = out_neighbourhood(d, x);
  out.insert(out.end(), x.begin(), x.end());
  normalize(out);
  return out;
}

VertexList reach_avoiding(const Digraph& d, Vertex from, const VertexList& avoid) {
  std::vector<char> blocked(d.num_vertices(), 0);
  for (Vertex v : avoid) blocked[v] = 1;
  auto seen = reachable_from(d, std::span<const Vertex>(&from, 1), blocked);
  VertexList out;
  for (std::size_t v = 0; v < d.num_vertices(); ++v) {
    if (seen[v]) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

bool reachable_inside(const Digraph& d, Vertex from, const VertexList& x) {
  std::vector<char> blocked(d.num_vertices(), 1);
  for (Vertex v : x) blocked[v] = 0;
  auto seen = reachable_from(d, std::span<const Vertex>(&from, 1), blocked);
  return std::all_of(x.begin(), x.end(), [&](Vertex v) { return seen[v] != 0; });
}

std::size_t structure_size(const Digraph& d, const VertexList& x) {
  std::vector<char> in_x(d.num_vertices(), 0);
  for (Vertex v : x) in_x[v] = 1;
  std::size_t size = x.size();
  for (Vertex v : x) {
    for (Vertex w : d.out(v)) size += in_x[w];
  }
  return size;
}

std::string check_chain(const PairInstance& in, const Bounded<SeparatorChain>& result) {
  const Digraph& d = in.graph;
  const MinSeparators brute = enumerate_min_separators(d, in.s, in.t);
  if (!brute.lambda) {
    auto* e = std::get_if<ExceedsBudget>(&result);
    return e && e->infinite ? "" : fail("expected ExceedsBudget{infinite}", in);
  }
  if (*brute.lambda > in.k) {
    auto* e = std::get_if<ExceedsBudget>(&result);
    return e && !e->infinite ? "" : fail("expected ExceedsBudget{finite}", in);
  }
  if (exceeds(result)) return fail("unexpected ExceedsBudget", in);
  const SeparatorChain& chain = std::get<SeparatorChain>(result);
  const int ell = *brute.lambda;
  if (chain.lambda != ell) return fail("lambda differs from brute force", in);
  const std::size_t q = chain.length();
  if (q == 0) return fail("empty chain", in);

  VertexList covered;
  VertexList previous;
  for (std::size_t i = 1; i <= q; ++i) {
    const VertexList x = chain.prefix_set(i);
    if (i > 1 && (x.size() <= previous.size() || !subset_of(previous, x))) {
      return fail("property 1: X_" + std::to_string(i) + " does not strictly contain X_" +
                      std::to_string(i - 1),
                  in);
    }
    if (std::string why = check_side(d, in.s, in.t, x); !why.empty()) {
      return fail("property 1/2 on X_" + std::to_string(i) + ": " + why, in);
    }
    const VertexList boundary = out_neighbourhood(d, x);
    if (boundary != chain.boundaries[i - 1]) {
      return fail("stored boundary " + join(chain.boundaries[i - 1]) + " differs from N+(X_" +
                      std::to_string(i) + ") = " + join(boundary),
                  in);
    }
    if (static_cast<int>(boundary.size()) != ell) {
      return fail("property 3: |N+(X_" + std::to_string(i) + ")| != lambda", in);
    }
    covered.insert(covered.end(), boundary.begin(), boundary.end());
    previous = x;
  }
  normalize(covered);
  for (const VertexList& sep : brute.separators) {
    if (!subset_of(sep, covered)) {
      return fail("property 4: minimum separator " + join(sep) + " not covered", in);
    }
  }
  // X_{q+1} = R(s) \ {t}.
  VertexList beyond = chain.beyond;
  std::sort(beyond.begin(), beyond.end());
  VertexList reach = reach_avoiding(d, in.s, {});
  reach.erase(std::remove(reach.begin(), reach.end(), in.t), reach.end());
  if (beyond != minus(reach, previous)) return fail("beyond != R(s) \\ X_q \\ {t}", in);

  // Gap lemma with X_0 = {} and X_{q+1} = V.
  VertexList all(d.num_vertices());
  std::iota(all.begin(), all.end(), 0);
  std::vector<VertexList> gaps;
  gaps.push_back(chain.prefix_set(1));
  for (std::size_t i = 1; i <= q; ++i) {
    const VertexList next = i < q ? chain.prefix_set(i + 1) : all;
    gaps.push_back(minus(next, closed_out_neighbourhood(d, chain.prefix_set(i))));
  }
  for (const VertexList& sep : enumerate_minimal_separators(d, in.s, in.t)) {
    if (static_cast<int>(sep.size()) > ell) continue;
    for (std::size_t i = 0; i < gaps.size(); ++i) {
      for (Vertex w : sep) {
        if (contains(gaps[i], w)) {
          return fail("gap lemma: minimal separator " + join(sep) + " of size <= lambda meets Z_" +
                          std::to_string(i),
                      in);
        }
      }
    }
  }
  return {};
}

std::string check_tight_sequence(const PairInstance& in,
                                 const Bounded<TightSeparatorSequence>& result) {
  const Digraph& d = in.graph;
  const MinSeparators brute = enumerate_min_separators(d, in.s, in.t);
  if (!brute.lambda || *brute.lambda > in.k) {
    auto* e = std::get_if<ExceedsBudget>(&result);
    if (!e) return fail("expected ExceedsBudget", in);
    if (e->infinite != !brute.lambda.has_value()) return fail("wrong ExceedsBudget flag", in);
    return {};
  }
  if (exceeds(result)) return fail("unexpected ExceedsBudget", in);
  const TightSeparatorSequence& seq = std::get<TightSeparatorSequence>(result);
  const std::size_t q = seq.length();
  if (q == 0) return fail("empty sequence although a separator of size <= k exists", in);
  if (seq.source != in.s || seq.sink != in.t || seq.order != in.k) {
    return fail("sequence metadata mismatch", in);
  }

  std::vector<VertexList> h(q + 1);
  for (std::size_t i = 1; i <= q; ++i) {
    h[i] = seq.prefix_set(i);
    if (i > 1 && (h[i].size() <= h[i - 1].size() || !subset_of(h[i - 1], h[i]))) {
      return fail("condition 1 fails at H_" + std::to_string(i), in);
    }
    if (std::string why = check_side(d, in.s, in.t, h[i]); !why.empty()) {
      return fail("condition 2 on H_" + std::to_string(i) + ": " + why, in);
    }
    const VertexList z = out_neighbourhood(d, h[i]);
    if (z != seq.boundary(i)) return fail("stored Z_" + std::to_string(i) + " != N+(H_i)", in);
    if (static_cast<int>(z.size()) > in.k) return fail("condition 3 fails", in);
  }

  auto separates = [&](const VertexList& sep) { return is_separator(d, in.s, in.t, sep); };
  for (std::size_t i = 1; i + 1 <= q; ++i) {
    VertexList gap = minus(h[i + 1], closed_out_neighbourhood(d, h[i]));
    gap.erase(std::remove(gap.begin(), gap.end(), in.s), gap.end());
    if (gap != seq.gap(i)) return fail("gap(" + std::to_string(i) + ") mismatch", in);
    if (any_subset_upto(gap, in.k, separates)) {
      return fail("condition 4: separator inside gap " + std::to_string(i), in);
    }
  }
  VertexList outside;
  const VertexList closed = closed_out_neighbourhood(d, h[q]);
  for (std::size_t v = 0; v < d.num_vertices(); ++v) {
    const auto w = static_cast<Vertex>(v);
    if (w != in.s && w != in.t && !contains(closed, w)) outside.push_back(w);
  }
  if (any_subset_upto(outside, in.k, separates)) {
    return fail("condition 4: separator disjoint from N+[H_q]", in);
  }

  // Label arrays.
  for (std::size_t v = 0; v < d.num_vertices(); ++v) {
    const auto w = static_cast<Vertex>(v);
    int want = static_cast<int>(q) + 1;
    for (std::size_t i = 1; i <= q; ++i) {
      if (contains(h[i], w)) {
        want = static_cast<int>(i);
        break;
      }
    }
    if (seq.label[v] != want) return fail("label of " + std::to_string(v), in);
    int first = 0;
    for (std::size_t i = 1; i <= q && !first; ++i) {
      if (contains(seq.boundary(i), w)) first = static_cast<int>(i);
    }
    if (seq.first_boundary[v] != first) return fail("first_boundary of " + std::to_string(v), in);
  }
  return {};
}

std::string check_monotonicity(const StructureInstance& q, const TightSeparatorSequence& seq,
                               std::size_t* pairs_checked) {
  const Digraph& d = q.graph();
  const std::size_t len = seq.length();
  std::vector<SeparatorClass> cls;
  std::vector<VertexList> reach;
  for (std::size_t i = 1; i <= len; ++i) {
    cls.push_back(classify(q, seq.source, seq.sink, seq.boundary(i)));
    reach.push_back(reach_avoiding(d, seq.source, seq.boundary(i)));
  }
  auto bad = [](Goodness g) { return g == Goodness::kDual || g == Goodness::kComplete; };
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      if (!subset_of(reach[i], reach[j])) {
        return "Z_" + std::to_string(j + 1) + " does not cover Z_" + std::to_string(i + 1);
      }
      if (bad(cls[i].goodness) || bad(cls[j].goodness)) continue;
      if (pairs_checked) ++*pairs_checked;
      const std::string at = " (Z_" + std::to_string(i + 1) + ", Z_" + std::to_string(j + 1) + ")";
      if (cls[i].goodness == Goodness::kRight && cls[j].goodness != Goodness::kRight) {
        return "r-good does not propagate forward" + at;
      }
      if (cls[j].goodness == Goodness::kLeft && cls[i].goodness != Goodness::kLeft) {
        return "l-good does not propagate backward" + at;
      }
      if (cls[i].r_light && !cls[j].r_light) return "r-light does not propagate forward" + at;
      if (cls[j].l_light && !cls[i].l_light) return "l-light does not propagate backward" + at;
    }
  }
  return {};
}

std::optional<std::size_t> naive_llight_transition(const StructureInstance& q,
                                                   const TightSeparatorSequence& seq) {
  auto light = [&](std::size_t i) {
    const VertexList h = seq.prefix_set(i);
    return 2 * induce(q, h).instance.size() <= q.size();
  };
  for (std::size_t i = 1; i < seq.length(); ++i) {
    if (light(i) && !light(i + 1)) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> naive_bad_gap(const StructureInstance& q,
                                         const TightSeparatorSequence& seq) {
  const Digraph& d = q.graph();
  for (std::size_t i = 1; i < seq.length(); ++i) {
    const VertexList gap =
        minus(seq.prefix_set(i + 1), closed_out_neighbourhood(d, seq.prefix_set(i)));
    if (!acyclic_family().recognize(induce(q, gap).instance)) return i;
  }
  return std::nullopt;
}

std::vector<int> brute_force_components(const Digraph& d) {
  const std::size_t n = d.num_vertices();
  std::vector<std::vector<char>> reach(n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto s = static_cast<Vertex>(v);
    reach[v] = reachable_from(d, std::span<const Vertex>(&s, 1));
  }
  std::vector<int> comp(n, -1);
  int next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (comp[v] != -1) continue;
    for (std::size_t w = v; w < n; ++w) {
      if (reach[v][w] && reach[w][v]) comp[w] = next;
    }
    ++next;
  }
  return comp;
}

}  // namespace dfvs::testing
