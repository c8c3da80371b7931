#include "dfvs/scc.hpp"

#include <algorithm>
#include <stdexcept>

namespace dfvs {

SccDecomposition scc_decompose(const Digraph& d) {
  const auto n = static_cast<Vertex>(d.num_vertices());
  SccDecomposition out;
  out.component.assign(n, -1);

  // Iterative Tarjan; components come out sinks first, each one the top
  // segment of the vertex stack.
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<char> on_stack(n, 0);
  VertexList stack;
  struct Frame {
    Vertex v;
    std::uint32_t next;
  };
  std::vector<Frame> call;
  int counter = 0;
  VertexList found;                 // components in discovery order
  std::vector<std::uint32_t> ends;  // end of each component in `found`
  found.reserve(n);

  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      auto nb = d.out(f.v);
      if (f.next < nb.size()) {
        Vertex w = nb[f.next++];
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      Vertex v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        auto top = stack.end();
        auto bottom = top;
        do {
          --bottom;
          on_stack[*bottom] = 0;
        } while (*bottom != v);
        const auto first = found.size();
        found.insert(found.end(), bottom, top);
        if (top - bottom > 1) std::sort(found.begin() + static_cast<std::ptrdiff_t>(first), found.end());
        stack.erase(bottom, top);
        ends.push_back(static_cast<std::uint32_t>(found.size()));
      }
    }
  }

  const std::size_t count = ends.size();
  out.vertices.reserve(n);
  out.offsets.reserve(count + 1);
  out.offsets.push_back(0);
  out.trivial.resize(count);
  for (std::size_t r = count; r-- > 0;) {
    const std::uint32_t lo = r == 0 ? 0 : ends[r - 1], hi = ends[r];
    const auto c = static_cast<int>(count - 1 - r);
    for (std::uint32_t i = lo; i < hi; ++i) {
      out.component[found[i]] = c;
      out.vertices.push_back(found[i]);
    }
    out.offsets.push_back(static_cast<std::uint32_t>(out.vertices.size()));
    out.trivial[c] = hi - lo == 1 && !d.has_self_loop(found[lo]);
  }
  return out;
}

CyclePair find_cycle_pair(const StructureInstance& q) {
  const Digraph& d = q.graph();
  SccDecomposition scc = scc_decompose(d);
  int target = -1;
  for (std::size_t c = 0; c < scc.count(); ++c) {
    if (scc.members(c).size() >= 2) {
      target = static_cast<int>(c);
      break;
    }
  }
  if (target < 0) {
    throw std::invalid_argument("find_cycle_pair: no cycle through two distinct vertices");
  }
  const Vertex root = scc.members(target).front();
  const auto n = static_cast<Vertex>(d.num_vertices());
  // 0 = unvisited, 1 = on the DFS path, 2 = finished
  std::vector<char> state(n, 0);
  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<Frame> call{{root, 0}};
  state[root] = 1;
  while (!call.empty()) {
    Frame& f = call.back();
    auto nb = d.out(f.v);
    if (f.next == nb.size()) {
      state[f.v] = 2;
      call.pop_back();
      continue;
    }
    Vertex w = nb[f.next++];
    if (scc.component[w] != target || w == f.v) continue;
    if (state[w] == 1) return {w, f.v};
    if (state[w] == 0) {
      state[w] = 1;
      call.push_back({w, 0});
    }
  }
  throw std::logic_error("find_cycle_pair: strongly connected component without a back arc");
}

InducedStructure strip_trivial_components(const StructureInstance& q,
                                          const StructureFamily& family) {
  const Digraph& d = q.graph();
  SccDecomposition scc = scc_decompose(d);
  // Arc-free pieces are in every rigid family, so only non-trivial components
  // need the recognizer.
  std::vector<int> part(d.num_vertices(), -1);
  std::vector<int> comp_of_part;
  for (std::size_t c = 0; c < scc.count(); ++c) {
    if (scc.trivial[c]) continue;
    for (Vertex v : scc.members(c)) part[v] = static_cast<int>(comp_of_part.size());
    comp_of_part.push_back(static_cast<int>(c));
  }
  VertexList keep;
  if (!comp_of_part.empty()) {
    auto pieces = induce_parts(q, part, static_cast<int>(comp_of_part.size()));
    for (const InducedStructure& piece : pieces) {
      if (!family.recognize(piece.instance)) {
        keep.insert(keep.end(), piece.to_parent.begin(), piece.to_parent.end());
      }
    }
  }
  return induce(q, keep);
}

}  // namespace dfvs
