#include "dfvs/crux.hpp"

#include <algorithm>
#include <stdexcept>

#include "dfvs/scc.hpp"

namespace dfvs {

std::string to_string(Goodness g) {
  switch (g) {
    case Goodness::kLeft: return "l-good";
    case Goodness::kRight: return "r-good";
    case Goodness::kDual: return "dual-good";
    case Goodness::kComplete: return "completely-good";
  }
  return "?";
}

std::string to_string(CruxProperty p) {
  switch (p) {
    case CruxProperty::kDeletionSet: return "P1";
    case CruxProperty::kTwoBadComponents: return "P2";
    case CruxProperty::kBalancedSplit: return "P3";
    case CruxProperty::kBudgetDrop: return "P4";
  }
  return "?";
}

SeparatorClass classify(const StructureInstance& q, Vertex u, Vertex v, const VertexList& sep,
                        const StructureFamily& family) {
  const Digraph& d = q.graph();
  const auto n = static_cast<Vertex>(d.num_vertices());
  if (u < 0 || u >= n || v < 0 || v >= n) throw std::out_of_range("classify: bad terminal");
  std::vector<char> blocked(n, 0);
  for (Vertex w : sep) {
    if (w < 0 || w >= n) throw std::out_of_range("classify: bad separator vertex");
    if (w == u || w == v) throw std::invalid_argument("classify: separator contains a terminal");
    blocked[w] = 1;
  }
  auto left = reachable_from(d, std::span<const Vertex>(&u, 1), blocked);
  if (left[v]) throw std::invalid_argument("classify: set does not separate u from v");
  std::vector<int> part(n, 1);
  for (Vertex w = 0; w < n; ++w) {
    if (blocked[w]) {
      part[w] = -1;
    } else if (left[w]) {
      part[w] = 0;
    }
  }
  auto sides = induce_parts(q, part, 2);
  const bool left_in = family.recognize(sides[0].instance);
  const bool right_in = family.recognize(sides[1].instance);
  SeparatorClass c;
  c.goodness = left_in ? (right_in ? Goodness::kComplete : Goodness::kLeft)
                       : (right_in ? Goodness::kRight : Goodness::kDual);
  c.left_size = family.size(sides[0].instance);
  c.right_size = family.size(sides[1].instance);
  const std::size_t total = family.size(q);
  c.l_light = 2 * c.left_size <= total;
  c.r_light = 2 * c.right_size <= total;
  return c;
}

PropertyCheck evaluate_properties(const StructureInstance& q, const VertexList& s,
                                  const StructureFamily& family) {
  InducedStructure rest = remove(q, s);
  SccDecomposition scc = scc_decompose(rest.instance.graph());
  std::vector<int> part(rest.instance.num_vertices(), -1);
  int parts = 0;
  for (std::size_t c = 0; c < scc.count(); ++c) {
    if (scc.trivial[c]) continue;
    for (Vertex w : scc.members(c)) part[w] = parts;
    ++parts;
  }
  PropertyCheck check;
  std::size_t bad_size = 0;
  if (parts > 0) {
    auto pieces = induce_parts(rest.instance, part, parts);
    for (const InducedStructure& piece : pieces) {
      if (family.recognize(piece.instance)) continue;
      VertexList comp;
      comp.reserve(piece.to_parent.size());
      for (Vertex w : piece.to_parent) comp.push_back(rest.to_parent[w]);
      std::sort(comp.begin(), comp.end());
      check.bad_components.push_back(std::move(comp));
      bad_size = family.size(piece.instance);
    }
  }
  if (check.bad_components.empty()) {
    check.property = CruxProperty::kDeletionSet;
  } else if (check.bad_components.size() >= 2) {
    check.property = CruxProperty::kTwoBadComponents;
  } else if (2 * bad_size <= family.size(q)) {
    check.property = CruxProperty::kBalancedSplit;
  } else {
    check.property = CruxProperty::kBudgetDrop;
  }
  return check;
}

namespace {

VertexList set_union(std::initializer_list<const VertexList*> parts,
                     std::initializer_list<Vertex> extra = {}) {
  VertexList out(extra);
  for (const VertexList* p : parts) out.insert(out.end(), p->begin(), p->end());
  return normalized(std::move(out));
}

class Cascade {
 public:
  Cascade(const StructureInstance& q, Vertex u, Vertex v, const StructureFamily& family)
      : q_(q), u_(u), v_(v), family_(family) {}

  SeparatorClass look(const VertexList& z, const std::string& name) {
    SeparatorClass c = classify(q_, u_, v_, z, family_);
    out.path.push_back(name + " " + to_string(c.goodness) + (c.l_light ? " l-light" : "") +
                       (c.r_light ? " r-light" : ""));
    return c;
  }

  // Tags S with its earliest literal property. `intended` is what the
  // cascade argued for; anything later than that is an internal error.
  CruxOutcome settle(VertexList s, CruxProperty intended, const std::string& why) {
    out.path.push_back(why);
    PropertyCheck check = evaluate_properties(q_, s, family_);
    if (static_cast<int>(check.property) > static_cast<int>(intended)) {
      throw std::logic_error("crux: set does not satisfy the property it was built for (" + why +
                             ")");
    }
    out.set = std::move(s);
    out.property = check.property;
    out.bad_components = std::move(check.bad_components);
    return std::move(out);
  }

  // Short-circuit shared by every boundary inspection.
  std::optional<CruxOutcome> settle_extreme(const VertexList& z, const SeparatorClass& c,
                                            const std::string& name) {
    if (c.goodness == Goodness::kDual) {
      return settle(z, CruxProperty::kTwoBadComponents, name + " dual-good");
    }
    if (c.goodness == Goodness::kComplete) {
      return settle(z, CruxProperty::kDeletionSet, name + " completely-good");
    }
    return std::nullopt;
  }

  CruxOutcome out;

 private:
  const StructureInstance& q_;
  Vertex u_, v_;
  const StructureFamily& family_;
};

}  // namespace

CruxOutcome crux(const StructureInstance& q, Vertex u, Vertex v, int p,
                 const StructureFamily& family) {
  const Digraph& d = q.graph();
  const auto n = static_cast<Vertex>(d.num_vertices());
  if (u < 0 || u >= n || v < 0 || v >= n) throw std::out_of_range("crux: bad terminal");
  if (u == v) throw std::invalid_argument("crux: terminals must differ");
  if (p < 0) throw std::invalid_argument("crux: budget must be non-negative");
  if (!scc_decompose(d).strongly_connected()) {
    throw std::invalid_argument("crux: digraph is not strongly connected");
  }
  if (family.recognize(q)) throw std::invalid_argument("crux: instance already in the family");

  auto built = tight_separator_sequence(d, u, v, p);
  if (exceeds(built)) {
    CruxOutcome none;
    none.no_separator = true;
    none.path.push_back(std::get<ExceedsBudget>(built).infinite ? "no separator (arc u->v)"
                                                                 : "no separator within budget");
    return none;
  }
  const TightSeparatorSequence& seq = std::get<TightSeparatorSequence>(built);
  const std::size_t len = seq.length();
  auto z = [&](std::size_t i) -> const VertexList& { return seq.boundary(i); };
  auto zname = [](std::size_t i) { return "Z" + std::to_string(i); };

  Cascade run(q, u, v, family);
  run.out.path.push_back("sequence length " + std::to_string(len));

  const SeparatorClass first = run.look(z(1), zname(1));
  if (auto r = run.settle_extreme(z(1), first, zname(1))) return std::move(*r);
  if (first.goodness == Goodness::kRight) {
    return run.settle(set_union({&z(1)}, {u, v}), CruxProperty::kBudgetDrop, "Z1 r-good");
  }

  const SeparatorClass last = run.look(z(len), zname(len));
  if (auto r = run.settle_extreme(z(len), last, zname(len))) return std::move(*r);
  if (last.goodness == Goodness::kLeft) {
    return run.settle(set_union({&z(len)}, {u, v}), CruxProperty::kBudgetDrop,
                      zname(len) + " l-good");
  }

  if (auto g = find_bad_gap(q, seq, p, family)) {
    const std::size_t i = *g;
    run.out.path.push_back("gap " + std::to_string(i) + " outside the family");
    const SeparatorClass ci = run.look(z(i), zname(i));
    if (auto r = run.settle_extreme(z(i), ci, zname(i))) return std::move(*r);
    const SeparatorClass cj = run.look(z(i + 1), zname(i + 1));
    if (auto r = run.settle_extreme(z(i + 1), cj, zname(i + 1))) return std::move(*r);
    return run.settle(set_union({&z(i), &z(i + 1)}, {u, v}), CruxProperty::kBudgetDrop,
                      "bad gap " + std::to_string(i));
  }

  if (first.r_light) return run.settle(z(1), CruxProperty::kBalancedSplit, "Z1 r-light");
  if (last.l_light) {
    return run.settle(z(len), CruxProperty::kBalancedSplit, zname(len) + " l-light");
  }

  auto t = llight_transition(q, seq, p);
  if (!t) throw std::logic_error("crux: no l-light transition although Z1 and Zq are heavy");
  const std::size_t i = *t;
  run.out.path.push_back("transition at " + std::to_string(i));
  const SeparatorClass ci = run.look(z(i), zname(i));
  if (auto r = run.settle_extreme(z(i), ci, zname(i))) return std::move(*r);
  const SeparatorClass cj = run.look(z(i + 1), zname(i + 1));
  if (auto r = run.settle_extreme(z(i + 1), cj, zname(i + 1))) return std::move(*r);
  if (cj.goodness == Goodness::kLeft) {
    return run.settle(set_union({&z(i + 1)}, {v}), CruxProperty::kBalancedSplit,
                      zname(i + 1) + " l-good");
  }
  if (ci.goodness == Goodness::kRight) {
    return run.settle(set_union({&z(i)}, {v}), CruxProperty::kBalancedSplit,
                      zname(i) + " r-good");
  }
  return run.settle(set_union({&z(i), &z(i + 1)}, {u, v}), CruxProperty::kDeletionSet,
                    zname(i) + " l-good and " + zname(i + 1) + " r-good");
}

}  // namespace dfvs
