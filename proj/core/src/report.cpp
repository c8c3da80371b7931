#include "dfvs/report.hpp"

#include <algorithm>

#include "json.hpp"

namespace dfvs {

using nlohmann::json;

namespace {

json arcs_json(const std::vector<Arc>& arcs) {
  json out = json::array();
  for (const Arc& a : arcs) out.push_back({a.tail, a.head});
  return out;
}

}  // namespace

std::string solution_json(const std::optional<Solution>& solution, int k, double seconds,
                          bool with_trace) {
  json j;
  j["schema"] = 1;
  j["k"] = k;
  j["answer"] = solution ? "YES" : "NO";
  j["timings"] = {{"solve_seconds", seconds}};
  if (solution) {
    j["size"] = solution->opt_size;
    if (solution->kind == Solution::Kind::kVertices) {
      j["vertices"] = solution->vertices;
    } else {
      j["arcs"] = arcs_json(solution->arcs);
      j["reduced_size"] = solution->reduced_size;
    }
    if (with_trace) {
      json trace = json::array();
      for (const TraceEntry& e : solution->trace) {
        trace.push_back({{"depth", e.depth},
                         {"case", to_string(e.which)},
                         {"size", e.instance_size},
                         {"budget", e.budget}});
      }
      j["trace"] = std::move(trace);
    }
  }
  return j.dump();
}

std::string chain_json(const SeparatorChain& chain) {
  json j;
  j["schema"] = 1;
  j["source"] = chain.source;
  j["sink"] = chain.sink;
  j["lambda"] = chain.lambda;
  j["length"] = chain.length();
  json layers = json::array();
  for (std::size_t i = 0; i < chain.length(); ++i) {
    VertexList delta = chain.deltas[i];
    std::sort(delta.begin(), delta.end());
    layers.push_back({{"index", i + 1}, {"delta", delta}, {"boundary", chain.boundaries[i]}});
  }
  j["layers"] = std::move(layers);
  VertexList beyond = chain.beyond;
  std::sort(beyond.begin(), beyond.end());
  j["beyond"] = beyond;
  return j.dump();
}

std::string sequence_json(const StructureInstance& q, const TightSeparatorSequence& seq,
                          const StructureFamily& family) {
  json j;
  j["schema"] = 1;
  j["source"] = seq.source;
  j["sink"] = seq.sink;
  j["k"] = seq.order;
  j["length"] = seq.length();
  json items = json::array();
  for (std::size_t i = 1; i <= seq.length(); ++i) {
    const SeparatorClass c = classify(q, seq.source, seq.sink, seq.boundary(i), family);
    VertexList delta = seq.deltas[i - 1];
    std::sort(delta.begin(), delta.end());
    items.push_back({{"index", i},
                     {"delta", delta},
                     {"boundary", seq.boundary(i)},
                     {"goodness", to_string(c.goodness)},
                     {"l_light", c.l_light},
                     {"r_light", c.r_light},
                     {"left_size", c.left_size},
                     {"right_size", c.right_size}});
  }
  j["boundaries"] = std::move(items);
  return j.dump();
}

std::string crux_json(const CruxOutcome& out, int p) {
  json j;
  j["schema"] = 1;
  j["p"] = p;
  if (out.no_separator) {
    j["outcome"] = "no-separator";
  } else {
    j["outcome"] = "set";
    j["set"] = out.set;
    j["property"] = to_string(out.property);
    j["bad_components"] = out.bad_components;
  }
  j["path"] = out.path;
  return j.dump();
}

std::string scaling_json(const ScalingReport& report) {
  json j;
  j["schema"] = 1;
  j["k"] = report.k;
  j["seed"] = report.seed;
  j["reps"] = report.reps;
  json points = json::array();
  for (const ScalingPoint& p : report.points) {
    points.push_back({{"m", p.m},
                      {"n", p.n},
                      {"seconds", p.seconds},
                      {"median", p.median_seconds},
                      {"opts", p.opts}});
  }
  j["points"] = std::move(points);
  j["ratios"] = report.ratios;
  return j.dump();
}

}  // namespace dfvs
