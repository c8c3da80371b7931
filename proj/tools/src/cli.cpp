#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dfvs/crux.hpp"
#include "dfvs/generators.hpp"
#include "dfvs/io.hpp"
#include "dfvs/oracle.hpp"
#include "dfvs/report.hpp"
#include "dfvs/scaling.hpp"
#include "dfvs/scc.hpp"
#include "dfvs/separators.hpp"
#include "dfvs/solver.hpp"
#include "dfvs/tight_sequence.hpp"

namespace dfvs {

namespace {

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string input = "-";
  std::string format = "auto";
  bool json = false;
  int verbosity = 0;
};

Digraph load(const Common& c, std::istream& in) {
  const Format f = parse_format(c.format);
  if (c.input == "-") return read_graph(in, f);
  return read_graph_file(c.input, f);
}

double since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Vertex vertex_arg(long long one_based, const Digraph& d, const char* what) {
  if (one_based < 1 || static_cast<std::size_t>(one_based) > d.num_vertices()) {
    throw UsageError(std::string(what) + " must lie in [1, n]");
  }
  return static_cast<Vertex>(one_based - 1);
}

void print_vertices(std::ostream& out, const VertexList& xs) {
  for (Vertex v : xs) out << v + 1 << '\n';
}

void print_arcs(std::ostream& out, const std::vector<Arc>& arcs) {
  for (const Arc& a : arcs) out << a.tail + 1 << ' ' << a.head + 1 << '\n';
}

int run_solve(const Common& c, std::optional<int> k, bool arcs, std::istream& in, std::ostream& out,
              std::ostream& err) {
  const Digraph d = load(c, in);
  const auto start = std::chrono::steady_clock::now();
  std::optional<Solution> sol;
  int reported_k = k.value_or(-1);
  if (arcs) {
    if (k) {
      sol = solve_dfas(d, *k);
    } else {
      for (int b = 0; !sol; ++b) {
        sol = solve_dfas(d, b);
        reported_k = b;
      }
    }
  } else if (k) {
    sol = solve_dfvs(d, *k);
  } else {
    sol = solve_dfvs_min(d, static_cast<int>(d.num_vertices()));
    reported_k = sol ? sol->opt_size : -1;
  }
  const double seconds = since(start);
  if (c.verbosity > 0) err << "solved in " << seconds << " s\n";
  if (c.json) {
    out << solution_json(sol, reported_k, seconds, c.verbosity > 0) << '\n';
  } else if (!sol) {
    out << "NO\n";
  } else if (arcs) {
    print_arcs(out, sol->arcs);
  } else {
    print_vertices(out, sol->vertices);
  }
  return sol ? kOk : kNo;
}

int run_verify(const Common& c, const std::string& solution_path, bool arcs, std::optional<int> k,
               std::istream& in, std::ostream& out) {
  const Digraph d = load(c, in);
  std::ifstream sf(solution_path);
  if (!sf) throw ParseError("cannot open '" + solution_path + "'", 0);
  std::string reason;
  std::size_t size = 0;
  if (arcs) {
    std::vector<Arc> xs = read_arc_solution(sf, d.num_vertices());
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    size = xs.size();
    std::vector<Arc> kept;
    for (const Arc& a : d.arcs()) {
      if (!std::binary_search(xs.begin(), xs.end(), a)) kept.push_back(a);
    }
    for (const Arc& a : xs) {
      if (!d.has_arc(a.tail, a.head)) {
        reason = "arc " + std::to_string(a.tail + 1) + " " + std::to_string(a.head + 1) +
                 " is not in the instance";
      }
    }
    if (reason.empty() && !is_acyclic(Digraph(d.num_vertices(), kept))) {
      reason = "a cycle survives";
    }
  } else {
    VertexList xs = read_vertex_solution(sf, d.num_vertices());
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    size = xs.size();
    if (!is_acyclic_without(d, xs)) reason = "a cycle survives";
  }
  if (reason.empty() && k && size > static_cast<std::size_t>(*k)) {
    reason = "size " + std::to_string(size) + " exceeds k = " + std::to_string(*k);
  }
  if (c.json) {
    nlohmann::json j{{"schema", 1}, {"valid", reason.empty()}, {"size", size}};
    if (!reason.empty()) j["reason"] = reason;
    out << j.dump() << '\n';
  } else {
    out << (reason.empty() ? "OK" : "INVALID: " + reason) << '\n';
  }
  return reason.empty() ? kOk : kNo;
}

struct GenArgs {
  std::size_t n = 100;
  std::size_t m = 300;
  int k = 3;
  std::string output = "-";
  std::string format = "pace";
  std::string corpus_dir;
  std::size_t count = 100;
  std::size_t n_max = 8;
  std::size_t m_max = 20;
  int k_max = 4;
};

void write_graph(std::ostream& out, const Digraph& d, Format f) {
  if (f == Format::kEdgeList) {
    write_edge_list(out, d);
  } else {
    write_pace(out, d);
  }
}

int run_gen(const GenArgs& g, std::uint64_t seed, std::ostream& out, std::ostream& err) {
  Format f = parse_format(g.format);
  if (f == Format::kAuto) f = Format::kPace;
  if (!g.corpus_dir.empty()) {
    // Sampled corpus plus a sidecar with oracle optima (capped at k).
    namespace fs = std::filesystem;
    fs::create_directories(g.corpus_dir);
    nlohmann::json side{{"schema", 1}, {"seed", seed}, {"instances", nlohmann::json::array()}};
    const auto corpus = gen_corpus(g.count, g.n_max, g.m_max, g.k_max, seed);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      std::ostringstream name;
      name << "g" << i << (f == Format::kPace ? ".gr" : ".txt");
      std::ofstream file(fs::path(g.corpus_dir) / name.str());
      write_graph(file, corpus[i].graph, f);
      auto x = brute_force_dfvs(corpus[i].graph, corpus[i].k);
      nlohmann::json entry{{"file", name.str()}, {"k", corpus[i].k}};
      entry["opt"] = x ? nlohmann::json(x->size()) : nlohmann::json(nullptr);
      side["instances"].push_back(std::move(entry));
    }
    std::ofstream(fs::path(g.corpus_dir) / "corpus.json") << side.dump(1) << '\n';
    err << "wrote " << corpus.size() << " instances to " << g.corpus_dir << '\n';
    return kOk;
  }
  const PlantedInstance inst = gen_planted(g.n, g.m, g.k, seed);
  if (g.output == "-") {
    write_graph(out, inst.graph, f);
  } else {
    std::ofstream file(g.output);
    if (!file) throw UsageError("cannot write '" + g.output + "'");
    write_graph(file, inst.graph, f);
  }
  return kOk;
}

int run_bench(int k, const std::vector<std::size_t>& sizes, int reps, std::uint64_t seed,
              std::ostream& out) {
  out << scaling_json(bench_scaling(k, sizes, reps, seed)) << '\n';
  return kOk;
}

struct TraceArgs {
  std::string what = "solver";
  long long source = 0;
  long long sink = 0;
  int k = 3;
};

int run_trace(const Common& c, const TraceArgs& t, std::istream& in, std::ostream& out) {
  const Digraph d = load(c, in);
  if (t.what == "solver") {
    auto sol = solve_dfvs(d, t.k);
    if (c.json) {
      out << solution_json(sol, t.k, 0.0, true) << '\n';
    } else if (!sol) {
      out << "NO\n";
    } else {
      for (const TraceEntry& e : sol->trace) {
        out << std::string(2 * static_cast<std::size_t>(e.depth), ' ') << to_string(e.which)
            << " size=" << e.instance_size << " budget=" << e.budget << '\n';
      }
    }
    return sol ? kOk : kNo;
  }
  const StructureInstance q(d);
  if (t.what == "crux") {
    if (!scc_decompose(d).strongly_connected() || is_acyclic(d)) {
      throw UsageError("crux needs a strongly connected instance with a cycle");
    }
    Vertex u, v;
    if (t.source && t.sink) {
      u = vertex_arg(t.source, d, "--source");
      v = vertex_arg(t.sink, d, "--sink");
    } else {
      const CyclePair pair = find_cycle_pair(q);
      u = pair.u;
      v = pair.v;
    }
    const CruxOutcome o = crux(q, u, v, t.k);
    if (c.json) {
      out << crux_json(o, t.k) << '\n';
    } else {
      for (const std::string& step : o.path) out << step << '\n';
      if (o.no_separator) {
        out << "no separator of size <= " << t.k << '\n';
      } else {
        out << "property " << to_string(o.property) << '\n';
        print_vertices(out, o.set);
      }
    }
    return kOk;
  }
  const Vertex s = vertex_arg(t.source, d, "--source");
  const Vertex x = vertex_arg(t.sink, d, "--sink");
  if (s == x) throw UsageError("--source and --sink must differ");
  auto describe = [&](const std::vector<VertexList>& boundaries) {
    for (std::size_t i = 0; i < boundaries.size(); ++i) {
      out << "Z" << i + 1 << ":";
      for (Vertex w : boundaries[i]) out << ' ' << w + 1;
      out << '\n';
    }
  };
  if (t.what == "chain") {
    auto r = separator_layers(d, s, x, t.k);
    if (exceeds(r)) {
      out << "NO\n";
      return kNo;
    }
    const auto& chain = std::get<SeparatorChain>(r);
    if (c.json) {
      out << chain_json(chain) << '\n';
    } else {
      out << "lambda " << chain.lambda << '\n';
      describe(chain.boundaries);
    }
    return kOk;
  }
  if (t.what == "sequence") {
    if (!reachable_from(d, std::span<const Vertex>(&s, 1))[x]) {
      throw UsageError("--sink is not reachable from --source");
    }
    auto r = tight_separator_sequence(d, s, x, t.k);
    if (exceeds(r)) {
      out << "NO\n";
      return kNo;
    }
    const auto& seq = std::get<TightSeparatorSequence>(r);
    if (c.json) {
      out << sequence_json(q, seq, acyclic_family()) << '\n';
    } else {
      describe(seq.boundaries);
    }
    return kOk;
  }
  throw UsageError("--what must be solver, chain, sequence or crux");
}

void add_common(CLI::App* cmd, Common& c, bool input = true) {
  if (input) cmd->add_option("input", c.input, "Instance file, '-' for stdin");
  cmd->add_option("--format", c.format, "auto, pace or edge-list")
      ->check(CLI::IsMember({"auto", "pace", "edge-list", "edges"}));
  cmd->add_flag("--json", c.json, "JSON output");
  cmd->add_flag("-v,--verbose", c.verbosity, "More diagnostics on stderr");
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Exact directed feedback vertex and arc set solver", "dfvs"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed = 0;
  bool seed_given = false;
  app.add_option_function<std::uint64_t>(
         "--seed", [&](std::uint64_t s) { seed = s, seed_given = true; },
         "RNG seed (default: DFVS_SEED or a fixed constant)")
      ->option_text("UINT");

  // One struct per subcommand: CLI11 may touch bound variables of subcommands not invoked.
  Common c_solve, c_arcs, c_verify, c_trace;
  std::optional<int> k;
  auto k_opt = [&](CLI::App* cmd) {
    cmd->add_option_function<int>("-k", [&](int v) { k = v; }, "Budget")
        ->check(CLI::NonNegativeNumber);
  };

  CLI::App* solve = app.add_subcommand("solve", "Minimum feedback vertex set");
  add_common(solve, c_solve);
  k_opt(solve);
  CLI::App* solve_arcs = app.add_subcommand("solve-arcs", "Minimum feedback arc set");
  add_common(solve_arcs, c_arcs);
  k_opt(solve_arcs);

  CLI::App* verify = app.add_subcommand("verify", "Check a solution file against an instance");
  std::string solution_path;
  bool verify_arcs = false;
  add_common(verify, c_verify, false);
  verify->add_option("input", c_verify.input, "Instance file")->required();
  verify->add_option("solution", solution_path, "Solution file")->required();
  verify->add_flag("--arcs", verify_arcs, "Solution lists arcs, one 'u v' per line");
  k_opt(verify);

  CLI::App* gen = app.add_subcommand("gen", "Write a planted instance or a sampled corpus");
  GenArgs g;
  gen->add_option("-n", g.n, "Vertices")->check(CLI::PositiveNumber);
  gen->add_option("-m", g.m, "Arcs")->check(CLI::PositiveNumber);
  gen->add_option("-k", g.k, "Planted feedback set size")->check(CLI::NonNegativeNumber);
  gen->add_option("-o,--output", g.output, "Output file, '-' for stdout");
  gen->add_option("--format", g.format, "pace or edge-list")
      ->check(CLI::IsMember({"pace", "edge-list", "edges"}));
  gen->add_option("--corpus", g.corpus_dir, "Write a sampled corpus with oracle optima here");
  gen->add_option("--count", g.count, "Corpus size");
  gen->add_option("--n-max", g.n_max, "Corpus: largest n")->check(CLI::PositiveNumber);
  gen->add_option("--m-max", g.m_max, "Corpus: largest m");
  gen->add_option("--k-max", g.k_max, "Corpus: largest k")->check(CLI::NonNegativeNumber);

  CLI::App* bench = app.add_subcommand("bench", "Scaling suite on planted instances, JSON report");
  int bench_k = 3;
  int reps = 3;
  std::vector<std::size_t> sizes{100000, 200000, 400000};
  bench->add_option("-k", bench_k, "Planted k")->check(CLI::NonNegativeNumber);
  bench->add_option("--sizes", sizes, "Arc counts, increasing")->delimiter(',');
  bench->add_option("--reps", reps, "Repetitions per size")->check(CLI::PositiveNumber);

  CLI::App* trace = app.add_subcommand("trace", "Dump solver or separator internals");
  TraceArgs t;
  add_common(trace, c_trace);
  trace->add_option("--what", t.what, "solver, chain, sequence or crux")
      ->check(CLI::IsMember({"solver", "chain", "sequence", "crux"}));
  trace->add_option("--source", t.source, "1-based source vertex");
  trace->add_option("--sink", t.sink, "1-based sink vertex");
  trace->add_option("-k", t.k, "Budget (p for crux)")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (!seed_given) seed = default_seed();
    if (solve->parsed()) return run_solve(c_solve, k, false, in, out, err);
    if (solve_arcs->parsed()) return run_solve(c_arcs, k, true, in, out, err);
    if (verify->parsed()) return run_verify(c_verify, solution_path, verify_arcs, k, in, out);
    if (gen->parsed()) return run_gen(g, seed, out, err);
    if (bench->parsed()) return run_bench(bench_k, sizes, reps, seed, out);
    if (trace->parsed()) return run_trace(c_trace, t, in, out);
  } catch (const ParseError& e) {
    err << "dfvs: malformed input: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    err << "dfvs: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "dfvs: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace dfvs
