#include "dfvs/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace dfvs {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t number(std::string_view tok, std::size_t line) {
  std::uint64_t v = 0;
  auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || end != tok.data() + tok.size()) {
    throw ParseError("expected a non-negative integer, got '" + std::string(tok) + "'", line);
  }
  return v;
}

bool is_comment(std::string_view line, char mark) {
  auto toks = split(line);
  return !toks.empty() && toks[0].front() == mark;
}

bool blank(std::string_view line) { return split(line).empty(); }

Digraph read_pace(const std::vector<std::string>& lines) {
  std::size_t i = 0;
  while (i < lines.size() && (blank(lines[i]) || is_comment(lines[i], '%'))) ++i;
  if (i == lines.size()) throw ParseError("missing header 'n m 0'", 0);
  auto head = split(lines[i]);
  if (head.size() != 3) throw ParseError("header must read 'n m 0'", i + 1);
  const std::uint64_t n = number(head[0], i + 1);
  const std::uint64_t m = number(head[1], i + 1);
  number(head[2], i + 1);
  ++i;
  std::vector<Arc> arcs;
  arcs.reserve(m);
  std::uint64_t v = 0;
  for (; i < lines.size(); ++i) {
    if (is_comment(lines[i], '%')) continue;
    if (v == n) {
      if (blank(lines[i])) continue;
      throw ParseError("more adjacency lines than vertices", i + 1);
    }
    for (auto tok : split(lines[i])) {
      const std::uint64_t w = number(tok, i + 1);
      if (w == 0 || w > n) throw ParseError("vertex id outside [1, n]", i + 1);
      arcs.push_back({static_cast<Vertex>(v), static_cast<Vertex>(w - 1)});
    }
    ++v;
  }
  if (arcs.size() != m) {
    throw ParseError("header announces " + std::to_string(m) + " arcs, found " +
                         std::to_string(arcs.size()),
                     0);
  }
  return Digraph(n, arcs);
}

Digraph read_edges(const std::vector<std::string>& lines) {
  std::vector<Arc> arcs;
  std::int64_t n = -1;
  std::int64_t m = -1;
  std::uint64_t top = 0;
  bool any = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (blank(lines[i]) || is_comment(lines[i], '#')) continue;
    auto toks = split(lines[i]);
    if (toks[0] == "dfvs") {
      if (any || n >= 0 || toks.size() != 3) throw ParseError("misplaced or bad 'dfvs n m' header", i + 1);
      n = static_cast<std::int64_t>(number(toks[1], i + 1));
      m = static_cast<std::int64_t>(number(toks[2], i + 1));
      continue;
    }
    if (toks.size() != 2) throw ParseError("expected 'u v'", i + 1);
    const std::uint64_t a = number(toks[0], i + 1);
    const std::uint64_t b = number(toks[1], i + 1);
    if (n >= 0 && (a >= static_cast<std::uint64_t>(n) || b >= static_cast<std::uint64_t>(n))) {
      throw ParseError("vertex id outside [0, n)", i + 1);
    }
    top = std::max({top, a + 1, b + 1});
    arcs.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    any = true;
  }
  if (m >= 0 && arcs.size() != static_cast<std::size_t>(m)) {
    throw ParseError("header announces " + std::to_string(m) + " arcs, found " +
                         std::to_string(arcs.size()),
                     0);
  }
  return Digraph(n >= 0 ? static_cast<std::size_t>(n) : top, arcs);
}

Format detect(const std::vector<std::string>& lines) {
  for (const std::string& line : lines) {
    auto toks = split(line);
    if (toks.empty() || toks[0].front() == '%' || toks[0].front() == '#') continue;
    if (toks[0] == "dfvs" || toks.size() == 2) return Format::kEdgeList;
    if (toks.size() == 3) return Format::kPace;
    throw ParseError("cannot tell the input format from '" + line + "'", 0);
  }
  return Format::kEdgeList;
}

}  // namespace

Digraph read_graph(std::istream& in, Format format) {
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(std::move(line));
  if (format == Format::kAuto) format = detect(lines);
  return format == Format::kPace ? read_pace(lines) : read_edges(lines);
}

Digraph read_graph_file(const std::string& path, Format format) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  return read_graph(in, format);
}

Format parse_format(const std::string& name) {
  if (name == "auto") return Format::kAuto;
  if (name == "pace") return Format::kPace;
  if (name == "edge-list" || name == "edges") return Format::kEdgeList;
  throw std::invalid_argument("unknown format '" + name + "'");
}

void write_pace(std::ostream& out, const Digraph& d) {
  out << d.num_vertices() << ' ' << d.num_arcs() << " 0\n";
  for (std::size_t v = 0; v < d.num_vertices(); ++v) {
    bool first = true;
    for (Vertex w : d.out(static_cast<Vertex>(v))) {
      if (!first) out << ' ';
      out << w + 1;
      first = false;
    }
    out << '\n';
  }
}

void write_edge_list(std::ostream& out, const Digraph& d) {
  out << "dfvs " << d.num_vertices() << ' ' << d.num_arcs() << '\n';
  for (const Arc& a : d.arcs()) out << a.tail << ' ' << a.head << '\n';
}

VertexList read_vertex_solution(std::istream& in, std::size_t num_vertices) {
  VertexList out;
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    for (auto tok : split(line)) {
      if (tok.front() == '%' || tok.front() == '#') break;
      const std::uint64_t v = number(tok, lineno);
      if (v == 0 || v > num_vertices) throw ParseError("vertex id outside [1, n]", lineno);
      out.push_back(static_cast<Vertex>(v - 1));
    }
  }
  return out;
}

std::vector<Arc> read_arc_solution(std::istream& in, std::size_t num_vertices) {
  std::vector<Arc> out;
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    auto toks = split(line);
    if (toks.empty() || toks[0].front() == '%' || toks[0].front() == '#') continue;
    if (toks.size() != 2) throw ParseError("expected 'u v'", lineno);
    const std::uint64_t a = number(toks[0], lineno);
    const std::uint64_t b = number(toks[1], lineno);
    if (a == 0 || b == 0 || a > num_vertices || b > num_vertices) {
      throw ParseError("vertex id outside [1, n]", lineno);
    }
    out.push_back({static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1)});
  }
  return out;
}

}  // namespace dfvs
