#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "dfvs/digraph.hpp"

namespace dfvs {

enum class Format { kAuto, kPace, kEdgeList };

// Malformed input; `line` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// PACE: '%' comments, header "n m 0", then one line of 1-based out-neighbours
// per vertex. Edge list: '#' comments, optional header "dfvs n m", then
// 0-based "u v" lines. kAuto picks by the first non-comment line.
Digraph read_graph(std::istream& in, Format format = Format::kAuto);
Digraph read_graph_file(const std::string& path, Format format = Format::kAuto);
Format parse_format(const std::string& name);

void write_pace(std::ostream& out, const Digraph& d);
void write_edge_list(std::ostream& out, const Digraph& d);

// 1-based vertex ids separated by whitespace; '%' and '#' start comments.
VertexList read_vertex_solution(std::istream& in, std::size_t num_vertices);
// One "u v" pair of 1-based ids per line.
std::vector<Arc> read_arc_solution(std::istream& in, std::size_t num_vertices);

}  // namespace dfvs
