// SPDX-License-Identifier: Apache-2.0
#include "mincut/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace mincut {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw ParseError("parse error at line " + std::to_string(line) + ": " + what);
}

SimpleGraph build_checked(std::size_t n, std::vector<Edge> edges,
                          const std::vector<std::size_t>& edge_lines) {
  // Re-run the simplicity checks here so diagnostics carry line numbers.
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge e = edges[i];
    if (e.u >= n || e.v >= n) {
      fail(edge_lines[i], "vertex id out of range: (" + std::to_string(e.u) + ", " +
                              std::to_string(e.v) + ") with n = " + std::to_string(n));
    }
    if (e.u == e.v) {
      fail(edge_lines[i], "self-loop (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                              ") violates simplicity");
    }
  }
  try {
    return SimpleGraph(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid graph: ") + e.what());
  }
}

SimpleGraph load_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t n = 0, m = 0;
  if (!std::getline(in, line)) fail(1, "missing header line \"n m\"");
  ++line_no;
  {
    std::istringstream header(line);
    if (!(header >> n >> m)) fail(line_no, "expected header \"n m\"");
  }
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;
  edges.reserve(m);
  while (edges.size() < m) {
    if (!std::getline(in, line)) fail(line_no + 1, "unexpected end of input, expected " +
                                                       std::to_string(m) + " edges");
    ++line_no;
    if (line.empty()) continue;
    std::istringstream row(line);
    long long u = 0, v = 0;
    if (!(row >> u >> v)) fail(line_no, "expected edge line \"u v\"");
    if (u < 0 || v < 0) fail(line_no, "negative vertex id");
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
    edge_lines.push_back(line_no);
  }
  return build_checked(n, std::move(edges), edge_lines);
}

SimpleGraph load_dimacs(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0, m = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream row(line);
    char tag = 0;
    row >> tag;
    if (tag == 'p') {
      if (have_header) fail(line_no, "duplicate problem line");
      std::string kind;
      if (!(row >> kind >> n >> m) || kind != "edge") fail(line_no, "expected \"p edge n m\"");
      have_header = true;
      edges.reserve(m);
    } else if (tag == 'e') {
      if (!have_header) fail(line_no, "edge line before problem line");
      long long u = 0, v = 0;
      if (!(row >> u >> v)) fail(line_no, "expected \"e u v\"");
      if (u < 1 || v < 1) fail(line_no, "DIMACS vertex ids are 1-based");
      edges.push_back({static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1)});
      edge_lines.push_back(line_no);
    } else {
      fail(line_no, std::string("unknown line tag '") + tag + "'");
    }
  }
  if (!have_header) fail(line_no + 1, "missing \"p edge n m\" line");
  if (edges.size() != m) {
    fail(line_no, "header declares " + std::to_string(m) + " edges, found " +
                      std::to_string(edges.size()));
  }
  return build_checked(n, std::move(edges), edge_lines);
}

}  // namespace

SimpleGraph load_graph(std::istream& in, GraphFormat format) {
  return format == GraphFormat::EdgeList ? load_edge_list(in) : load_dimacs(in);
}

SimpleGraph load_graph_file(const std::string& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file: " + path);
  return load_graph(in, format);
}

void write_graph(const SimpleGraph& g, GraphFormat format, std::ostream& out) {
  if (format == GraphFormat::EdgeList) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  } else {
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  }
  if (!out) throw std::runtime_error("failed writing graph to sink");
}

GraphFormat parse_format(const std::string& name) {
  if (name == "edge-list") return GraphFormat::EdgeList;
  if (name == "dimacs") return GraphFormat::Dimacs;
  throw std::invalid_argument("unknown graph format: " + name);
}

}  // namespace mincut
