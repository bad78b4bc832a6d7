// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "mincut/graph.hpp"

namespace mincut {

enum class GraphFormat { EdgeList, Dimacs };

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Edge-list: first line "n m", then m lines "u v" with 0-based vertex ids.
// DIMACS: optional "c" comment lines, one "p edge n m" header, then m lines
// "e u v" with 1-based vertex ids (shifted to 0-based on load).
SimpleGraph load_graph(std::istream& in, GraphFormat format);

SimpleGraph load_graph_file(const std::string& path, GraphFormat format);

void write_graph(const SimpleGraph& g, GraphFormat format, std::ostream& out);

GraphFormat parse_format(const std::string& name);  // "edge-list" | "dimacs"

}  // namespace mincut
