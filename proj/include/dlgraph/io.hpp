#pragma once

#include <iosfwd>
#include <string>

#include "dlgraph/graph.hpp"

namespace dlg::io {

// Edge-list format: a `vertices <token...>` header so isolated vertices
// survive, then one `u v` pair per line; `#` starts a comment. A token of
// the form x<i>_<j> carries the grid label (i, j); any other token is an
// opaque name. Ids are assigned by order of first appearance in the header.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);

std::string vertex_token(const Graph& g, int v);

}  // namespace dlg::io
