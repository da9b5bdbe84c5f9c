#include "dlgraph/io.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "dlgraph/errors.hpp"

namespace dlg::io {

namespace {

std::optional<GridCoord> parse_label(const std::string& tok) {
  if (tok.size() < 4 || tok[0] != 'x') return std::nullopt;
  auto us = tok.find('_');
  if (us == std::string::npos || us == 1 || us + 1 >= tok.size())
    return std::nullopt;
  GridCoord c;
  try {
    size_t used = 0;
    c.row = std::stoi(tok.substr(1, us - 1), &used);
    if (used != us - 1) return std::nullopt;
    c.col = std::stoi(tok.substr(us + 1), &used);
    if (used != tok.size() - us - 1) return std::nullopt;
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (c.row < 1 || c.col < 1) return std::nullopt;
  return c;
}

std::string strip_comment(std::string line) {
  auto hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  return line;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::map<std::string, int> ids;
  std::vector<int> verts;
  std::map<int, GridCoord> labels;
  std::vector<std::pair<int, int>> edges;
  bool have_header = false;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(strip_comment(line));
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "vertices") {
      have_header = true;
      while (ls >> tok) {
        if (ids.count(tok)) throw PreconditionFailed("duplicate vertex token " + tok);
        int id = static_cast<int>(ids.size());
        ids[tok] = id;
        verts.push_back(id);
        if (auto lab = parse_label(tok)) labels[id] = *lab;
      }
      continue;
    }
    std::string tok2;
    if (!(ls >> tok2)) throw PreconditionFailed("edge line with a single endpoint");
    std::string extra;
    if (ls >> extra) throw PreconditionFailed("edge line with extra tokens");
    for (const auto& t : {tok, tok2})
      if (!ids.count(t)) throw PreconditionFailed("edge endpoint " + t + " not in header");
    edges.emplace_back(ids[tok], ids[tok2]);
  }
  if (!have_header) throw PreconditionFailed("missing vertices header");
  return Graph(verts, edges, labels);
}

std::string vertex_token(const Graph& g, int v) {
  if (auto lab = g.label(v))
    return "x" + std::to_string(lab->row) + "_" + std::to_string(lab->col);
  return std::to_string(v);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "vertices";
  for (int v : g.vertices()) out << ' ' << vertex_token(g, v);
  out << '\n';
  for (const auto& e : g.edges())
    out << vertex_token(g, e.first) << ' ' << vertex_token(g, e.second) << '\n';
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionFailed("cannot open " + path);
  return read_graph(in);
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw PreconditionFailed("cannot open " + path);
  write_graph(out, g);
}

}  // namespace dlg::io
