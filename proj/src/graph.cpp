#include "dlgraph/graph.hpp"

#include <algorithm>

namespace dlg {

Graph::Graph(std::vector<int> vertices, std::vector<std::pair<int, int>> edges,
             std::map<int, GridCoord> labels)
    : verts_(std::move(vertices)), labels_(std::move(labels)) {
  std::sort(verts_.begin(), verts_.end());
  verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
  for (int v : verts_) adj_[v];
  for (auto& [u, v] : edges) {
    if (u == v) throw Error("loop at vertex " + std::to_string(u));
    if (!has_vertex(u)) throw InvalidVertex(u);
    if (!has_vertex(v)) throw InvalidVertex(v);
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& [v, nb] : adj_) std::sort(nb.begin(), nb.end());
  for (auto it = labels_.begin(); it != labels_.end();) {
    it = has_vertex(it->first) ? std::next(it) : labels_.erase(it);
  }
}

bool Graph::adjacent(int u, int v) const {
  const auto& nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) throw InvalidVertex(v);
  return it->second;
}

std::optional<GridCoord> Graph::label(int v) const {
  auto it = labels_.find(v);
  if (it == labels_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Graph::vertex_with_label(GridCoord c) const {
  for (const auto& [v, lab] : labels_)
    if (lab == c) return v;
  return std::nullopt;
}

int Graph::index_of(int v) const {
  auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
  if (it == verts_.end() || *it != v) throw InvalidVertex(v);
  return static_cast<int>(it - verts_.begin());
}

Graph Graph::induced(const std::set<int>& w) const {
  for (int v : w)
    if (!has_vertex(v)) throw InvalidVertex(v);
  std::vector<std::pair<int, int>> es;
  for (auto [u, v] : edges_)
    if (w.count(u) && w.count(v)) es.emplace_back(u, v);
  std::map<int, GridCoord> labs;
  for (int v : w) {
    auto it = labels_.find(v);
    if (it != labels_.end()) labs[v] = it->second;
  }
  return Graph(std::vector<int>(w.begin(), w.end()), std::move(es),
               std::move(labs));
}

Graph Graph::without_vertex(int v) const { return without_vertices({v}); }

Graph Graph::without_vertices(const std::set<int>& vs) const {
  std::set<int> keep(verts_.begin(), verts_.end());
  for (int v : vs) {
    if (!has_vertex(v)) throw InvalidVertex(v);
    keep.erase(v);
  }
  return induced(keep);
}

Graph induced_subgraph(const Graph& g, const std::set<int>& w) {
  return g.induced(w);
}

std::vector<Graph> connected_components(const Graph& g) {
  std::set<int> unseen(g.vertices().begin(), g.vertices().end());
  std::vector<Graph> out;
  while (!unseen.empty()) {
    int root = *unseen.begin();
    std::set<int> comp;
    std::vector<int> stack{root};
    unseen.erase(root);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.insert(v);
      for (int u : g.neighbors(v)) {
        if (unseen.erase(u)) stack.push_back(u);
      }
    }
    out.push_back(g.induced(comp));
  }
  return out;
}

std::set<int> closed_neighborhood(const Graph& g, int v) {
  const auto& nb = g.neighbors(v);
  std::set<int> out(nb.begin(), nb.end());
  out.insert(v);
  return out;
}

Graph disjoint_union_relabel(const Graph& g1, const Graph& g2) {
  int offset = 0;
  for (int v : g1.vertices()) offset = std::max(offset, v + 1);
  std::vector<int> verts(g1.vertices());
  std::vector<std::pair<int, int>> edges(g1.edges());
  std::map<int, GridCoord> labels(g1.labels());
  for (int v : g2.vertices()) verts.push_back(v + offset);
  for (auto [u, v] : g2.edges()) edges.emplace_back(u + offset, v + offset);
  for (const auto& [v, lab] : g2.labels()) labels[v + offset] = lab;
  return Graph(std::move(verts), std::move(edges), std::move(labels));
}

}  // namespace dlg
