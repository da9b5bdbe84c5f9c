#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dlgraph/errors.hpp"

namespace dlg {

// 1-based grid position of a vertex.
struct GridCoord {
  int row = 0;
  int col = 0;
  auto operator<=>(const GridCoord&) const = default;
};

// Immutable finite simple graph. Vertex ids are arbitrary non-negative
// integers; grid labels are carried separately so relabeling never
// invalidates edges.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<int> vertices, std::vector<std::pair<int, int>> edges,
        std::map<int, GridCoord> labels = {});

  const std::vector<int>& vertices() const { return verts_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::map<int, GridCoord>& labels() const { return labels_; }

  std::size_t vertex_count() const { return verts_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(int v) const { return adj_.count(v) != 0; }
  bool adjacent(int u, int v) const;
  const std::vector<int>& neighbors(int v) const;
  std::size_t degree(int v) const { return neighbors(v).size(); }
  std::optional<GridCoord> label(int v) const;
  std::optional<int> vertex_with_label(GridCoord c) const;

  Graph induced(const std::set<int>& w) const;
  Graph without_vertex(int v) const;
  Graph without_vertices(const std::set<int>& vs) const;

  // Dense local index of a vertex (position in the sorted vertex list).
  int index_of(int v) const;

 private:
  std::vector<int> verts_;                       // sorted, unique
  std::vector<std::pair<int, int>> edges_;       // u < v, sorted, unique
  std::unordered_map<int, std::vector<int>> adj_;
  std::map<int, GridCoord> labels_;
};

Graph induced_subgraph(const Graph& g, const std::set<int>& w);

// Components ordered by smallest contained vertex id; ids are preserved, so
// the embedding map into g is the identity.
std::vector<Graph> connected_components(const Graph& g);

std::set<int> closed_neighborhood(const Graph& g, int v);

Graph disjoint_union_relabel(const Graph& g1, const Graph& g2);

}  // namespace dlg
