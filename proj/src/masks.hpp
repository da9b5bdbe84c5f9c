#pragma once

// Internal bitmask helpers shared by the enumeration, decomposability and
// homology code. Vertices are addressed by their dense local index.

#include <bit>
#include <cstdint>
#include <vector>

#include "dlgraph/graph.hpp"

namespace dlg::detail {

using Mask = std::uint64_t;

inline Mask bit(int i) { return Mask{1} << i; }

// adjacency[i] = mask of neighbors of vertex index i
std::vector<Mask> adjacency_masks(const Graph& g);

// Maximal independent sets restricted to `universe`, as masks, sorted.
std::vector<Mask> mis_masks(const std::vector<Mask>& adj, Mask universe);

inline bool edgeless(const std::vector<Mask>& adj, Mask universe) {
  for (int i = 0; i < static_cast<int>(adj.size()); ++i)
    if ((universe >> i & 1) && (adj[i] & universe)) return false;
  return true;
}

}  // namespace dlg::detail
