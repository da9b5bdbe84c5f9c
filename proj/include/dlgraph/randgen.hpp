#pragma once

#include <random>

#include "dlgraph/downleft.hpp"
#include "dlgraph/graph.hpp"
#include "dlgraph/toric.hpp"

namespace dlg::rand {

using Rng = std::mt19937_64;

// Erdos-Renyi G(n, p) on vertices 0..n-1.
Graph random_graph(int n, double p, Rng& rng);

// Uniform-ish rejection sampling over valid corner vectors; the vertex
// count of the resulting graph is capped when max_vertices > 0.
downleft::DownLeftSpec random_downleft_spec(int max_m, int max_n, Rng& rng,
                                  int max_vertices = 0);

// Random 0/1 matrix whose bipartite graph is chordal bipartite
// (generate-and-reject); when k33e_free is set the graph is additionally
// rejected until it has no induced complete-bipartite-minus-an-edge.
toric::BinaryMatrix random_chordal_bipartite_matrix(int max_rows, int max_cols,
                                                    Rng& rng,
                                                    bool k33e_free = false);

}  // namespace dlg::rand
