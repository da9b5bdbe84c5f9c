#pragma once

#include <map>
#include <optional>
#include <vector>

#include "dlgraph/config.hpp"
#include "dlgraph/graph.hpp"

namespace dlg {

struct PatternKind {
  enum Kind { C5, K33MinusE, InducedCycleAtLeast } kind;
  int min_len = 0;  // for InducedCycleAtLeast, >= 6

  static PatternKind c5() { return {C5, 0}; }
  static PatternKind k33_minus_e() { return {K33MinusE, 0}; }
  static PatternKind induced_cycle_at_least(int len);
};

struct PatternEmbedding {
  PatternKind pattern;
  std::vector<int> image;  // host vertices, in pattern vertex order
};

// The reference copy of a fixed pattern, on vertices 0..k-1.
Graph pattern_graph(const PatternKind& p);

// For InducedCycleAtLeast, the returned embedding is a shortest qualifying
// induced cycle (vertices in cycle order).
std::optional<PatternEmbedding> find_induced_pattern(const Graph& g,
                                                     const PatternKind& p,
                                                     const Config& cfg = {});

// Re-verify an embedding: the induced subgraph on the image must equal the
// pattern under the listed-order mapping.
bool verify_embedding(const Graph& g, const PatternEmbedding& e);

struct ChordalBipartite {
  bool ok = false;
  std::pair<std::vector<int>, std::vector<int>> bipartition;  // when ok
  std::vector<int> odd_cycle;              // non-bipartite witness
  std::optional<PatternEmbedding> long_cycle;  // induced cycle >= 6 witness
};

ChordalBipartite is_chordal_bipartite(const Graph& g, const Config& cfg = {});

// Edge-preserving bijection, or nullopt. Backtracking with degree pruning.
std::optional<std::map<int, int>> graphs_isomorphic(const Graph& g1,
                                                    const Graph& g2,
                                                    const Config& cfg = {});

struct VdBruteForce {
  bool vertex_decomposable = false;
  // Shedding choices of one successful derivation, in pre-order over the
  // recursion tree (empty for edgeless graphs).
  std::vector<int> shedding;
};

VdBruteForce is_vertex_decomposable_bruteforce(const Graph& g,
                                               const Config& cfg = {});

}  // namespace dlg
