#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dlgraph/config.hpp"
#include "dlgraph/graph.hpp"

namespace dlg::hochster {

struct SimplicialComplex {
  std::vector<int> ground;                // sorted vertex ids
  std::vector<std::vector<int>> facets;   // sorted, no containments
};

// Facets are the maximal independent sets of g.
SimplicialComplex independence_complex(const Graph& g, const Config& cfg = {});

// ranks[t + 1] = rank of reduced homology in degree t (rational
// coefficients), t from -1 to the complex dimension. Computed from exact
// fraction-free boundary-matrix ranks; no floating point anywhere.
std::vector<long> reduced_homology_ranks(const SimplicialComplex& c,
                                         const Config& cfg = {});

struct BettiTable {
  // (homological degree i, internal degree j) -> beta_{i,j}
  std::map<std::pair<int, int>, long> entries;
};

// Hochster's formula: beta_{i,j}(R/I(G)) summed over |W| = j of the reduced
// homology rank of Ind(G_W) in degree j-i-1; beta_{0,0} = 1.
BettiTable graded_betti(const Graph& g, const Config& cfg = {});

// JSON: list of {i, j, beta} records sorted by (j, i).
std::string betti_to_json(const BettiTable& t);

struct RegularityResult {
  int reg = 0;
  std::vector<int> witness_vertices;  // W realizing the max, empty if reg 0
  int witness_degree = -1;            // t with rank H~_t(Ind(G_W)) > 0
};

RegularityResult oracle_reg(const Graph& g, const Config& cfg = {});

// Recompute the witness homology rank; used to re-verify results.
bool verify_regularity_witness(const Graph& g, const RegularityResult& r,
                               const Config& cfg = {});

}  // namespace dlg::hochster
