#pragma once

#include <utility>
#include <vector>

#include "dlgraph/config.hpp"
#include "dlgraph/graph.hpp"

namespace dlg {

// Complete enumeration via pivoted maximal-clique search on the complement.
// Output is canonically sorted (by size, then lexicographically).
std::vector<std::vector<int>> maximal_independent_sets(const Graph& g,
                                                       const Config& cfg = {});

struct WellCovered {
  bool well_covered = false;
  std::size_t common_size = 0;            // when well_covered
  std::vector<int> smaller, larger;       // two sets of different sizes otherwise
};

WellCovered is_well_covered(const Graph& g, const Config& cfg = {});

struct InducedMatching {
  int size = 0;
  std::vector<std::pair<int, int>> edges;  // the witness matching
};

// Exhaustive branch-and-bound over the edge conflict graph.
InducedMatching induced_matching_number(const Graph& g, const Config& cfg = {});

// True iff `edges` is an induced matching of g (endpoint-induced subgraph has
// no edges beyond the matching itself).
bool verify_induced_matching(const Graph& g,
                             const std::vector<std::pair<int, int>>& edges);

}  // namespace dlg
