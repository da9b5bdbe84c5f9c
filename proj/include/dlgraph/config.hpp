#pragma once

namespace dlg {

// Enumeration caps. Exceeding a cap raises TooLarge; nothing is truncated
// silently. All caps are per-call configuration, not compile-time constants.
struct Config {
  int mis_vertex_cap = 24;      // maximal-independent-set enumeration
  int im_edge_cap = 40;         // induced-matching exhaustive search
  int pattern_vertex_cap = 24;  // induced-pattern / induced-cycle search
  int iso_vertex_cap = 16;      // generic isomorphism backtracking
  int vd_vertex_cap = 14;       // vertex-decomposability recursion
  int hochster_vertex_cap = 16; // Hochster subset enumeration
  long face_cap = 1L << 16;     // total faces of one simplicial complex
};

}  // namespace dlg
