#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dlgraph/config.hpp"
#include "dlgraph/graph.hpp"

namespace dlg::toric {

// 0/1 biadjacency matrix with permutation tracking: row_perm[i] is the
// original index of the row currently in position i.
struct BinaryMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint8_t> entries;  // row-major
  std::vector<int> row_perm;
  std::vector<int> col_perm;

  static BinaryMatrix from_rows(const std::vector<std::vector<int>>& data);
  std::uint8_t at(int i, int j) const { return entries[i * cols + j]; }
  std::uint8_t& at(int i, int j) { return entries[i * cols + j]; }
  bool operator==(const BinaryMatrix& o) const {
    return rows == o.rows && cols == o.cols && entries == o.entries;
  }
};

// Rows indexed by the given X side (in order), columns by Y.
BinaryMatrix biadjacency(const Graph& g, const std::vector<int>& x_side,
                         const std::vector<int>& y_side);

// Reverse-lex comparison: scanning from the last coordinate, the first
// differing position decides and the smaller entry there makes the larger
// vector. Rows and columns are stably re-sorted in alternation until both
// are non-increasing; if that stalls short of gamma-freeness an exhaustive
// row-permutation search (sizes <= 8x8) is tried before OrderingFailed.
BinaryMatrix doubly_revlex_sort(const BinaryMatrix& mat);

struct GammaCheck {
  bool gamma_free = false;
  // 1-based witness positions when a [[1,1],[1,0]] submatrix exists
  std::pair<int, int> witness_rows{0, 0};
  std::pair<int, int> witness_cols{0, 0};
};

GammaCheck gamma_free_check(const BinaryMatrix& mat);

// Graph on the 1-entries of the matrix; {(a,d),(c,b)} is an edge iff a<c,
// b<d and the four corners of rows {a,c} x cols {b,d} are all 1. Vertex ids
// are row-major positions; labels carry the 1-based (row, col).
struct HGraph {
  Graph underlying;
  int rows = 0;
  int cols = 0;
};

HGraph build_H(const BinaryMatrix& mat);

struct DecompositionCert {
  struct Part {
    int m = 0;
    int n = 0;
    std::vector<int> vertices;           // H vertex ids
    std::map<int, GridCoord> iso;        // H vertex -> grid position in G(m,n)
  };
  std::vector<Part> parts;    // sorted by smallest contained vertex id
  std::vector<int> isolated;  // isolated H vertices
};

DecompositionCert recognize_components(const HGraph& h, const Config& cfg = {});

bool verify_decomposition(const HGraph& h, const DecompositionCert& cert);

struct PipelineReport {
  bool chordal_bipartite = false;
  bool k33e_free = false;
  bool gamma_free = false;
  BinaryMatrix sorted_matrix;
  HGraph h;
  DecompositionCert cert;
  int regularity = 0;
  std::optional<int> oracle_reg;
  std::optional<bool> agree;
};

// Full pipeline. Throws NotChordalBipartite / NotK33eFree /
// OrderingFailed / NotDecomposable; the formula is asserted only when every
// hypothesis check passed. When check_oracle is set and the isolated-free
// part of H fits the hochster cap, the result is cross-checked.
PipelineReport toric_regularity(const Graph& g, const std::vector<int>& x_side,
                                const std::vector<int>& y_side,
                                const Config& cfg = {},
                                bool check_oracle = false);

// Block-extension harness: with an all-ones block at R x C and an extra 1 at
// (s, t) satisfying the side conditions below, is the extended block
// (R + s) x (C + t) all ones? Indices are 1-based.
bool techy_lemma_check(const BinaryMatrix& mat, const std::set<int>& r_set,
                       const std::set<int>& c_set, int s, int t);

// One line per row, single-space-separated 0/1 entries.
BinaryMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const BinaryMatrix& mat);

// The bipartite graph whose biadjacency matrix this is; row vertices get ids
// 0..rows-1, column vertices rows..rows+cols-1.
Graph matrix_to_graph(const BinaryMatrix& mat, std::vector<int>& x_side,
                      std::vector<int>& y_side);

}  // namespace dlg::toric
