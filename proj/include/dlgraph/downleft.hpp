#pragma once

#include <iosfwd>
#include <memory>
#include <utility>
#include <vector>

#include "dlgraph/config.hpp"
#include "dlgraph/enumerate.hpp"
#include "dlgraph/graph.hpp"

namespace dlg::downleft {

// The tuple (m, n, a, b) describing which grid corners are cut away.
// a_i counts vertices removed from the left of row i, b_i is the first
// removed column on the right of row i.
struct DownLeftSpec {
  int m = 0;
  int n = 0;
  std::vector<int> a;
  std::vector<int> b;

  // Validates all inequalities; throws InvalidSpec naming the failed one.
  static DownLeftSpec create(int m, int n, std::vector<int> a,
                             std::vector<int> b);
  // The untrimmed grid G(m, n).
  static DownLeftSpec full(int m, int n);

  void validate() const;
  bool is_full() const;
  bool has_vertex(int row, int col) const;  // 1-based
  std::size_t vertex_count() const;

  // a_i + 1 < b_i everywhere and b_{i-1} > a_i + 1: no empty rows, no splits.
  bool is_normalized() const;

  bool operator==(const DownLeftSpec&) const = default;
};

// One connected piece of a normalized spec, with the bookkeeping needed to
// turn its local coordinates back into coordinates of the original grid.
struct NormalizedPart {
  DownLeftSpec spec;
  std::vector<int> orig_rows;  // local row i (1-based) -> original row
  int col_shift = 0;           // local col j -> original col j + col_shift

  GridCoord to_original(GridCoord local) const {
    return {orig_rows.at(local.row - 1), local.col + col_shift};
  }
};

struct NormalizedSpec {
  std::vector<NormalizedPart> parts;
};

// Vertex ids are (row-1)*n + (col-1) over the original grid; every vertex is
// labeled with its GridCoord.
Graph build_downleft(const DownLeftSpec& spec);

NormalizedSpec normalize(const DownLeftSpec& spec);

Graph strip_isolated(const Graph& g);

// Maximal independent sets of a normalized part, as the monotone staircases
// from x_{1,1} to x_{m,n}, in the part's local coordinates.
std::vector<std::vector<GridCoord>> lattice_path_independent_sets(
    const DownLeftSpec& part);

// x_{i,1} with i maximal such that a_i = 0 (local coordinates).
GridCoord shedding_vertex(const DownLeftSpec& part);

// One step of a replayable vertex-decomposability derivation. Children are
// shared: identical residual states appear once.
struct SheddingNode {
  GridCoord vertex;  // original grid coordinates
  bool isolated_shed = false;  // N[vertex] = {vertex}: both branches coincide
  std::shared_ptr<const SheddingNode> without_vertex;
  std::shared_ptr<const SheddingNode> without_neighborhood;  // null if isolated_shed
};

struct SheddingSequence {
  // Null root certifies an edgeless graph.
  std::shared_ptr<const SheddingNode> root;
  std::vector<GridCoord> preorder() const;
};

SheddingSequence vd_certificate(const DownLeftSpec& spec);

// Replays a certificate through the decomposability recursion on the actual
// graph: well-coveredness at every step, edgelessness at the leaves.
bool replay_shedding(const Graph& g, const SheddingSequence& seq,
                     const Config& cfg = {});

struct DownleftRegularity {
  int reg = 0;
  std::vector<std::pair<GridCoord, GridCoord>> witness;  // original coords
};

// Sum of induced matching numbers over normalized parts; for a full-grid
// part the result is asserted against the min{m-1, n-1} closed form.
DownleftRegularity downleft_regularity(const DownLeftSpec& spec,
                                       const Config& cfg = {});

// The staircase matching {x_{i,i+1}, x_{i+1,i}} for i < min(m, n).
std::vector<std::pair<GridCoord, GridCoord>> canonical_induced_matching(int m,
                                                                        int n);

// Text format: line "m n", line of m integers a, line of m integers b;
// '#' starts a comment.
DownLeftSpec parse_spec_text(std::istream& in);
void write_spec_text(std::ostream& out, const DownLeftSpec& spec);

}  // namespace dlg::downleft
