#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <sstream>

#include "dlgraph/errors.hpp"
#include "dlgraph/hochster.hpp"
#include "dlgraph/randgen.hpp"
#include "dlgraph/toric.hpp"

using namespace dlg;
using namespace dlg::toric;

namespace {

// 4x5 worked pair: `wide` has a forbidden 3+3 bipartite pattern, `pruned`
// is the same graph minus three edges and decomposes cleanly.
BinaryMatrix wide_matrix() {
  return BinaryMatrix::from_rows({{1, 1, 1, 0, 0},
                                  {1, 1, 1, 0, 0},
                                  {0, 1, 1, 1, 1},
                                  {0, 1, 1, 1, 1}});
}

BinaryMatrix pruned_matrix() {
  return BinaryMatrix::from_rows({{1, 0, 0, 0, 1},
                                  {1, 0, 0, 1, 1},
                                  {0, 1, 0, 1, 1},
                                  {0, 0, 1, 1, 1}});
}

using CoordEdge = std::pair<GridCoord, GridCoord>;

std::set<CoordEdge> edge_coords(const HGraph& h) {
  std::set<CoordEdge> out;
  for (const auto& e : h.underlying.edges()) {
    GridCoord p = *h.underlying.label(e.first);
    GridCoord q = *h.underlying.label(e.second);
    if (q < p) std::swap(p, q);
    out.insert({p, q});
  }
  return out;
}

}  // namespace

TEST_CASE("matrix construction and validation") {
  CHECK_THROWS_AS(BinaryMatrix::from_rows({{1, 0}, {1}}), PreconditionFailed);
  CHECK_THROWS_AS(BinaryMatrix::from_rows({{2}}), PreconditionFailed);
  auto m = BinaryMatrix::from_rows({{1, 0}, {0, 1}});
  CHECK(m.rows == 2);
  CHECK(m.at(0, 1) == 0);
}

TEST_CASE("biadjacency respects the given vertex orders") {
  Graph g({0, 1, 2, 3}, {{0, 2}, {1, 3}});
  auto m = biadjacency(g, {0, 1}, {2, 3});
  CHECK(m.at(0, 0) == 1);
  CHECK(m.at(0, 1) == 0);
  CHECK(m.at(1, 1) == 1);
  CHECK_THROWS_AS(biadjacency(g, {0, 1, 2}, {3}), NotBipartite);
  CHECK_THROWS_AS(biadjacency(g, {0, 1}, {2}), PreconditionFailed);
}

TEST_CASE("reverse-lex sort reproduces the worked reordering") {
  auto sorted = doubly_revlex_sort(wide_matrix());
  auto want = BinaryMatrix::from_rows({{1, 0, 0, 1, 1},
                                       {1, 0, 0, 1, 1},
                                       {0, 1, 1, 1, 1},
                                       {0, 1, 1, 1, 1}});
  CHECK(sorted == want);
  // columns 2 and 4, and 3 and 5, trade places; rows stay put
  CHECK(sorted.col_perm == std::vector<int>{0, 3, 4, 1, 2});
  CHECK(sorted.row_perm == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("sorting is idempotent on a sorted matrix") {
  auto sorted = doubly_revlex_sort(pruned_matrix());
  CHECK(sorted == pruned_matrix());
}

TEST_CASE("staircase detection") {
  auto bad = BinaryMatrix::from_rows({{1, 1}, {1, 0}});
  auto check = gamma_free_check(bad);
  CHECK(!check.gamma_free);
  CHECK(check.witness_rows == std::pair<int, int>{1, 2});
  CHECK(check.witness_cols == std::pair<int, int>{1, 2});
  CHECK(gamma_free_check(pruned_matrix()).gamma_free);
  CHECK(gamma_free_check(doubly_revlex_sort(wide_matrix())).gamma_free);
}

TEST_CASE("H-graph of the all-ones square") {
  auto h = build_H(BinaryMatrix::from_rows({{1, 1}, {1, 1}}));
  CHECK(h.underlying.vertex_count() == 4);
  REQUIRE(h.underlying.edge_count() == 1);
  CHECK(edge_coords(h) == std::set<CoordEdge>{{{1, 2}, {2, 1}}});
}

TEST_CASE("H-graph of the sorted worked matrix has the 13 listed edges") {
  auto h = build_H(doubly_revlex_sort(wide_matrix()));
  std::set<CoordEdge> want = {
      {{1, 4}, {2, 1}}, {{1, 5}, {2, 1}}, {{1, 5}, {2, 4}}, {{1, 5}, {3, 4}},
      {{1, 5}, {4, 4}}, {{2, 5}, {3, 4}}, {{2, 5}, {4, 4}}, {{3, 3}, {4, 2}},
      {{3, 4}, {4, 2}}, {{3, 4}, {4, 3}}, {{3, 5}, {4, 2}}, {{3, 5}, {4, 3}},
      {{3, 5}, {4, 4}}};
  CHECK(edge_coords(h) == want);
  // down-left placement alone is not enough: (3,3) vs (2,4) has a zero corner
  int u = *h.underlying.vertex_with_label({3, 3});
  int v = *h.underlying.vertex_with_label({2, 4});
  CHECK(!h.underlying.adjacent(u, v));
}

TEST_CASE("decomposition of the pruned matrix") {
  auto h = build_H(pruned_matrix());
  auto cert = recognize_components(h);
  REQUIRE(cert.parts.size() == 2);
  CHECK(cert.isolated.size() == 5);
  std::multiset<std::pair<int, int>> shapes;
  for (const auto& p : cert.parts) shapes.insert({p.m, p.n});
  CHECK(shapes == std::multiset<std::pair<int, int>>{{2, 2}, {3, 2}});
  CHECK(verify_decomposition(h, cert));

  SUBCASE("verification notices tampering") {
    auto broken = cert;
    broken.isolated.pop_back();
    CHECK(!verify_decomposition(h, broken));
    auto swapped = cert;
    swapped.parts[0].m += 1;
    CHECK(!verify_decomposition(h, swapped));
  }
}

TEST_CASE("full pipeline on the pruned matrix") {
  std::vector<int> xs, ys;
  Graph g = matrix_to_graph(pruned_matrix(), xs, ys);
  auto rep = toric_regularity(g, xs, ys, {}, true);
  CHECK(rep.chordal_bipartite);
  CHECK(rep.k33e_free);
  CHECK(rep.gamma_free);
  CHECK(rep.regularity == 2);
  REQUIRE(rep.oracle_reg);
  CHECK(*rep.oracle_reg == 2);
  CHECK(rep.agree == true);
}

TEST_CASE("pipeline refusals carry witnesses") {
  SUBCASE("forbidden 3+3 bipartite pattern") {
    std::vector<int> xs, ys;
    Graph g = matrix_to_graph(wide_matrix(), xs, ys);
    CHECK_THROWS_AS(toric_regularity(g, xs, ys), NotK33eFree);
  }
  SUBCASE("long induced cycle") {
    Graph c6({0, 1, 2, 3, 4, 5},
             {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
    CHECK_THROWS_AS(toric_regularity(c6, {0, 2, 4}, {1, 3, 5}),
                    NotChordalBipartite);
  }
  SUBCASE("odd cycle") {
    Graph c5({0, 1, 2, 3, 4}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    CHECK_THROWS_AS(toric_regularity(c5, {0, 2}, {1, 3, 4}),
                    NotChordalBipartite);
  }
}

TEST_CASE("block extension harness") {
  // inside an all-ones matrix every legal extension succeeds
  auto ones = BinaryMatrix::from_rows({{1, 1}, {1, 1}, {1, 1}});
  CHECK(techy_lemma_check(ones, {1, 2}, {1, 2}, 3, 1));

  // the worked non-free matrix meets the hypotheses yet fails the conclusion
  auto sorted = doubly_revlex_sort(wide_matrix());
  CHECK(!techy_lemma_check(sorted, {3, 4}, {3, 4}, 2, 5));

  CHECK_THROWS_AS(techy_lemma_check(sorted, {1, 2}, {1, 2}, 3, 3),
                  PreconditionFailed);  // block has zeros
  CHECK_THROWS_AS(techy_lemma_check(ones, {1}, {1, 2}, 3, 1),
                  PreconditionFailed);  // block too thin
  CHECK_THROWS_AS(techy_lemma_check(ones, {1, 2}, {1, 2}, 1, 2),
                  PreconditionFailed);  // entry inside the block
}

TEST_CASE("matrix text round trip") {
  std::stringstream ss;
  write_matrix(ss, pruned_matrix());
  CHECK(read_matrix(ss) == pruned_matrix());
  std::istringstream commented("# block\n1 1\n1 1\n");
  CHECK(read_matrix(commented) == BinaryMatrix::from_rows({{1, 1}, {1, 1}}));
  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(read_matrix(empty), PreconditionFailed);
}

TEST_CASE("random pipelines agree with the oracle") {
  rand::Rng rng(42);
  for (int i = 0; i < 5; ++i) {
    BinaryMatrix mat;
    for (;;) {
      mat = rand::random_chordal_bipartite_matrix(4, 4, rng, true);
      long ones = std::count(mat.entries.begin(), mat.entries.end(), 1);
      if (ones <= 12) break;
    }
    std::vector<int> xs, ys;
    Graph g = matrix_to_graph(mat, xs, ys);
    auto rep = toric_regularity(g, xs, ys, {}, true);
    CHECK(rep.agree == true);
  }
}
