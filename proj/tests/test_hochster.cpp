#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dlgraph/downleft.hpp"
#include "dlgraph/errors.hpp"
#include "dlgraph/hochster.hpp"

using namespace dlg;
using namespace dlg::hochster;

namespace {

Graph cycle(int n) {
  std::vector<int> verts(n);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    verts[i] = i;
    edges.emplace_back(i, (i + 1) % n);
  }
  return Graph(verts, edges, {});
}

long beta(const BettiTable& t, int i, int j) {
  auto it = t.entries.find({i, j});
  return it == t.entries.end() ? 0 : it->second;
}

}  // namespace

TEST_CASE("independence complex facets are the maximal independent sets") {
  auto c = independence_complex(cycle(4));
  REQUIRE(c.facets.size() == 2);
  CHECK(c.facets[0] == std::vector<int>{0, 2});
  CHECK(c.facets[1] == std::vector<int>{1, 3});
}

TEST_CASE("reduced homology of small complexes") {
  SUBCASE("full simplex is contractible") {
    SimplicialComplex s{{0, 1, 2}, {{0, 1, 2}}};
    for (long r : reduced_homology_ranks(s)) CHECK(r == 0);
  }
  SUBCASE("two points have one reduced class in degree 0") {
    SimplicialComplex s{{0, 1}, {{0}, {1}}};
    auto ranks = reduced_homology_ranks(s);
    CHECK(ranks[1] == 1);  // degree 0 lives at index 1
  }
  SUBCASE("empty complex has a class in degree -1") {
    SimplicialComplex s{{0, 1}, {}};
    auto ranks = reduced_homology_ranks(s);
    CHECK(ranks[0] == 1);
  }
  SUBCASE("hollow triangle is a circle") {
    SimplicialComplex s{{0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}}};
    auto ranks = reduced_homology_ranks(s);
    CHECK(ranks[1] == 0);
    CHECK(ranks[2] == 1);
  }
  SUBCASE("independence complex of the pentagon is a circle") {
    auto ranks = reduced_homology_ranks(independence_complex(cycle(5)));
    CHECK(ranks[2] == 1);
  }
}

TEST_CASE("graded Betti numbers via the subset scan") {
  SUBCASE("path on three vertices") {
    Graph p3({0, 1, 2}, {{0, 1}, {1, 2}});
    auto t = graded_betti(p3);
    CHECK(beta(t, 0, 0) == 1);
    CHECK(beta(t, 1, 2) == 2);
    CHECK(beta(t, 2, 3) == 1);
    CHECK(t.entries.size() == 3);
  }
  SUBCASE("single edge") {
    auto t = graded_betti(Graph({0, 1}, {{0, 1}}));
    CHECK(beta(t, 0, 0) == 1);
    CHECK(beta(t, 1, 2) == 1);
    CHECK(t.entries.size() == 2);
  }
  SUBCASE("square: two disjoint diagonally-placed generators interact") {
    auto t = graded_betti(cycle(4));
    CHECK(beta(t, 0, 0) == 1);
    CHECK(beta(t, 1, 2) == 4);
    // the 4-cycle complement is two disjoint edges; top betti in degree 4
    CHECK(beta(t, 3, 4) == 1);
  }
  SUBCASE("json serialization is sorted by (j, i)") {
    Graph p3({0, 1, 2}, {{0, 1}, {1, 2}});
    CHECK(betti_to_json(graded_betti(p3)) ==
          "[{\"beta\":1,\"i\":0,\"j\":0},{\"beta\":2,\"i\":1,\"j\":2},"
          "{\"beta\":1,\"i\":2,\"j\":3}]");
  }
}

TEST_CASE("regularity oracle") {
  SUBCASE("edgeless graphs have regularity zero") {
    CHECK(oracle_reg(Graph({0, 1, 2}, {})).reg == 0);
    CHECK(oracle_reg(Graph({}, {})).reg == 0);
  }
  SUBCASE("single edge") { CHECK(oracle_reg(Graph({0, 1}, {{0, 1}})).reg == 1); }
  SUBCASE("pentagon reaches two via its circle homology") {
    auto r = oracle_reg(cycle(5));
    CHECK(r.reg == 2);
    CHECK(r.witness_vertices.size() == 5);
    CHECK(r.witness_degree == 1);
    CHECK(verify_regularity_witness(cycle(5), r));
  }
  SUBCASE("witness verification rejects tampering") {
    auto r = oracle_reg(cycle(5));
    r.witness_degree = 0;
    CHECK(!verify_regularity_witness(cycle(5), r));
  }
  SUBCASE("isolated vertices never change the answer") {
    Graph with_iso({0, 1, 2, 3, 7}, {{0, 1}, {1, 2}, {2, 3}});
    Graph without({0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(oracle_reg(with_iso).reg == oracle_reg(without).reg);
  }
  SUBCASE("vertex cap is enforced") {
    Config tight;
    tight.hochster_vertex_cap = 4;
    CHECK_THROWS_AS(oracle_reg(cycle(5), tight), TooLarge);
  }
}

TEST_CASE("closed form for small full grids") {
  using downleft::DownLeftSpec;
  for (int m = 2; m <= 3; ++m)
    for (int n = 2; n <= 3; ++n) {
      Graph g = downleft::build_downleft(DownLeftSpec::full(m, n));
      CHECK(oracle_reg(downleft::strip_isolated(g)).reg ==
            std::min(m - 1, n - 1));
    }
}
