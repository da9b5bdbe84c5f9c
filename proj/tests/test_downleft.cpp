#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <sstream>

#include "dlgraph/downleft.hpp"
#include "dlgraph/enumerate.hpp"
#include "dlgraph/errors.hpp"

using namespace dlg;
using namespace dlg::downleft;

TEST_CASE("spec validation names the failed inequality") {
  CHECK_THROWS_WITH_AS(DownLeftSpec::create(2, 3, {1, 1}, {4, 4}),
                       doctest::Contains("a_1"), InvalidSpec);
  CHECK_THROWS_AS(DownLeftSpec::create(2, 3, {0, 2}, {4, 3}), InvalidSpec);
  CHECK_THROWS_AS(DownLeftSpec::create(2, 3, {0, 3}, {4, 4}), InvalidSpec);
  CHECK_THROWS_AS(DownLeftSpec::create(2, 3, {0, 0}, {1, 4}), InvalidSpec);
  CHECK_NOTHROW(DownLeftSpec::create(2, 3, {0, 1}, {3, 4}));
}

TEST_CASE("full grid sizes and edge rule") {
  Graph g = build_downleft(DownLeftSpec::full(3, 4));
  CHECK(g.vertex_count() == 12);
  CHECK(g.edge_count() == 18);
  // x_{1,2} ~ x_{2,1}: lower row, smaller column
  int u = *g.vertex_with_label({1, 2});
  int v = *g.vertex_with_label({2, 1});
  CHECK(g.adjacent(u, v));
  // same row or same column is never adjacent
  CHECK(!g.adjacent(*g.vertex_with_label({1, 1}), *g.vertex_with_label({1, 4})));
  CHECK(!g.adjacent(*g.vertex_with_label({1, 2}), *g.vertex_with_label({3, 2})));
}

TEST_CASE("corner-cut vertex count") {
  // 5x6 grid loses 11 vertices to the two cut corners
  auto spec = DownLeftSpec::create(5, 6, {0, 0, 1, 2, 2}, {5, 5, 6, 6, 7});
  CHECK(spec.vertex_count() == 19);
  CHECK(build_downleft(spec).vertex_count() == 19);
}

TEST_CASE("row trimming and splitting during normalization") {
  SUBCASE("full grid is already normalized") {
    auto parts = normalize(DownLeftSpec::full(3, 3)).parts;
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].spec == DownLeftSpec::full(3, 3));
    CHECK(parts[0].col_shift == 0);
    CHECK(parts[0].orig_rows == std::vector<int>{1, 2, 3});
  }
  SUBCASE("an empty row disappears") {
    auto spec = DownLeftSpec::create(3, 3, {0, 2, 2}, {3, 3, 4});
    auto parts = normalize(spec).parts;
    std::size_t total = 0;
    for (const auto& p : parts) total += p.spec.vertex_count();
    CHECK(total == spec.vertex_count());
    for (const auto& p : parts) CHECK(p.spec.is_normalized());
  }
  SUBCASE("a gap splits into two independent parts") {
    auto spec = DownLeftSpec::create(4, 4, {0, 0, 2, 2}, {3, 3, 5, 5});
    auto parts = normalize(spec).parts;
    REQUIRE(parts.size() == 2);
    // no edges may cross between parts in the original graph
    Graph g = build_downleft(spec);
    std::set<int> first;
    for (int r = 1; r <= parts[0].spec.m; ++r)
      for (int c = 1; c <= parts[0].spec.n; ++c)
        if (parts[0].spec.has_vertex(r, c))
          first.insert(*g.vertex_with_label(parts[0].to_original({r, c})));
    for (const auto& e : g.edges())
      CHECK(first.count(e.first) == first.count(e.second));
  }
  SUBCASE("coordinates map back to the original grid") {
    auto spec = DownLeftSpec::create(3, 3, {0, 2, 2}, {3, 3, 4});
    Graph g = build_downleft(spec);
    for (const auto& p : normalize(spec).parts)
      for (int r = 1; r <= p.spec.m; ++r)
        for (int c = 1; c <= p.spec.n; ++c)
          if (p.spec.has_vertex(r, c))
            CHECK(g.vertex_with_label(p.to_original({r, c})).has_value());
  }
}

TEST_CASE("lattice-path independent sets of the full grid") {
  auto paths = lattice_path_independent_sets(DownLeftSpec::full(3, 4));
  // binomial(5, 2) monotone staircases
  CHECK(paths.size() == 10);
  for (const auto& p : paths) CHECK(p.size() == 3 + 4 - 1);

  // they are exactly the maximal independent sets
  Graph g = build_downleft(DownLeftSpec::full(3, 4));
  auto mis = maximal_independent_sets(g);
  CHECK(mis.size() == paths.size());
  for (const auto& s : mis) CHECK(s.size() == 6);
}

TEST_CASE("G(1,n) has a single maximal independent set") {
  auto paths = lattice_path_independent_sets(DownLeftSpec::full(1, 3));
  REQUIRE(paths.size() == 1);
  CHECK(paths[0].size() == 3);
}

TEST_CASE("shedding vertex sits in the lowest full row of column one") {
  CHECK(shedding_vertex(DownLeftSpec::full(3, 3)) == GridCoord{3, 1});
  auto spec = DownLeftSpec::create(3, 3, {0, 1, 1}, {4, 4, 4});
  CHECK(shedding_vertex(spec) == GridCoord{1, 1});
}

TEST_CASE("shedding certificate replays through the recursion") {
  for (auto spec :
       {DownLeftSpec::full(3, 3), DownLeftSpec::full(2, 4),
        DownLeftSpec::create(3, 3, {0, 1, 2}, {3, 4, 4}),
        DownLeftSpec::create(4, 4, {0, 0, 2, 2}, {3, 3, 5, 5})}) {
    auto cert = vd_certificate(spec);
    CHECK(replay_shedding(build_downleft(spec), cert));
  }
}

TEST_CASE("replay refuses a wrong certificate") {
  auto cert = vd_certificate(DownLeftSpec::full(2, 2));
  // replaying against a different graph must fail
  CHECK(!replay_shedding(build_downleft(DownLeftSpec::full(3, 3)), cert));
}

TEST_CASE("regularity of full grids matches the closed form") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      auto r = downleft_regularity(DownLeftSpec::full(m, n));
      CHECK(r.reg == std::min(m - 1, n - 1));
      CHECK(verify_induced_matching(
          build_downleft(DownLeftSpec::full(m, n)),
          [&] {
            Graph g = build_downleft(DownLeftSpec::full(m, n));
            std::vector<std::pair<int, int>> ids;
            for (const auto& e : r.witness)
              ids.emplace_back(*g.vertex_with_label(e.first),
                               *g.vertex_with_label(e.second));
            return ids;
          }()));
    }
}

TEST_CASE("canonical staircase matching") {
  auto m = canonical_induced_matching(3, 4);
  REQUIRE(m.size() == 2);
  CHECK(m[0] == std::pair<GridCoord, GridCoord>{{1, 2}, {2, 1}});
  CHECK(m[1] == std::pair<GridCoord, GridCoord>{{2, 3}, {3, 2}});
  CHECK_THROWS_AS(canonical_induced_matching(1, 4), Degenerate);
}

TEST_CASE("regularity is additive over split parts") {
  auto spec = DownLeftSpec::create(4, 4, {0, 0, 2, 2}, {3, 3, 5, 5});
  auto r = downleft_regularity(spec);
  int total = 0;
  for (const auto& p : normalize(spec).parts)
    total += downleft_regularity(p.spec).reg;
  CHECK(r.reg == total);
}

TEST_CASE("isolated vertices do not change the edge set") {
  Graph g = build_downleft(DownLeftSpec::full(3, 3));
  Graph core = strip_isolated(g);
  CHECK(core.edge_count() == g.edge_count());
  CHECK(core.vertex_count() == g.vertex_count() - 2);
  CHECK(!core.has_vertex(*g.vertex_with_label({1, 1})));
  CHECK(!core.has_vertex(*g.vertex_with_label({3, 3})));
}

TEST_CASE("spec text round trip") {
  auto spec = DownLeftSpec::create(3, 3, {0, 1, 2}, {3, 4, 4});
  std::stringstream ss;
  write_spec_text(ss, spec);
  CHECK(parse_spec_text(ss) == spec);

  std::istringstream bad("2 3\n1 1\n4 4\n");
  CHECK_THROWS_AS(parse_spec_text(bad), InvalidSpec);
  std::istringstream commented("# grid\n2 2\n0 0\n3 3\n");
  CHECK(parse_spec_text(commented) == DownLeftSpec::full(2, 2));
}
