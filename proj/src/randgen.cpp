#include "dlgraph/randgen.hpp"

#include <algorithm>
#include <numeric>

#include "dlgraph/errors.hpp"
#include "dlgraph/patterns.hpp"

namespace dlg::rand {

Graph random_graph(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<int> verts(n);
  std::iota(verts.begin(), verts.end(), 0);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(verts, edges, {});
}

downleft::DownLeftSpec random_downleft_spec(int max_m, int max_n, Rng& rng,
                                  int max_vertices) {
  std::uniform_int_distribution<int> md(1, max_m), nd(1, max_n);
  // gentle staircase steps; uniform draws cut away nearly the whole grid
  std::uniform_int_distribution<int> step(0, 5);
  auto bump = [&] { int s = step(rng); return s < 3 ? 0 : (s < 5 ? 1 : 2); };
  for (;;) {
    int m = std::max(md(rng), md(rng));  // skew away from degenerate 1-row
    int n = std::max(nd(rng), nd(rng));
    std::vector<int> a(m), b(m);
    a[0] = 0;
    for (int i = 1; i < m; ++i) a[i] = std::min(a[i - 1] + bump(), n - 1);
    b[m - 1] = n + 1;
    for (int i = m - 2; i >= 0; --i) b[i] = std::max(b[i + 1] - bump(), 2);
    try {
      auto spec = downleft::DownLeftSpec::create(m, n, a, b);
      if (max_vertices > 0 &&
          static_cast<int>(spec.vertex_count()) > max_vertices)
        continue;
      return spec;
    } catch (const InvalidSpec&) {
      continue;
    }
  }
}

toric::BinaryMatrix random_chordal_bipartite_matrix(int max_rows, int max_cols,
                                                    Rng& rng, bool k33e_free) {
  std::uniform_int_distribution<int> rd(2, max_rows), cd(2, max_cols);
  std::uniform_real_distribution<double> pd(0.3, 0.7);
  for (;;) {
    int r = rd(rng), c = cd(rng);
    double p = pd(rng);
    std::bernoulli_distribution coin(p);
    std::vector<std::vector<int>> rows(r, std::vector<int>(c));
    for (auto& row : rows)
      for (int& v : row) v = coin(rng) ? 1 : 0;
    auto mat = toric::BinaryMatrix::from_rows(rows);
    std::vector<int> xs, ys;
    Graph g = toric::matrix_to_graph(mat, xs, ys);
    if (!is_chordal_bipartite(g).ok) continue;
    if (k33e_free && find_induced_pattern(g, PatternKind::k33_minus_e()))
      continue;
    return mat;
  }
}

}  // namespace dlg::rand
