#include "dlgraph/enumerate.hpp"

#include <algorithm>
#include <bit>

#include "masks.hpp"

namespace dlg {

namespace detail {

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.vertex_count(), 0);
  for (auto [u, v] : g.edges()) {
    int iu = g.index_of(u), iv = g.index_of(v);
    adj[iu] |= bit(iv);
    adj[iv] |= bit(iu);
  }
  return adj;
}

namespace {

// Pivoted Bron-Kerbosch on the complement: cliques of the complement are
// exactly the independent sets of g.
void expand(const std::vector<Mask>& comp, Mask r, Mask p, Mask x,
            std::vector<Mask>& out) {
  if (!p && !x) {
    out.push_back(r);
    return;
  }
  Mask px = p | x;
  int pivot = -1;
  int best = -1;
  for (Mask m = px; m; m &= m - 1) {
    int u = std::countr_zero(m);
    int cnt = std::popcount(p & comp[u]);
    if (cnt > best) {
      best = cnt;
      pivot = u;
    }
  }
  for (Mask cand = p & ~comp[pivot]; cand; cand &= cand - 1) {
    int v = std::countr_zero(cand);
    expand(comp, r | bit(v), p & comp[v], x & comp[v], out);
    p &= ~bit(v);
    x |= bit(v);
  }
}

}  // namespace

std::vector<Mask> mis_masks(const std::vector<Mask>& adj, Mask universe) {
  int n = static_cast<int>(adj.size());
  std::vector<Mask> comp(n, 0);
  for (int i = 0; i < n; ++i)
    if (universe >> i & 1) comp[i] = universe & ~adj[i] & ~bit(i);
  std::vector<Mask> out;
  expand(comp, 0, universe, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

std::vector<std::vector<int>> maximal_independent_sets(const Graph& g,
                                                       const Config& cfg) {
  int n = static_cast<int>(g.vertex_count());
  if (n > cfg.mis_vertex_cap)
    throw TooLarge("maximal_independent_sets: too many vertices",
                   cfg.mis_vertex_cap);
  auto adj = detail::adjacency_masks(g);
  detail::Mask universe = n == 64 ? ~detail::Mask{0} : (detail::bit(n) - 1);
  auto masks = detail::mis_masks(adj, universe);
  std::vector<std::vector<int>> out;
  out.reserve(masks.size());
  for (auto m : masks) {
    std::vector<int> s;
    for (; m; m &= m - 1) s.push_back(g.vertices()[std::countr_zero(m)]);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

WellCovered is_well_covered(const Graph& g, const Config& cfg) {
  auto sets = maximal_independent_sets(g, cfg);
  WellCovered res;
  if (sets.empty()) {  // empty graph: vacuously well-covered
    res.well_covered = true;
    return res;
  }
  // sets are sorted by size; compare the extremes
  if (sets.front().size() == sets.back().size()) {
    res.well_covered = true;
    res.common_size = sets.front().size();
  } else {
    res.smaller = sets.front();
    res.larger = sets.back();
  }
  return res;
}

bool verify_induced_matching(const Graph& g,
                             const std::vector<std::pair<int, int>>& edges) {
  std::set<int> endpoints;
  for (auto [u, v] : edges) {
    if (!g.adjacent(u, v)) return false;
    if (!endpoints.insert(u).second) return false;
    if (!endpoints.insert(v).second) return false;
  }
  Graph sub = g.induced(endpoints);
  if (sub.edge_count() != edges.size()) return false;
  for (auto [u, v] : edges) {
    auto e = std::minmax(u, v);
    if (!std::binary_search(sub.edges().begin(), sub.edges().end(),
                            std::make_pair(e.first, e.second)))
      return false;
  }
  return true;
}

namespace {

// Branch and bound for a maximum independent set in the edge conflict graph.
// Conflict masks are arrays of 64-bit words so caps above 64 edges work.
struct ImSearch {
  int m = 0;
  int words = 0;
  std::vector<std::uint64_t> conflict;  // m rows of `words` words
  std::vector<int> best;
  std::vector<int> cur;

  const std::uint64_t* row(int e) const { return conflict.data() + e * words; }

  static int popcount_words(const std::uint64_t* w, int n) {
    int c = 0;
    for (int i = 0; i < n; ++i) c += std::popcount(w[i]);
    return c;
  }

  void rec(std::vector<std::uint64_t> cand) {
    int avail = popcount_words(cand.data(), words);
    if (static_cast<int>(cur.size()) + avail <=
        static_cast<int>(best.size()))
      return;
    // first available edge
    int e = -1;
    for (int i = 0; i < words; ++i) {
      if (cand[i]) {
        e = i * 64 + std::countr_zero(cand[i]);
        break;
      }
    }
    if (e < 0) {
      if (cur.size() > best.size()) best = cur;
      return;
    }
    // include e
    auto with = cand;
    with[e / 64] &= ~(std::uint64_t{1} << (e % 64));
    for (int i = 0; i < words; ++i) with[i] &= ~row(e)[i];
    cur.push_back(e);
    rec(std::move(with));
    cur.pop_back();
    // exclude e
    cand[e / 64] &= ~(std::uint64_t{1} << (e % 64));
    rec(std::move(cand));
  }
};

}  // namespace

InducedMatching induced_matching_number(const Graph& g, const Config& cfg) {
  const auto& es = g.edges();
  int m = static_cast<int>(es.size());
  if (m > cfg.im_edge_cap)
    throw TooLarge("induced_matching_number: too many edges", cfg.im_edge_cap);
  InducedMatching res;
  if (m == 0) return res;
  ImSearch s;
  s.m = m;
  s.words = (m + 63) / 64;
  s.conflict.assign(static_cast<std::size_t>(m) * s.words, 0);
  auto set_conflict = [&](int a, int b) {
    s.conflict[a * s.words + b / 64] |= std::uint64_t{1} << (b % 64);
    s.conflict[b * s.words + a / 64] |= std::uint64_t{1} << (a % 64);
  };
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      auto [u1, v1] = es[a];
      auto [u2, v2] = es[b];
      bool clash = u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2 ||
                   g.adjacent(u1, u2) || g.adjacent(u1, v2) ||
                   g.adjacent(v1, u2) || g.adjacent(v1, v2);
      if (clash) set_conflict(a, b);
    }
  }
  std::vector<std::uint64_t> all(s.words, 0);
  for (int e = 0; e < m; ++e) all[e / 64] |= std::uint64_t{1} << (e % 64);
  s.rec(std::move(all));
  res.size = static_cast<int>(s.best.size());
  for (int e : s.best) res.edges.push_back(es[e]);
  std::sort(res.edges.begin(), res.edges.end());
  return res;
}

}  // namespace dlg
