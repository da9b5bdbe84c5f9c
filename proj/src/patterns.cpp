#include "dlgraph/patterns.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "masks.hpp"

namespace dlg {

PatternKind PatternKind::induced_cycle_at_least(int len) {
  if (len < 6)
    throw Error("induced cycle pattern requires length >= 6");
  return {InducedCycleAtLeast, len};
}

Graph pattern_graph(const PatternKind& p) {
  switch (p.kind) {
    case PatternKind::C5:
      return Graph({0, 1, 2, 3, 4},
                   {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    case PatternKind::K33MinusE: {
      std::vector<std::pair<int, int>> es;
      for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j)
          if (!(i == 2 && j == 5)) es.emplace_back(i, j);
      return Graph({0, 1, 2, 3, 4, 5}, std::move(es));
    }
    case PatternKind::InducedCycleAtLeast: {
      std::vector<int> vs(p.min_len);
      std::vector<std::pair<int, int>> es;
      for (int i = 0; i < p.min_len; ++i) {
        vs[i] = i;
        es.emplace_back(i, (i + 1) % p.min_len);
      }
      return Graph(std::move(vs), std::move(es));
    }
  }
  throw Error("unknown pattern kind");
}

namespace {

// Induced-subgraph embedding of a small fixed pattern, by backtracking.
// Pattern vertices are visited in an order where each one after the first
// has an already-placed neighbor, so candidates come from neighbor lists.
struct EmbedSearch {
  const Graph& host;
  std::vector<std::vector<bool>> pat_adj;
  std::vector<int> order;      // pattern vertices in placement order
  std::vector<int> attach;     // index into `order` of a placed neighbor
  std::vector<int> image;      // image[pattern vertex] or -1

  EmbedSearch(const Graph& host, const Graph& pattern) : host(host) {
    int k = static_cast<int>(pattern.vertex_count());
    pat_adj.assign(k, std::vector<bool>(k, false));
    for (auto [u, v] : pattern.edges()) pat_adj[u][v] = pat_adj[v][u] = true;
    std::vector<bool> placed(k, false);
    order.push_back(0);
    attach.push_back(-1);
    placed[0] = true;
    while (static_cast<int>(order.size()) < k) {
      for (int v = 0; v < k; ++v) {
        if (placed[v]) continue;
        for (std::size_t oi = 0; oi < order.size(); ++oi) {
          if (pat_adj[v][order[oi]]) {
            order.push_back(v);
            attach.push_back(static_cast<int>(oi));
            placed[v] = true;
            goto next;
          }
        }
      }
      throw Error("pattern must be connected");
    next:;
    }
    image.assign(k, -1);
  }

  bool consistent(int pv, int hv) const {
    for (std::size_t oi = 0; oi < order.size(); ++oi) {
      int qv = order[oi];
      if (image[qv] < 0 || qv == pv) continue;
      if (image[qv] == hv) return false;
      if (host.adjacent(hv, image[qv]) != pat_adj[pv][qv]) return false;
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (depth == order.size()) return true;
    int pv = order[depth];
    if (depth == 0) {
      for (int hv : host.vertices()) {
        image[pv] = hv;
        if (search(depth + 1)) return true;
      }
    } else {
      int anchor = image[order[attach[depth]]];
      for (int hv : host.neighbors(anchor)) {
        if (!consistent(pv, hv)) continue;
        image[pv] = hv;
        if (search(depth + 1)) return true;
      }
    }
    image[pv] = -1;
    return false;
  }
};

// Shortest induced cycle of length >= min_len, or empty. Canonical DFS:
// the start vertex is the smallest on the cycle; interior vertices may be
// adjacent only to their predecessor.
std::vector<int> shortest_long_induced_cycle(const Graph& g, int min_len) {
  int n = static_cast<int>(g.vertex_count());
  for (int len = min_len; len <= n; ++len) {
    std::vector<int> path;
    std::vector<int> found;
    auto extend = [&](auto&& self) -> bool {
      if (static_cast<int>(path.size()) == len) {
        if (g.adjacent(path.back(), path.front())) {
          found = path;
          return true;
        }
        return false;
      }
      int last = path.back();
      bool closing = static_cast<int>(path.size()) == len - 1;
      for (int w : g.neighbors(last)) {
        if (w <= path.front()) continue;
        bool ok = true;
        for (std::size_t i = 0; ok && i + 1 < path.size(); ++i) {
          if (path[i] == w) ok = false;
          // chord check: w may touch only `last` (and the start when closing)
          else if (g.adjacent(w, path[i]) && !(closing && i == 0)) ok = false;
        }
        if (closing && !g.adjacent(w, path.front())) ok = false;
        if (!ok) continue;
        path.push_back(w);
        if (self(self)) return true;
        path.pop_back();
      }
      return false;
    };
    for (int s : g.vertices()) {
      path = {s};
      if (extend(extend)) return found;
    }
  }
  return {};
}

}  // namespace

std::optional<PatternEmbedding> find_induced_pattern(const Graph& g,
                                                     const PatternKind& p,
                                                     const Config& cfg) {
  if (static_cast<int>(g.vertex_count()) > cfg.pattern_vertex_cap)
    throw TooLarge("find_induced_pattern: too many vertices",
                   cfg.pattern_vertex_cap);
  if (p.kind == PatternKind::InducedCycleAtLeast) {
    auto cyc = shortest_long_induced_cycle(g, p.min_len);
    if (cyc.empty()) return std::nullopt;
    PatternKind exact = p;
    exact.min_len = static_cast<int>(cyc.size());
    return PatternEmbedding{exact, cyc};
  }
  Graph pat = pattern_graph(p);
  EmbedSearch s(g, pat);
  if (!s.search(0)) return std::nullopt;
  return PatternEmbedding{p, s.image};
}

bool verify_embedding(const Graph& g, const PatternEmbedding& e) {
  Graph pat = pattern_graph(e.pattern);
  if (e.image.size() != pat.vertex_count()) return false;
  std::set<int> img(e.image.begin(), e.image.end());
  if (img.size() != e.image.size()) return false;
  for (int v : e.image)
    if (!g.has_vertex(v)) return false;
  int k = static_cast<int>(e.image.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(e.image[i], e.image[j]) != pat.adjacent(i, j))
        return false;
  return true;
}

ChordalBipartite is_chordal_bipartite(const Graph& g, const Config& cfg) {
  if (static_cast<int>(g.vertex_count()) > cfg.pattern_vertex_cap)
    throw TooLarge("is_chordal_bipartite: too many vertices",
                   cfg.pattern_vertex_cap);
  ChordalBipartite res;
  std::unordered_map<int, int> color;
  std::unordered_map<int, int> parent;
  std::unordered_map<int, int> depth;
  for (int root : g.vertices()) {
    if (color.count(root)) continue;
    color[root] = 0;
    parent[root] = -1;
    depth[root] = 0;
    std::vector<int> queue{root};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int u : g.neighbors(v)) {
        if (!color.count(u)) {
          color[u] = 1 - color[v];
          parent[u] = v;
          depth[u] = depth[v] + 1;
          queue.push_back(u);
        } else if (color[u] == color[v]) {
          // odd cycle: tree paths from v and u up to their meeting vertex,
          // closed by the edge {v,u}
          std::vector<int> pv{v}, pu{u};
          while (depth[pv.back()] > depth[pu.back()])
            pv.push_back(parent[pv.back()]);
          while (depth[pu.back()] > depth[pv.back()])
            pu.push_back(parent[pu.back()]);
          while (pv.back() != pu.back()) {
            pv.push_back(parent[pv.back()]);
            pu.push_back(parent[pu.back()]);
          }
          res.odd_cycle = pv;
          pu.pop_back();
          for (auto it = pu.rbegin(); it != pu.rend(); ++it)
            res.odd_cycle.push_back(*it);
          return res;
        }
      }
    }
  }
  auto cyc = find_induced_pattern(g, PatternKind::induced_cycle_at_least(6), cfg);
  if (cyc) {
    res.long_cycle = cyc;
    return res;
  }
  res.ok = true;
  for (const auto& [v, c] : color)
    (c == 0 ? res.bipartition.first : res.bipartition.second).push_back(v);
  std::sort(res.bipartition.first.begin(), res.bipartition.first.end());
  std::sort(res.bipartition.second.begin(), res.bipartition.second.end());
  return res;
}

namespace {

bool iso_search(const Graph& g1, const Graph& g2, const std::vector<int>& order,
                std::size_t depth, std::map<int, int>& map,
                std::set<int>& used) {
  if (depth == order.size()) return true;
  int v = order[depth];
  for (int w : g2.vertices()) {
    if (used.count(w)) continue;
    if (g1.degree(v) != g2.degree(w)) continue;
    bool ok = true;
    for (const auto& [pv, pw] : map) {
      if (g1.adjacent(v, pv) != g2.adjacent(w, pw)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    map[v] = w;
    used.insert(w);
    if (iso_search(g1, g2, order, depth + 1, map, used)) return true;
    map.erase(v);
    used.erase(w);
  }
  return false;
}

}  // namespace

std::optional<std::map<int, int>> graphs_isomorphic(const Graph& g1,
                                                    const Graph& g2,
                                                    const Config& cfg) {
  if (static_cast<int>(g1.vertex_count()) > cfg.iso_vertex_cap ||
      static_cast<int>(g2.vertex_count()) > cfg.iso_vertex_cap)
    throw TooLarge("graphs_isomorphic: too many vertices", cfg.iso_vertex_cap);
  if (g1.vertex_count() != g2.vertex_count() ||
      g1.edge_count() != g2.edge_count())
    return std::nullopt;
  auto degseq = [](const Graph& g) {
    std::vector<std::size_t> d;
    for (int v : g.vertices()) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degseq(g1) != degseq(g2)) return std::nullopt;
  std::vector<int> order(g1.vertices());
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return g1.degree(a) > g1.degree(b);
  });
  std::map<int, int> map;
  std::set<int> used;
  if (iso_search(g1, g2, order, 0, map, used)) return map;
  return std::nullopt;
}

namespace {

struct VdSearch {
  std::vector<detail::Mask> adj;
  std::vector<detail::Mask> closed;
  std::unordered_map<detail::Mask, signed char> memo;  // 1 true, 2 false
  std::unordered_map<detail::Mask, int> choice;        // shedding index

  bool well_covered(detail::Mask u) const {
    auto sets = detail::mis_masks(adj, u);
    if (sets.empty()) return true;
    int sz = std::popcount(sets.front());
    for (auto s : sets)
      if (std::popcount(s) != sz) return false;
    return true;
  }

  bool vd(detail::Mask u) {
    auto it = memo.find(u);
    if (it != memo.end()) return it->second == 1;
    bool result = false;
    if (detail::edgeless(adj, u)) {
      result = true;
    } else if (well_covered(u)) {
      for (detail::Mask m = u; m; m &= m - 1) {
        int v = std::countr_zero(m);
        if (vd(u & ~detail::bit(v)) && vd(u & ~closed[v])) {
          choice[u] = v;
          result = true;
          break;
        }
      }
    }
    memo[u] = result ? 1 : 2;
    return result;
  }

  void emit(detail::Mask u, std::vector<int>& out) const {
    if (detail::edgeless(adj, u)) return;
    int v = choice.at(u);
    out.push_back(v);
    emit(u & ~detail::bit(v), out);
    emit(u & ~closed[v], out);
  }
};

}  // namespace

VdBruteForce is_vertex_decomposable_bruteforce(const Graph& g,
                                               const Config& cfg) {
  int n = static_cast<int>(g.vertex_count());
  if (n > cfg.vd_vertex_cap)
    throw TooLarge("is_vertex_decomposable_bruteforce: too many vertices",
                   cfg.vd_vertex_cap);
  VdSearch s;
  s.adj = detail::adjacency_masks(g);
  s.closed.resize(n);
  for (int i = 0; i < n; ++i) s.closed[i] = s.adj[i] | detail::bit(i);
  detail::Mask universe = n == 0 ? 0 : (detail::bit(n) - 1);
  VdBruteForce res;
  res.vertex_decomposable = s.vd(universe);
  if (res.vertex_decomposable) {
    std::vector<int> idx;
    s.emit(universe, idx);
    for (int i : idx) res.shedding.push_back(g.vertices()[i]);
  }
  return res;
}

}  // namespace dlg
