#include "dlgraph/hochster.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "dlgraph/enumerate.hpp"
#include "exact_rank.hpp"
#include "masks.hpp"

namespace dlg::hochster {

using detail::Mask;

SimplicialComplex independence_complex(const Graph& g, const Config& cfg) {
  int n = static_cast<int>(g.vertex_count());
  if (n > cfg.hochster_vertex_cap)
    throw TooLarge("independence_complex: too many vertices",
                   cfg.hochster_vertex_cap);
  Config mis_cfg = cfg;
  mis_cfg.mis_vertex_cap = std::max(cfg.mis_vertex_cap, cfg.hochster_vertex_cap);
  SimplicialComplex c;
  c.ground = g.vertices();
  for (auto& s : maximal_independent_sets(g, mis_cfg)) c.facets.push_back(s);
  return c;
}

namespace {

// Faces grouped by dimension; level[t + 1] holds the dimension-t faces
// (level[0] is the empty face).
struct FaceLevels {
  std::vector<std::vector<Mask>> levels;
};

FaceLevels enumerate_faces(const std::vector<Mask>& facet_masks, int ground_size,
                           long face_cap) {
  std::unordered_set<Mask> seen;
  long count = 0;
  for (Mask f : facet_masks) {
    // all submasks of f, including the empty face
    Mask sub = f;
    for (;;) {
      if (seen.insert(sub).second && ++count > face_cap)
        throw TooLarge("simplicial complex has too many faces", face_cap);
      if (sub == 0) break;
      sub = (sub - 1) & f;
    }
  }
  if (seen.empty()) seen.insert(0);  // the {empty set} complex
  FaceLevels out;
  out.levels.assign(ground_size + 2, {});
  for (Mask f : seen) out.levels[std::popcount(f)].push_back(f);
  while (out.levels.size() > 1 && out.levels.back().empty())
    out.levels.pop_back();
  for (auto& lvl : out.levels) std::sort(lvl.begin(), lvl.end());
  return out;
}

// rank of the boundary map from dimension t faces to dimension t-1 faces
long boundary_rank(const FaceLevels& f, int t) {
  const auto& cols_faces = f.levels[t + 1];
  const auto& rows_faces = f.levels[t];
  if (cols_faces.empty() || rows_faces.empty()) return 0;
  std::unordered_map<Mask, int> row_index;
  for (std::size_t i = 0; i < rows_faces.size(); ++i)
    row_index[rows_faces[i]] = static_cast<int>(i);
  std::vector<std::vector<std::int64_t>> m(
      rows_faces.size(), std::vector<std::int64_t>(cols_faces.size(), 0));
  for (std::size_t j = 0; j < cols_faces.size(); ++j) {
    Mask face = cols_faces[j];
    int sign = 1;
    for (Mask rest = face; rest; rest &= rest - 1) {
      Mask vbit = rest & (~rest + 1);
      m[row_index.at(face ^ vbit)][j] = sign;
      sign = -sign;
    }
  }
  return detail::rank_fraction_free(std::move(m));
}

#ifndef NDEBUG
// composition of consecutive boundary maps must vanish
void check_boundary_square(const FaceLevels& f, int t) {
  const auto& a = f.levels[t];      // dim t-1
  const auto& b = f.levels[t + 1];  // dim t
  const auto& c = f.levels[t + 2];  // dim t+1
  if (a.size() * b.size() > 40000 || b.size() * c.size() > 40000) return;
  std::unordered_map<Mask, int> ai;
  for (std::size_t i = 0; i < a.size(); ++i) ai[a[i]] = static_cast<int>(i);
  auto column = [](Mask face, auto&& emit) {
    int sign = 1;
    for (Mask rest = face; rest; rest &= rest - 1) {
      Mask vbit = rest & (~rest + 1);
      emit(face ^ vbit, sign);
      sign = -sign;
    }
  };
  for (Mask top_face : c) {
    std::vector<long> acc(a.size(), 0);
    column(top_face, [&](Mask mid, int s1) {
      column(mid, [&](Mask low, int s2) { acc[ai.at(low)] += s1 * s2; });
    });
    for (long v : acc)
      if (v != 0) throw Error("boundary composition is nonzero");
  }
}
#endif

std::vector<long> homology_from_levels(const FaceLevels& f) {
  int top = static_cast<int>(f.levels.size()) - 2;  // max dimension
  std::vector<long> ranks(top + 2, 0);              // index t+1 = degree t
  std::vector<long> brank(top + 2, 0);              // rank of boundary_t
  for (int t = 0; t <= top; ++t) brank[t + 1] = boundary_rank(f, t);
#ifndef NDEBUG
  for (int t = 0; t + 1 <= top; ++t) check_boundary_square(f, t);
#endif
  long euler_faces = 0, euler_homology = 0;
  for (int t = -1; t <= top; ++t) {
    long faces = static_cast<long>(f.levels[t + 1].size());
    long out_rank = t >= 0 ? brank[t + 1] : 0;
    long in_rank = t + 1 <= top ? brank[t + 2] : 0;
    ranks[t + 1] = faces - out_rank - in_rank;
    long parity = (t % 2 == 0) ? 1 : -1;
    euler_faces += parity * faces;
    euler_homology += parity * ranks[t + 1];
  }
  if (euler_faces != euler_homology)
    throw Error("homology engine failed the Euler characteristic check");
  return ranks;
}

}  // namespace

std::vector<long> reduced_homology_ranks(const SimplicialComplex& c,
                                         const Config& cfg) {
  std::unordered_map<int, int> idx;
  for (std::size_t i = 0; i < c.ground.size(); ++i)
    idx[c.ground[i]] = static_cast<int>(i);
  if (c.ground.size() > 64)
    throw TooLarge("reduced_homology_ranks: ground set too large", 64);
  std::vector<Mask> facet_masks;
  for (const auto& f : c.facets) {
    Mask m = 0;
    for (int v : f) m |= detail::bit(idx.at(v));
    facet_masks.push_back(m);
  }
  auto levels = enumerate_faces(facet_masks, static_cast<int>(c.ground.size()),
                                cfg.face_cap);
  return homology_from_levels(levels);
}

namespace {

// Shared subset loop for Hochster's formula. Visits every W whose induced
// graph has minimum degree >= 1; any W with an isolated vertex yields a cone
// (contractible independence complex) and contributes nothing. W is walked
// in Gray-code order with the induced edge count maintained incrementally.
template <typename Visit>
void hochster_scan(const Graph& g, const Config& cfg, Visit&& visit) {
  int n = static_cast<int>(g.vertex_count());
  if (n > cfg.hochster_vertex_cap)
    throw TooLarge("hochster scan: too many vertices", cfg.hochster_vertex_cap);
  if (n == 0) return;
  auto adj = detail::adjacency_masks(g);
  Mask w = 0;
  long edges_in_w = 0;
  std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < total; ++k) {
    int v = std::countr_zero(k);  // Gray code flips bit v at step k
    Mask vb = detail::bit(v);
    if (w & vb) {
      w ^= vb;
      edges_in_w -= std::popcount(adj[v] & w);
    } else {
      edges_in_w += std::popcount(adj[v] & w);
      w ^= vb;
    }
    if (edges_in_w == 0) continue;
    bool cone = false;
    for (Mask rest = w; rest; rest &= rest - 1) {
      if (!(adj[std::countr_zero(rest)] & w)) {
        cone = true;
        break;
      }
    }
    if (cone) continue;
    auto facets = detail::mis_masks(adj, w);
    auto levels = enumerate_faces(facets, n, cfg.face_cap);
    auto ranks = homology_from_levels(levels);
    visit(w, ranks);
  }
}

std::vector<int> mask_to_ids(const Graph& g, Mask w) {
  std::vector<int> out;
  for (; w; w &= w - 1) out.push_back(g.vertices()[std::countr_zero(w)]);
  return out;
}

}  // namespace

BettiTable graded_betti(const Graph& g, const Config& cfg) {
  BettiTable t;
  t.entries[{0, 0}] = 1;
  hochster_scan(g, cfg, [&](Mask w, const std::vector<long>& ranks) {
    int j = std::popcount(w);
    for (int deg = -1; deg + 1 < static_cast<int>(ranks.size()); ++deg) {
      long r = ranks[deg + 1];
      if (r > 0) t.entries[{j - deg - 1, j}] += r;
    }
  });
  return t;
}

std::string betti_to_json(const BettiTable& t) {
  std::vector<std::pair<int, int>> keys;
  for (const auto& [ij, beta] : t.entries)
    if (beta != 0) keys.push_back(ij);
  std::sort(keys.begin(), keys.end(), [](auto a, auto b) {
    return std::pair(a.second, a.first) < std::pair(b.second, b.first);
  });
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (i) os << ',';
    os << "{\"beta\":" << t.entries.at(keys[i]) << ",\"i\":" << keys[i].first
       << ",\"j\":" << keys[i].second << '}';
  }
  os << ']';
  return os.str();
}

RegularityResult oracle_reg(const Graph& g, const Config& cfg) {
  RegularityResult best;
  best.reg = 0;
  hochster_scan(g, cfg, [&](Mask w, const std::vector<long>& ranks) {
    for (int deg = static_cast<int>(ranks.size()) - 2; deg >= -1; --deg) {
      if (ranks[deg + 1] > 0) {
        if (deg + 1 > best.reg) {
          best.reg = deg + 1;
          best.witness_vertices = mask_to_ids(g, w);
          best.witness_degree = deg;
        }
        break;
      }
    }
  });
  return best;
}

bool verify_regularity_witness(const Graph& g, const RegularityResult& r,
                               const Config& cfg) {
  if (r.reg == 0) return r.witness_vertices.empty();
  if (r.witness_degree + 1 != r.reg) return false;
  std::set<int> w(r.witness_vertices.begin(), r.witness_vertices.end());
  auto complex = independence_complex(g.induced(w), cfg);
  auto ranks = reduced_homology_ranks(complex, cfg);
  int idx = r.witness_degree + 1;
  return idx >= 0 && idx < static_cast<int>(ranks.size()) && ranks[idx] > 0;
}

}  // namespace dlg::hochster
