#include "dlgraph/downleft.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

namespace dlg::downleft {

DownLeftSpec DownLeftSpec::create(int m, int n, std::vector<int> a,
                                  std::vector<int> b) {
  DownLeftSpec s{m, n, std::move(a), std::move(b)};
  s.validate();
  return s;
}

DownLeftSpec DownLeftSpec::full(int m, int n) {
  return create(m, n, std::vector<int>(m, 0), std::vector<int>(m, n + 1));
}

void DownLeftSpec::validate() const {
  if (m < 1 || n < 1) throw InvalidSpec("m and n must be positive");
  if (static_cast<int>(a.size()) != m || static_cast<int>(b.size()) != m)
    throw InvalidSpec("a and b must have length m");
  if (a[0] != 0) throw InvalidSpec("a_1 = 0 is required");
  if (b[m - 1] != n + 1) throw InvalidSpec("b_m = n+1 is required");
  if (b[0] <= 1) throw InvalidSpec("b_1 > 1 is required");
  if (a[m - 1] >= n) throw InvalidSpec("a_m < n is required");
  for (int i = 1; i < m; ++i) {
    if (a[i] < a[i - 1])
      throw InvalidSpec("a must be non-decreasing (a_" + std::to_string(i + 1) +
                        " < a_" + std::to_string(i) + ")");
    if (b[i] < b[i - 1])
      throw InvalidSpec("b must be non-decreasing (b_" + std::to_string(i + 1) +
                        " < b_" + std::to_string(i) + ")");
  }
  for (int i = 1; i + 1 < m; ++i) {
    if (a[i] >= b[i])
      throw InvalidSpec("a_i < b_i violated at i = " + std::to_string(i + 1));
  }
  for (int i = 0; i < m; ++i) {
    if (a[i] < 0) throw InvalidSpec("a entries must be non-negative");
    if (a[i] > n) throw InvalidSpec("a entries must be at most n");
    if (b[i] > n + 1) throw InvalidSpec("b entries must be at most n+1");
  }
}

bool DownLeftSpec::is_full() const {
  for (int i = 0; i < m; ++i)
    if (a[i] != 0 || b[i] != n + 1) return false;
  return true;
}

bool DownLeftSpec::has_vertex(int row, int col) const {
  if (row < 1 || row > m || col < 1 || col > n) return false;
  return col > a[row - 1] && col < b[row - 1];
}

std::size_t DownLeftSpec::vertex_count() const {
  std::size_t c = 0;
  for (int i = 0; i < m; ++i)
    c += static_cast<std::size_t>(std::max(0, b[i] - a[i] - 1));
  return c;
}

bool DownLeftSpec::is_normalized() const {
  for (int i = 0; i < m; ++i)
    if (a[i] + 1 >= b[i]) return false;
  for (int i = 1; i < m; ++i)
    if (b[i - 1] <= a[i] + 1) return false;
  return true;
}

Graph build_downleft(const DownLeftSpec& spec) {
  spec.validate();
  std::vector<int> verts;
  std::map<int, GridCoord> labels;
  auto id = [&](int i, int j) { return (i - 1) * spec.n + (j - 1); };
  std::vector<GridCoord> coords;
  for (int i = 1; i <= spec.m; ++i) {
    for (int j = 1; j <= spec.n; ++j) {
      if (!spec.has_vertex(i, j)) continue;
      verts.push_back(id(i, j));
      labels[id(i, j)] = {i, j};
      coords.push_back({i, j});
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t p = 0; p < coords.size(); ++p) {
    for (std::size_t q = p + 1; q < coords.size(); ++q) {
      auto [i, j] = coords[p];
      auto [k, l] = coords[q];
      if ((i < k && j > l) || (k < i && l > j))
        edges.emplace_back(id(i, j), id(k, l));
    }
  }
  return Graph(std::move(verts), std::move(edges), std::move(labels));
}

namespace {

struct RawPart {
  int m, n;
  std::vector<int> a, b;
  std::vector<int> orig_rows;
  int col_shift;
};

// Rewrite to a fixpoint: drop empty rows, trim unused
// boundary columns, split where b_{i-1} <= a_i + 1. Accepts tuples the
// shedding recursion produces, which may violate the boundary invariants
// until rewritten.
void normalize_raw(RawPart p, std::vector<NormalizedPart>& out) {
  for (;;) {
    // drop empty rows
    for (int i = p.m - 1; i >= 0; --i) {
      if (p.a[i] + 1 >= p.b[i]) {
        p.a.erase(p.a.begin() + i);
        p.b.erase(p.b.begin() + i);
        p.orig_rows.erase(p.orig_rows.begin() + i);
        --p.m;
      }
    }
    if (p.m == 0) return;
    // unused columns on the right
    if (p.b[p.m - 1] <= p.n) p.n = p.b[p.m - 1] - 1;
    // unused columns on the left
    if (p.a[0] > 0) {
      int shift = p.a[0];
      for (int i = 0; i < p.m; ++i) {
        p.a[i] -= shift;
        p.b[i] -= shift;
      }
      p.n -= shift;
      p.col_shift += shift;
      continue;  // re-check emptiness with shifted bounds
    }
    // split into disconnected pieces
    int split = -1;
    for (int i = 1; i < p.m; ++i) {
      if (p.b[i - 1] <= p.a[i] + 1) {
        split = i;
        break;
      }
    }
    if (split < 0) break;
    RawPart top;
    top.m = split;
    top.n = p.b[split - 1] - 1;
    top.a.assign(p.a.begin(), p.a.begin() + split);
    top.b.assign(p.b.begin(), p.b.begin() + split);
    top.orig_rows.assign(p.orig_rows.begin(), p.orig_rows.begin() + split);
    top.col_shift = p.col_shift;
    RawPart bottom;
    int shift = p.a[split];
    bottom.m = p.m - split;
    bottom.n = p.n - shift;
    bottom.a.assign(p.a.begin() + split, p.a.end());
    bottom.b.assign(p.b.begin() + split, p.b.end());
    for (int i = 0; i < bottom.m; ++i) {
      bottom.a[i] -= shift;
      bottom.b[i] = std::min(bottom.b[i] - shift, bottom.n + 1);
    }
    bottom.orig_rows.assign(p.orig_rows.begin() + split, p.orig_rows.end());
    bottom.col_shift = p.col_shift + shift;
    normalize_raw(std::move(top), out);
    normalize_raw(std::move(bottom), out);
    return;
  }
  NormalizedPart part;
  part.spec = DownLeftSpec::create(p.m, p.n, std::move(p.a), std::move(p.b));
  part.orig_rows = std::move(p.orig_rows);
  part.col_shift = p.col_shift;
  out.push_back(std::move(part));
}

RawPart raw_from(const DownLeftSpec& spec) {
  RawPart p;
  p.m = spec.m;
  p.n = spec.n;
  p.a = spec.a;
  p.b = spec.b;
  p.orig_rows.resize(spec.m);
  for (int i = 0; i < spec.m; ++i) p.orig_rows[i] = i + 1;
  p.col_shift = 0;
  return p;
}

}  // namespace

NormalizedSpec normalize(const DownLeftSpec& spec) {
  spec.validate();
  NormalizedSpec out;
  normalize_raw(raw_from(spec), out.parts);
  for (const auto& part : out.parts) {
    if (!part.spec.is_normalized())
      throw InvalidSpec("normalization did not reach a normalized part");
  }
  return out;
}

Graph strip_isolated(const Graph& g) {
  std::set<int> keep;
  for (int v : g.vertices())
    if (g.degree(v) > 0) keep.insert(v);
  return g.induced(keep);
}

std::vector<std::vector<GridCoord>> lattice_path_independent_sets(
    const DownLeftSpec& part) {
  part.validate();
  if (!part.is_normalized())
    throw InvalidSpec("lattice paths require a normalized part");
  std::vector<std::vector<GridCoord>> out;
  std::vector<GridCoord> path;
  auto walk = [&](auto&& self, int i, int j) -> void {
    path.push_back({i, j});
    if (i == part.m && j == part.n) {
      out.push_back(path);
    } else {
      if (part.has_vertex(i + 1, j)) self(self, i + 1, j);
      if (part.has_vertex(i, j + 1)) self(self, i, j + 1);
    }
    path.pop_back();
  };
  walk(walk, 1, 1);
  return out;
}

GridCoord shedding_vertex(const DownLeftSpec& part) {
  part.validate();
  if (part.vertex_count() < 2)
    throw Degenerate("shedding_vertex: part has fewer than 2 vertices");
  int i = 0;
  while (i + 1 < part.m && part.a[i + 1] == 0) ++i;
  return {i + 1, 1};
}

namespace {

struct PartState {
  DownLeftSpec spec;
  std::vector<int> orig_rows;
  int col_shift;
};

std::string state_key(const std::vector<PartState>& parts) {
  std::ostringstream os;
  for (const auto& p : parts) {
    os << p.spec.m << ',' << p.spec.n << ';';
    for (int v : p.spec.a) os << v << ',';
    os << ';';
    for (int v : p.spec.b) os << v << ',';
    os << ';';
    for (int v : p.orig_rows) os << v << ',';
    os << ';' << p.col_shift << '|';
  }
  return os.str();
}

bool part_has_edge(const DownLeftSpec& s) {
  // an edge needs rows i < k with a surviving column pair j > l
  for (int i = 1; i <= s.m; ++i)
    for (int k = i + 1; k <= s.m; ++k)
      if (s.b[i - 1] - 1 > s.a[k - 1] + 1) return true;
  return false;
}

struct CertBuilder {
  std::map<std::string, std::shared_ptr<const SheddingNode>> memo;
  bool memo_leaf_known = false;

  std::vector<PartState> renormalize(const std::vector<PartState>& parts,
                                     std::size_t replaced, RawPart raw) {
    std::vector<NormalizedPart> nps;
    normalize_raw(std::move(raw), nps);
    std::vector<PartState> next;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i == replaced) {
        for (auto& np : nps)
          next.push_back({np.spec, np.orig_rows, np.col_shift});
      } else {
        next.push_back(parts[i]);
      }
    }
    return next;
  }

  std::shared_ptr<const SheddingNode> build(
      const std::vector<PartState>& parts) {
    std::size_t target = parts.size();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (part_has_edge(parts[i].spec)) {
        target = i;
        break;
      }
    }
    if (target == parts.size()) return nullptr;  // edgeless: leaf
    auto key = state_key(parts);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    const PartState& ps = parts[target];
    const DownLeftSpec& s = ps.spec;
    GridCoord local = shedding_vertex(s);
    int i = local.row;  // largest local row with a_i = 0
    auto node = std::make_shared<SheddingNode>();
    node->vertex = {ps.orig_rows[i - 1], 1 + ps.col_shift};

    RawPart base;
    base.m = s.m;
    base.n = s.n;
    base.a = s.a;
    base.b = s.b;
    base.orig_rows = ps.orig_rows;
    base.col_shift = ps.col_shift;

    if (i == 1) {
      // x_{1,1} is the only vertex of column 1; shedding it removes the column
      node->isolated_shed = true;
      RawPart drop = base;
      drop.n -= 1;
      drop.col_shift += 1;
      for (int r = 0; r < drop.m; ++r) {
        drop.a[r] = std::max(0, drop.a[r] - 1);
        drop.b[r] -= 1;
      }
      auto child = build(renormalize(parts, target, std::move(drop)));
      node->without_vertex = child;
    } else {
      RawPart minus_v = base;
      minus_v.a[i - 1] = 1;
      RawPart minus_n = minus_v;
      for (int r = 0; r < i - 1; ++r) minus_n.b[r] = 2;
      node->without_vertex = build(renormalize(parts, target, std::move(minus_v)));
      node->without_neighborhood =
          build(renormalize(parts, target, std::move(minus_n)));
    }
    auto cnode = std::shared_ptr<const SheddingNode>(std::move(node));
    memo.emplace(std::move(key), cnode);
    return cnode;
  }
};

}  // namespace

std::vector<GridCoord> SheddingSequence::preorder() const {
  std::vector<GridCoord> out;
  auto walk = [&](auto&& self, const SheddingNode* n) -> void {
    if (!n) return;
    out.push_back(n->vertex);
    self(self, n->without_vertex.get());
    if (!n->isolated_shed) self(self, n->without_neighborhood.get());
  };
  walk(walk, root.get());
  return out;
}

SheddingSequence vd_certificate(const DownLeftSpec& spec) {
  spec.validate();
  auto normalized = normalize(spec);
  std::vector<PartState> parts;
  for (auto& np : normalized.parts)
    parts.push_back({np.spec, np.orig_rows, np.col_shift});
  CertBuilder builder;
  SheddingSequence seq;
  seq.root = builder.build(parts);
  return seq;
}

bool replay_shedding(const Graph& g, const SheddingSequence& seq,
                     const Config& cfg) {
  auto walk = [&](auto&& self, const Graph& cur,
                  const SheddingNode* node) -> bool {
    if (!node) return cur.edge_count() == 0;
    if (cur.edge_count() == 0) return false;  // certificate overshoots
    if (!is_well_covered(cur, cfg).well_covered) return false;
    auto vid = cur.vertex_with_label(node->vertex);
    if (!vid) return false;
    if (node->isolated_shed) {
      if (cur.degree(*vid) != 0) return false;
      return self(self, cur.without_vertex(*vid), node->without_vertex.get());
    }
    return self(self, cur.without_vertex(*vid), node->without_vertex.get()) &&
           self(self, cur.without_vertices(closed_neighborhood(cur, *vid)),
                node->without_neighborhood.get());
  };
  return walk(walk, g, seq.root.get());
}

DownleftRegularity downleft_regularity(const DownLeftSpec& spec,
                                       const Config& cfg) {
  auto normalized = normalize(spec);
  DownleftRegularity res;
  for (const auto& part : normalized.parts) {
    Graph pg = build_downleft(part.spec);
    auto im = induced_matching_number(pg, cfg);
    if (part.spec.is_full()) {
      int expected = std::min(part.spec.m, part.spec.n) - 1;
      if (im.size != expected)
        throw Error("closed form min{m-1,n-1} disagrees with the search");
    }
    res.reg += im.size;
    for (auto [u, v] : im.edges) {
      GridCoord cu = *pg.label(u);
      GridCoord cv = *pg.label(v);
      res.witness.emplace_back(part.to_original(cu), part.to_original(cv));
    }
  }
  std::sort(res.witness.begin(), res.witness.end());
  return res;
}

std::vector<std::pair<GridCoord, GridCoord>> canonical_induced_matching(
    int m, int n) {
  if (m < 2 || n < 2)
    throw Degenerate("canonical_induced_matching requires m, n >= 2");
  std::vector<std::pair<GridCoord, GridCoord>> out;
  int k = std::min(m, n);
  for (int i = 1; i < k; ++i)
    out.push_back({{i, i + 1}, {i + 1, i}});
  return out;
}

DownLeftSpec parse_spec_text(std::istream& in) {
  std::vector<std::vector<int>> rows;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<int> nums;
    int x;
    while (ls >> x) nums.push_back(x);
    if (!nums.empty()) rows.push_back(std::move(nums));
  }
  if (rows.size() != 3 || rows[0].size() != 2)
    throw InvalidSpec("spec text needs a line 'm n', then a and b vectors");
  return DownLeftSpec::create(rows[0][0], rows[0][1], rows[1], rows[2]);
}

void write_spec_text(std::ostream& out, const DownLeftSpec& spec) {
  out << spec.m << ' ' << spec.n << '\n';
  for (int i = 0; i < spec.m; ++i) out << spec.a[i] << " \n"[i + 1 == spec.m];
  for (int i = 0; i < spec.m; ++i) out << spec.b[i] << " \n"[i + 1 == spec.m];
}

}  // namespace dlg::downleft
