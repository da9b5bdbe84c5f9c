// Command-line driver: gen / analyze / oracle / toric / selftest.
// Exit codes: 0 ok, 1 selftest failure, 2 invalid input, 3 cap exceeded,
// 4 not chordal bipartite, 5 forbidden bipartite pattern, 6 pipeline failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "dlgraph/downleft.hpp"
#include "dlgraph/enumerate.hpp"
#include "dlgraph/errors.hpp"
#include "dlgraph/hochster.hpp"
#include "dlgraph/io.hpp"
#include "dlgraph/patterns.hpp"
#include "dlgraph/selftest.hpp"
#include "dlgraph/toric.hpp"

namespace {

using json = nlohmann::json;
using namespace dlg;

constexpr int kExitOk = 0;
constexpr int kExitSelftest = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitCapExceeded = 3;
constexpr int kExitNotChordalBipartite = 4;
constexpr int kExitForbiddenPattern = 5;
constexpr int kExitPipeline = 6;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionFailed("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fnv1a_digest(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

void emit(const json& report, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << report.dump(2) << '\n';
  } else {
    std::ofstream out(out_path);
    if (!out) throw PreconditionFailed("cannot open " + out_path);
    out << report.dump(2) << '\n';
  }
}

json coord_json(const GridCoord& c) { return json::array({c.row, c.col}); }

json matrix_json(const toric::BinaryMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(static_cast<int>(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

downleft::DownLeftSpec spec_from_options(const std::string& spec_path, int m,
                                         int n, const std::vector<int>& a,
                                         const std::vector<int>& b) {
  if (!spec_path.empty()) {
    std::ifstream in(spec_path);
    if (!in) throw PreconditionFailed("cannot open " + spec_path);
    return downleft::parse_spec_text(in);
  }
  if (a.empty() && b.empty()) return downleft::DownLeftSpec::full(m, n);
  return downleft::DownLeftSpec::create(m, n, a, b);
}

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

int run_gen(const std::string& spec_path, int m, int n,
            const std::vector<int>& a, const std::vector<int>& b,
            const std::string& out_path) {
  auto spec = spec_from_options(spec_path, m, n, a, b);
  Graph g = downleft::build_downleft(spec);
  if (out_path.empty()) {
    io::write_graph(std::cout, g);
  } else {
    io::write_graph_file(out_path, g);
  }
  return kExitOk;
}

int run_analyze(const std::string& graph_path, const std::string& spec_path,
                bool want_wc, bool want_c5, bool want_vd, bool want_im,
                bool want_reg, bool use_oracle, const Config& cfg,
                bool timing, const std::string& out_path) {
  Timer timer;
  std::string data = read_file(graph_path);
  std::istringstream in(data);
  Graph g = io::read_graph(in);

  std::optional<downleft::DownLeftSpec> spec;
  if (!spec_path.empty()) {
    std::ifstream sin(spec_path);
    if (!sin) throw PreconditionFailed("cannot open " + spec_path);
    spec = downleft::parse_spec_text(sin);
  }

  json rep;
  rep["command"] = "analyze";
  rep["input_digest"] = fnv1a_digest(data);
  rep["vertices"] = g.vertex_count();
  rep["edges"] = g.edge_count();

  if (want_wc) {
    auto wc = is_well_covered(g, cfg);
    json j;
    j["well_covered"] = wc.well_covered;
    if (wc.well_covered) {
      j["common_size"] = wc.common_size;
    } else {
      j["smaller"] = wc.smaller;
      j["larger"] = wc.larger;
    }
    rep["well_covered"] = j;
  }
  if (want_c5) {
    auto emb = find_induced_pattern(g, PatternKind::c5(), cfg);
    json j;
    j["c5_free"] = !emb.has_value();
    if (emb) j["witness"] = emb->image;
    rep["c5"] = j;
  }
  if (want_vd) {
    json j;
    if (spec) {
      auto cert = downleft::vd_certificate(*spec);
      j["vertex_decomposable"] = downleft::replay_shedding(g, cert, cfg);
      json order = json::array();
      for (const auto& c : cert.preorder()) order.push_back(coord_json(c));
      j["shedding_preorder"] = order;
    } else {
      auto bf = is_vertex_decomposable_bruteforce(g, cfg);
      j["vertex_decomposable"] = bf.vertex_decomposable;
      if (bf.vertex_decomposable) j["shedding"] = bf.shedding;
    }
    rep["vd"] = j;
  }
  if (want_im) {
    auto im = induced_matching_number(g, cfg);
    json j;
    j["im"] = im.size;
    json witness = json::array();
    for (const auto& e : im.edges) witness.push_back(json::array({e.first, e.second}));
    j["witness"] = witness;
    rep["im"] = j;
  }
  if (want_reg) {
    json j;
    if (spec) {
      auto r = downleft::downleft_regularity(*spec, cfg);
      j["reg"] = r.reg;
      json witness = json::array();
      for (const auto& e : r.witness)
        witness.push_back(json::array({coord_json(e.first), coord_json(e.second)}));
      j["witness"] = witness;
    } else if (use_oracle) {
      auto r = hochster::oracle_reg(g, cfg);
      j["reg"] = r.reg;
      j["witness_vertices"] = r.witness_vertices;
      j["witness_degree"] = r.witness_degree;
    } else {
      throw PreconditionFailed("--reg needs --spec or --oracle");
    }
    rep["reg"] = j;
  }
  if (timing) rep["timing_ms"] = timer.ms();
  emit(rep, out_path);
  return kExitOk;
}

int run_oracle(const std::string& graph_path, bool want_betti, bool want_reg,
               Config cfg, bool timing, const std::string& out_path) {
  Timer timer;
  std::string data = read_file(graph_path);
  std::istringstream in(data);
  Graph g = io::read_graph(in);

  json rep;
  rep["command"] = "oracle";
  rep["input_digest"] = fnv1a_digest(data);
  if (want_betti) rep["betti"] = json::parse(hochster::betti_to_json(hochster::graded_betti(g, cfg)));
  if (want_reg || !want_betti) {
    auto r = hochster::oracle_reg(g, cfg);
    json j;
    j["reg"] = r.reg;
    j["witness_vertices"] = r.witness_vertices;
    j["witness_degree"] = r.witness_degree;
    rep["reg"] = j;
  }
  if (timing) rep["timing_ms"] = timer.ms();
  emit(rep, out_path);
  return kExitOk;
}

int run_toric(const std::string& path, bool check_oracle, const Config& cfg,
              bool timing, const std::string& out_path) {
  Timer timer;
  std::string data = read_file(path);
  Graph g;
  std::vector<int> xs, ys;
  if (data.find("vertices") != std::string::npos) {
    std::istringstream in(data);
    g = io::read_graph(in);
    auto cb = is_chordal_bipartite(g, cfg);
    if (!cb.ok) {
      json rep;
      rep["command"] = "toric";
      rep["input_digest"] = fnv1a_digest(data);
      rep["chordal_bipartite"] = false;
      rep["witness"] =
          cb.odd_cycle.empty() && cb.long_cycle ? cb.long_cycle->image : cb.odd_cycle;
      emit(rep, out_path);
      return kExitNotChordalBipartite;
    }
    xs = cb.bipartition.first;
    ys = cb.bipartition.second;
  } else {
    std::istringstream in(data);
    g = toric::matrix_to_graph(toric::read_matrix(in), xs, ys);
  }

  json rep;
  rep["command"] = "toric";
  rep["input_digest"] = fnv1a_digest(data);
  try {
    auto r = toric::toric_regularity(g, xs, ys, cfg, check_oracle);
    rep["chordal_bipartite"] = r.chordal_bipartite;
    rep["k33e_free"] = r.k33e_free;
    rep["sorted_matrix"] = matrix_json(r.sorted_matrix);
    rep["gamma_free"] = r.gamma_free;
    json h_edges = json::array();
    for (const auto& e : r.h.underlying.edges())
      h_edges.push_back(json::array({coord_json(*r.h.underlying.label(e.first)),
                                     coord_json(*r.h.underlying.label(e.second))}));
    rep["h_edges"] = h_edges;
    json comps = json::array();
    for (const auto& part : r.cert.parts) {
      json c;
      c["m"] = part.m;
      c["n"] = part.n;
      c["vertices"] = part.vertices;
      comps.push_back(c);
    }
    rep["components"] = comps;
    rep["isolated"] = r.cert.isolated;
    rep["regularity"] = r.regularity;
    if (r.oracle_reg) rep["oracle_reg"] = *r.oracle_reg;
    if (r.agree) rep["agree"] = *r.agree;
    if (timing) rep["timing_ms"] = timer.ms();
    emit(rep, out_path);
    return kExitOk;
  } catch (const NotChordalBipartite& e) {
    rep["chordal_bipartite"] = false;
    rep["error"] = e.what();
    rep["witness"] = e.witness_cycle;
    emit(rep, out_path);
    return kExitNotChordalBipartite;
  } catch (const NotK33eFree& e) {
    rep["chordal_bipartite"] = true;
    rep["k33e_free"] = false;
    rep["error"] = e.what();
    rep["witness"] = e.witness;
    emit(rep, out_path);
    return kExitForbiddenPattern;
  } catch (const OrderingFailed& e) {
    rep["error"] = e.what();
    emit(rep, out_path);
    return kExitPipeline;
  } catch (const NotDecomposable& e) {
    rep["error"] = e.what();
    rep["witness"] = e.component;
    emit(rep, out_path);
    return kExitPipeline;
  }
}

int run_selftest(bool quick, const Config& cfg) {
  auto results = selftest::run_criteria(quick, cfg);
  std::string first_fail;
  for (const auto& r : results) {
    std::cout << r.id << ' ' << (r.pass ? "pass" : "FAIL") << " (" << r.ms
              << " ms): " << r.detail << '\n';
    if (!r.pass && first_fail.empty()) first_fail = r.id;
  }
  if (!first_fail.empty()) {
    std::cout << "selftest failed at criterion " << first_fail << '\n';
    return kExitSelftest;
  }
  std::cout << "selftest passed\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"down-left graph toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // accept --out / --timing after the subcommand name

  Config cfg;
  bool timing = false;
  std::string out_path;
  app.add_flag("--timing", timing, "include timing_ms in reports");
  app.add_option("--out", out_path, "write the report/file here instead of stdout");

  std::string spec_path, graph_path;
  int m = 0, n = 0;
  std::vector<int> a_vec, b_vec;

  auto* gen = app.add_subcommand("gen", "write a grid graph as an edge list");
  gen->add_option("--spec", spec_path, "spec text file");
  gen->add_option("--m", m, "rows");
  gen->add_option("--n", n, "columns");
  gen->add_option("--a", a_vec, "left corner vector")->delimiter(',');
  gen->add_option("--b", b_vec, "right corner vector")->delimiter(',');

  bool want_wc = false, want_c5 = false, want_vd = false, want_im = false,
       want_reg = false, use_oracle = false;
  auto* analyze = app.add_subcommand("analyze", "verdicts on a graph file");
  analyze->add_option("graph", graph_path, "edge-list file")->required();
  analyze->add_option("--spec", spec_path, "declared spec for this graph");
  analyze->add_flag("--well-covered", want_wc);
  analyze->add_flag("--c5", want_c5);
  analyze->add_flag("--vd", want_vd);
  analyze->add_flag("--im", want_im);
  analyze->add_flag("--reg", want_reg);
  analyze->add_flag("--oracle", use_oracle, "allow the homology oracle for --reg");

  bool want_betti = false, oracle_reg_flag = false;
  auto* oracle = app.add_subcommand("oracle", "exact homology oracle");
  oracle->add_option("graph", graph_path, "edge-list file")->required();
  oracle->add_flag("--betti", want_betti);
  oracle->add_flag("--reg", oracle_reg_flag);
  oracle->add_option("--cap", cfg.hochster_vertex_cap, "vertex cap");

  bool check_oracle = false;
  auto* toric_cmd = app.add_subcommand("toric", "bipartite pipeline");
  toric_cmd->add_option("input", graph_path, "edge-list or matrix file")
      ->required();
  toric_cmd->add_flag("--check-oracle", check_oracle,
                      "cross-check against the homology oracle");

  bool quick = false, full = false;
  auto* selftest_cmd = app.add_subcommand("selftest", "acceptance criteria");
  selftest_cmd->add_flag("--quick", quick);
  selftest_cmd->add_flag("--full", full);

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return run_gen(spec_path, m, n, a_vec, b_vec, out_path);
    if (analyze->parsed())
      return run_analyze(graph_path, spec_path, want_wc, want_c5, want_vd,
                         want_im, want_reg, use_oracle, cfg, timing, out_path);
    if (oracle->parsed())
      return run_oracle(graph_path, want_betti, oracle_reg_flag, cfg, timing,
                        out_path);
    if (toric_cmd->parsed())
      return run_toric(graph_path, check_oracle, cfg, timing, out_path);
    if (selftest_cmd->parsed()) return run_selftest(quick && !full, cfg);
  } catch (const TooLarge& e) {
    std::cerr << "error: " << e.what() << " (raise --cap)\n";
    return kExitCapExceeded;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  return kExitOk;
}
