// Command-line front end: graph analysis, consensus simulation, and the
// cross-method verification suite. JSON on stdout, CSV trajectories to
// --output, diagnostics on stderr.
//
// Exit codes: 0 success / all checks pass, 1 validation or check failure,
// 2 I/O or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "lapcon/digraph.hpp"
#include "lapcon/dynamics.hpp"
#include "lapcon/edgelist.hpp"
#include "lapcon/errors.hpp"
#include "lapcon/forest.hpp"
#include "lapcon/kernels.hpp"
#include "lapcon/random.hpp"
#include "lapcon/scc.hpp"
#include "lapcon/spectral.hpp"
#include "lapcon/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace lapcon;

constexpr int kSchemaVersion = 1;

json matrix_to_json(const SquareMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json rank_report_to_json(const RankReport& r) {
  return json{{"n", r.n},
              {"c", r.c},
              {"num_sink_sccs", r.num_sink_sccs},
              {"d", r.d},
              {"rank_corrected", r.rank_corrected},
              {"rank_lemma2_original", r.rank_lemma2_original},
              {"lemma2_formula_valid", r.lemma2_formula_valid},
              {"sccs_pairwise_disconnected", r.sccs_pairwise_disconnected}};
}

json spectral_to_json(const SpectralReport& s) {
  json eigs = json::array();
  for (const auto& lambda : s.eigenvalues) eigs.push_back({lambda.real(), lambda.imag()});
  json out{{"eigenvalues", std::move(eigs)},
           {"zero_multiplicity", s.zero_multiplicity},
           {"numerical_rank", s.numerical_rank},
           {"localization_holds", s.localization_holds}};
  if (s.min_nonzero_real_part)
    out["min_nonzero_real_part"] = *s.min_nonzero_real_part;
  else
    out["min_nonzero_real_part"] = nullptr;
  return out;
}

json forest_to_json(const ForestSummary& f) {
  return json{{"d", f.d},
              {"forest_count", f.forest_count},
              {"total_weight", f.total_weight},
              {"j_matrix", matrix_to_json(f.j_matrix)}};
}

json checks_to_json(const std::vector<CheckResult>& checks) {
  json arr = json::array();
  for (const CheckResult& c : checks)
    arr.push_back(json{{"name", c.name},
                       {"pass", c.pass},
                       {"expected_failure", c.expected_failure},
                       {"worst_residual", c.worst_residual},
                       {"detail", c.detail}});
  return arr;
}

struct X0Spec {
  std::vector<double> values;
  std::optional<std::uint64_t> seed;
};

X0Spec parse_x0(const std::string& spec, int n) {
  X0Spec out;
  if (spec.rfind("random:", 0) == 0) {
    out.seed = std::stoull(spec.substr(7));
    std::mt19937_64 rng(*out.seed);
    out.values = random_vector(rng, n, -10.0, 10.0);
    return out;
  }
  if (spec.rfind("file:", 0) == 0) {
    const std::string path = spec.substr(5);
    std::ifstream in(path);
    if (!in) throw Error(Errc::file_not_found, path);
    double v;
    while (in >> v) out.values.push_back(v);
    return out;
  }
  std::istringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.values.push_back(std::stod(tok));
  return out;
}

int run_analyze(const std::string& path, double zero_tol, double rank_tol, int forest_cap) {
  const Digraph g = load_edge_list(path);
  const RankReport rr = rank_report(g);
  const SpectralReport sr = spectral_report(g, zero_tol, rank_tol);

  json doc{{"schema_version", kSchemaVersion},
           {"graph", {{"n", g.order()}, {"arc_count", g.arcs().size()}}},
           {"rank_report", rank_report_to_json(rr)},
           {"spectral", spectral_to_json(sr)}};

  try {
    doc["forest"] = forest_to_json(maximal_forest_matrix(g, forest_cap));
  } catch (const Error& e) {
    if (e.code() != Errc::graph_too_large_for_enumeration) throw;
    doc["forest"] = json{{"skipped", true}, {"reason", e.what()}};
  }

  // Internal consistency gate: never emit a self-contradicting report.
  if (sr.numerical_rank != rr.rank_corrected || sr.zero_multiplicity != rr.d) {
    std::cerr << "internal inconsistency: spectral rank " << sr.numerical_rank
              << " vs combinatorial " << rr.rank_corrected << ", zero multiplicity "
              << sr.zero_multiplicity << " vs d " << rr.d << "\n";
    return 1;
  }

  std::cout << doc.dump(2) << "\n";
  return 0;
}

int run_simulate(const std::string& path, const std::string& mode, const std::string& x0_spec,
                 double t_end, double dt, std::optional<double> eps_opt, long steps, int stride,
                 const std::string& output, int forest_cap) {
  const Digraph g = load_edge_list(path);
  const X0Spec x0 = parse_x0(x0_spec, g.order());

  Trajectory traj;
  double eps_used = 0.0;
  if (mode == "continuous") {
    traj = simulate_continuous(g, x0.values, t_end, dt, stride > 0 ? stride : 10);
  } else if (mode == "discrete") {
    const double delta = max_out_degree(g);
    eps_used = eps_opt.value_or(delta > 0.0 ? 1.0 / (2.0 * delta) : 0.5);
    traj = simulate_discrete(g, eps_used, x0.values, steps, stride > 0 ? stride : 1);
  } else {
    throw CLI::ValidationError("--mode must be continuous or discrete");
  }

  if (!output.empty()) {
    std::ofstream csv(output);
    if (!csv) throw Error(Errc::file_not_found, "cannot write " + output);
    write_trajectory_csv(traj, csv);
  }

  json doc{{"schema_version", kSchemaVersion},
           {"mode", mode},
           {"n", g.order()},
           {"x0", x0.values},
           {"final_state", traj.states.back()},
           {"recorded_steps", traj.times.size()}};
  if (x0.seed) doc["seed"] = *x0.seed;
  if (mode == "discrete") doc["eps"] = eps_used;

  // Predicted limit J x0 when a route to the forest matrix is available.
  try {
    SquareMatrix jbar =
        g.order() <= forest_cap ? maximal_forest_matrix(g, forest_cap).j_matrix
                                : eigenprojector_at_zero(g).matrix;
    std::vector<double> limit(g.order());
    kernels::matvec(jbar, x0.values, limit);
    doc["predicted_limit"] = limit;
    doc["max_deviation_from_limit"] = kernels::max_abs_diff(traj.states.back(), limit);
  } catch (const Error& e) {
    doc["predicted_limit"] = nullptr;
    doc["limit_skipped_reason"] = e.what();
  }

  std::cout << doc.dump(2) << "\n";
  return 0;
}

int run_verify(const std::string& path, int exhaustive_n, const VerifyOptions& opt) {
  json doc{{"schema_version", kSchemaVersion}};
  bool pass = false;
  if (exhaustive_n > 0) {
    // Trajectory checks are a per-graph diagnostic; the exhaustive sweep
    // covers the algebraic and combinatorial identities.
    VerifyOptions sweep = opt;
    sweep.run_trajectory = false;
    const ExhaustiveResult res = verify_exhaustive(exhaustive_n, sweep);
    doc["exhaustive_n"] = res.n;
    doc["graph_count"] = res.graph_count;
    doc["checks"] = checks_to_json(res.checks);
    pass = res.pass;
  } else {
    const Digraph g = load_edge_list(path);
    const std::vector<CheckResult> checks = verify_graph(g, opt);
    doc["graph"] = {{"n", g.order()}, {"arc_count", g.arcs().size()}};
    doc["checks"] = checks_to_json(checks);
    pass = all_pass(checks);
  }
  doc["all_pass"] = pass;
  std::cout << doc.dump(2) << "\n";
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Digraph Laplacian consensus analyzer"};
  app.require_subcommand(1);

  double zero_tol = kDefaultZeroTol;
  double rank_tol = kDefaultRankTol;
  int forest_cap = kDefaultEnumerationCap;
  app.add_option("--zero-tol", zero_tol, "relative zero-eigenvalue tolerance");
  app.add_option("--rank-tol", rank_tol, "relative singular-value rank tolerance");
  app.add_option("--forest-cap", forest_cap, "max n for exhaustive forest enumeration");

  std::string analyze_path;
  auto* analyze = app.add_subcommand("analyze", "rank, spectral, and forest report for a graph");
  analyze->add_option("file", analyze_path, "edge-list file")->required();

  std::string sim_path, sim_mode = "continuous", sim_x0, sim_output;
  double t_end = 50.0, dt = 0.01;
  std::optional<double> eps;
  long steps = 10000;
  int stride = 0;
  std::uint64_t seed = 1;
  auto* simulate = app.add_subcommand("simulate", "run the consensus dynamics");
  simulate->add_option("file", sim_path, "edge-list file")->required();
  simulate->add_option("--mode", sim_mode, "continuous | discrete");
  simulate->add_option("--x0", sim_x0, "comma list, file:<path>, or random:<seed>")->required();
  simulate->add_option("--t-end", t_end, "continuous horizon");
  simulate->add_option("--dt", dt, "RK4 step");
  simulate->add_option("--eps", eps, "discrete step size (default 1/(2*max_out_degree))");
  simulate->add_option("--steps", steps, "discrete step count");
  simulate->add_option("--stride", stride, "record every stride-th step");
  simulate->add_option("--output", sim_output, "CSV trajectory path");

  std::string verify_path;
  int exhaustive_n = 0;
  auto* verify = app.add_subcommand("verify", "cross-method verification suite");
  auto* vfile = verify->add_option("file", verify_path, "edge-list file");
  verify->add_option("--exhaustive", exhaustive_n, "sweep all unit-weight digraphs on n <= 4 nodes")
      ->excludes(vfile);
  verify->add_option("--seed", seed, "seed for the random initial state");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return run_analyze(analyze_path, zero_tol, rank_tol, forest_cap);
    if (simulate->parsed())
      return run_simulate(sim_path, sim_mode, sim_x0, t_end, dt, eps, steps, stride, sim_output,
                          forest_cap);
    if (verify->parsed()) {
      if (exhaustive_n == 0 && verify_path.empty()) {
        std::cerr << "verify needs a file or --exhaustive <n>\n";
        return 2;
      }
      VerifyOptions opt;
      opt.forest_cap = forest_cap;
      opt.zero_tol = zero_tol;
      opt.rank_tol = rank_tol;
      opt.seed = seed;
      return run_verify(verify_path, exhaustive_n, opt);
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return (e.code() == Errc::file_not_found || e.code() == Errc::parse_error) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 2;
}
