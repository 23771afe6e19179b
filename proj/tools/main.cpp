// Command-line front-end: compute spectral values, evaluate bounds, build
// symmetrants, generate instances, convert between the JSON formats, and
// run the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input or flags.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypermat/bounds.hpp"
#include "hypermat/hypergraph.hpp"
#include "hypermat/io.hpp"
#include "hypermat/oracle.hpp"
#include "hypermat/spectral.hpp"
#include "hypermat/structure.hpp"
#include "hypermat/verify.hpp"

namespace {

using hypermat::Tensor;
using hypermat::WeightedRGraph;

struct SolverFlags {
  double p = 2.0;
  int starts = 32;
  std::uint64_t seed = 12345;
  double tol = 1e-10;
  int max_iter = 10000;
  bool json = false;
};

void add_solver_flags(CLI::App* cmd, SolverFlags& f, bool with_p = true) {
  if (with_p) cmd->add_option("--p", f.p, "exponent p")->required();
  cmd->add_option("--starts", f.starts, "number of starts");
  cmd->add_option("--seed", f.seed, "base seed");
  cmd->add_option("--tol", f.tol, "convergence tolerance");
  cmd->add_option("--max-iter", f.max_iter, "iteration cap per start");
  cmd->add_flag("--json", f.json, "emit JSON instead of a table");
}

hypermat::SolverOptions<double> to_options(const SolverFlags& f) {
  hypermat::SolverOptions<double> o;
  o.starts = f.starts;
  o.seed = f.seed;
  o.tol = f.tol;
  o.max_iter = f.max_iter;
  return o;
}

Tensor<double> load_tensor_arg(const std::string& file) {
  if (file.empty() || file == "-") return hypermat::read_tensor_any(std::cin);
  std::ifstream in(file);
  hypermat::require(in.good(), hypermat::Errc::io_error, "cannot open " + file);
  return hypermat::read_tensor_any(in);
}

WeightedRGraph load_graph_arg(const std::string& file) {
  if (file.empty() || file == "-") return hypermat::read_graph(std::cin);
  return hypermat::load_graph_file(file);
}

void write_to(const std::string& out, const std::function<void(std::ostream&)>& fn) {
  if (out.empty() || out == "-") {
    fn(std::cout);
    return;
  }
  std::ofstream os(out);
  hypermat::require(os.good(), hypermat::Errc::io_error, "cannot open " + out);
  fn(os);
}

std::string num6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

void print_result(const hypermat::SpectralResult<double>& res, bool json, bool with_gap) {
  using hypermat::num17;
  if (!json) {
    std::cout << "value       " << num6(res.value) << "\n"
              << "p           " << num6(res.p) << "\n"
              << "converged   " << (res.converged ? "yes" : "no") << "\n"
              << "iterations  " << res.iterations << "\n"
              << "starts      " << res.starts << "\n"
              << "best_start  " << res.best_start << "\n";
    if (with_gap) std::cout << "gap         " << num6(res.gap) << "\n";
    return;
  }
  std::cout << "{\"value\":" << num17(res.value) << ",\"p\":" << num17(res.p)
            << ",\"converged\":" << (res.converged ? "true" : "false")
            << ",\"iterations\":" << res.iterations << ",\"starts\":" << res.starts
            << ",\"best_start\":" << res.best_start;
  if (with_gap) std::cout << ",\"gap\":" << num17(res.gap);
  std::cout << ",\"witness\":[";
  for (size_t k = 0; k < res.witness.size(); ++k) {
    std::cout << (k ? "," : "") << "[";
    for (Eigen::Index i = 0; i < res.witness[k].size(); ++i)
      std::cout << (i ? "," : "") << num17(res.witness[k][i]);
    std::cout << "]";
  }
  std::cout << "]}\n";
}

void print_bounds(const hypermat::BoundsReport<double>& rep, bool json) {
  using hypermat::num17;
  if (!json) {
    auto row = [&](const std::string& name, double v) {
      std::cout << name << "  ";
      for (size_t i = name.size(); i < 18; ++i) std::cout << ' ';
      std::cout << num6(v) << "\n";
    };
    std::cout << "p                   " << num6(rep.p) << "\n";
    for (size_t k = 0; k < rep.slice_sum_lower.size(); ++k)
      row("slice_sum_lower[" + std::to_string(k) + "]", rep.slice_sum_lower[k]);
    if (rep.fiber_lower) row("fiber_lower", *rep.fiber_lower);
    for (size_t k = 0; k < rep.th5_lower.size(); ++k)
      row("th5_lower[" + std::to_string(k) + "]", rep.th5_lower[k]);
    if (rep.regular) row("regular_value", *rep.regular);
    if (rep.schur) row("schur", *rep.schur);
    if (rep.hlp) row("hlp", *rep.hlp);
    if (rep.main_bound) row("main", *rep.main_bound);
    if (rep.th3) row("th3", *rep.th3);
    if (rep.entry_norm) row("entry_norm", *rep.entry_norm);
    if (rep.estimate) row("estimate", *rep.estimate);
    std::cout << "sandwich_ok         " << (rep.sandwich_ok ? "yes" : "no") << "\n";
    return;
  }
  std::cout << "{\"p\":" << num17(rep.p);
  auto arr = [&](const std::string& name, const std::vector<double>& v) {
    std::cout << ",\"" << name << "\":[";
    for (size_t i = 0; i < v.size(); ++i) std::cout << (i ? "," : "") << num17(v[i]);
    std::cout << "]";
  };
  auto opt = [&](const std::string& name, const std::optional<double>& v) {
    if (v) std::cout << ",\"" << name << "\":" << num17(*v);
  };
  arr("slice_sum_lower", rep.slice_sum_lower);
  opt("fiber_lower", rep.fiber_lower);
  arr("th5_lower", rep.th5_lower);
  opt("regular_value", rep.regular);
  opt("schur", rep.schur);
  opt("hlp", rep.hlp);
  opt("main", rep.main_bound);
  opt("th3", rep.th3);
  opt("entry_norm", rep.entry_norm);
  opt("estimate", rep.estimate);
  std::cout << ",\"sandwich_ok\":" << (rep.sandwich_ok ? "true" : "false") << "}\n";
}

int run_verify(const std::string& suite, int trials, std::uint64_t seed,
               const std::string& csv_out) {
  const auto result = hypermat::verify::run_suite(suite, trials, seed);
  write_to(csv_out, [&](std::ostream& os) {
    os << "trial,seed,quantity,lhs,rhs,gap,pass\n";
    for (const auto& row : result.rows)
      os << row.trial << "," << row.seed << "," << row.quantity << ","
         << hypermat::num17(row.lhs) << "," << hypermat::num17(row.rhs) << ","
         << hypermat::num17(row.gap) << "," << (row.pass ? 1 : 0) << "\n";
  });
  std::cerr << "suite " << suite << ": " << result.rows.size() << " checks, "
            << result.failures() << " failures\n";
  return result.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral p-norms and p-spectral radii of dense hypermatrices"};
  app.require_subcommand(1);

  std::string file, out_file, graph_file;
  SolverFlags flags;
  bool with_estimate = false;

  auto* norm = app.add_subcommand("norm", "spectral p-norm of a tensor or graph file");
  norm->add_option("file", file, "input (rtensor-v1 or rgraph-v1; - for stdin)");
  add_solver_flags(norm, flags);

  auto* eta = app.add_subcommand("eta", "p-spectral radius of a symmetric tensor");
  eta->add_option("file", file, "input (rtensor-v1 or rgraph-v1; - for stdin)");
  add_solver_flags(eta, flags);

  auto* rho = app.add_subcommand("rho", "spectral radius of a nonnegative cubical tensor");
  rho->add_option("file", file, "input (rtensor-v1 or rgraph-v1; - for stdin)");
  add_solver_flags(rho, flags, /*with_p=*/false);

  auto* bounds = app.add_subcommand("bounds", "closed-form bounds for one (A, p) pair");
  bounds->add_option("file", file, "input (rtensor-v1 or rgraph-v1; - for stdin)");
  bounds->add_flag("--with-estimate", with_estimate, "attach the optimizer estimate");
  add_solver_flags(bounds, flags);

  auto* symc = app.add_subcommand("symmetrant", "symmetric block embedding of a tensor");
  symc->add_option("file", file, "input (rtensor-v1; - for stdin)");
  symc->add_option("-o,--output", out_file, "output path (default stdout)");

  auto* graph = app.add_subcommand("graph", "weighted r-graph operations");
  graph->require_subcommand(1);
  auto* gtensor = graph->add_subcommand("tensor", "adjacency tensor of a graph");
  gtensor->add_option("file", graph_file, "input (rgraph-v1; - for stdin)");
  gtensor->add_option("-o,--output", out_file, "output path (default stdout)");
  auto* gbounds = graph->add_subcommand("bounds", "graph-level spectral bounds");
  gbounds->add_option("file", graph_file, "input (rgraph-v1; - for stdin)");
  gbounds->add_flag("--with-estimate", with_estimate, "attach the spectral radius estimate");
  add_solver_flags(gbounds, flags);

  auto* gen = app.add_subcommand("gen", "instance generators");
  gen->require_subcommand(1);
  Eigen::Index gn = 4, gk = 2;
  int gr = 3;
  double gdensity = 0.5;
  std::uint64_t gseed = 12345;
  bool gweighted = false;
  auto* gstar = gen->add_subcommand("star", "K_{1,n} star graph");
  gstar->add_option("--n", gn, "leaf count")->required();
  gstar->add_option("-o,--output", out_file, "output path (default stdout)");
  auto* gbeta = gen->add_subcommand("beta-star", "edges sharing exactly one common vertex");
  gbeta->add_option("--r", gr, "edge size")->required();
  gbeta->add_option("--k", gk, "edge count")->required();
  gbeta->add_option("-o,--output", out_file, "output path (default stdout)");
  auto* gones = gen->add_subcommand("all-ones", "all-ones cubical tensor");
  gones->add_option("--r", gr, "order")->required();
  gones->add_option("--n", gn, "extent")->required();
  gones->add_option("-o,--output", out_file, "output path (default stdout)");
  auto* gcycle = gen->add_subcommand("cycle", "cycle 2-graph");
  gcycle->add_option("--n", gn, "vertex count")->required();
  gcycle->add_option("-o,--output", out_file, "output path (default stdout)");
  auto* grandom = gen->add_subcommand("random", "random r-graph");
  grandom->add_option("--r", gr, "edge size")->required();
  grandom->add_option("--n", gn, "vertex count")->required();
  grandom->add_option("--density", gdensity, "edge keep probability");
  grandom->add_option("--seed", gseed, "generator seed");
  grandom->add_flag("--weighted", gweighted, "draw weights from [0.1, 1]");
  grandom->add_option("-o,--output", out_file, "output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "run one invariant suite; CSV per-trial log");
  std::string suite, csv_out;
  int trials = 25;
  std::uint64_t vseed = 12345;
  verify->add_option("--suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember(hypermat::verify::suite_names()));
  verify->add_option("--trials", trials, "trial count");
  verify->add_option("--seed", vseed, "base seed");
  verify->add_option("--csv", csv_out, "CSV output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (norm->parsed()) {
      print_result(hypermat::spectral_p_norm(load_tensor_arg(file), flags.p,
                                             to_options(flags)),
                   flags.json, false);
    } else if (eta->parsed()) {
      print_result(hypermat::eta_p(load_tensor_arg(file), flags.p, to_options(flags)),
                   flags.json, false);
    } else if (rho->parsed()) {
      print_result(hypermat::rho_nonnegative(load_tensor_arg(file), to_options(flags)),
                   flags.json, true);
    } else if (bounds->parsed()) {
      print_bounds(hypermat::bounds_report(load_tensor_arg(file), flags.p, with_estimate,
                                           to_options(flags)),
                   flags.json);
    } else if (symc->parsed()) {
      const auto [sym, part] = hypermat::symmetrant(load_tensor_arg(file));
      write_to(out_file, [&](std::ostream& os) { hypermat::write_tensor(sym, os); });
    } else if (gtensor->parsed()) {
      const auto a = hypermat::adjacency_tensor(load_graph_arg(graph_file));
      write_to(out_file, [&](std::ostream& os) { hypermat::write_tensor(a, os); });
    } else if (gbounds->parsed()) {
      const WeightedRGraph g = load_graph_arg(graph_file);
      const double dp = hypermat::bound_degree_product(g);
      const double nd = hypermat::bound_neighbor_degree(g);
      std::optional<double> hof, est;
      if (flags.p >= g.r()) hof = hypermat::lower_hofmeister(g, flags.p);
      if (with_estimate)
        est = hypermat::rho_nonnegative(hypermat::adjacency_tensor(g), to_options(flags)).value;
      if (flags.json) {
        std::cout << "{\"p\":" << hypermat::num17(flags.p)
                  << ",\"degree_product\":" << hypermat::num17(dp)
                  << ",\"neighbor_degree\":" << hypermat::num17(nd);
        if (hof) std::cout << ",\"hofmeister_lower\":" << hypermat::num17(*hof);
        if (est) std::cout << ",\"rho_estimate\":" << hypermat::num17(*est);
        std::cout << "}\n";
      } else {
        std::cout << "degree_product    " << num6(dp) << "\n"
                  << "neighbor_degree   " << num6(nd) << "\n";
        if (hof) std::cout << "hofmeister_lower  " << num6(*hof) << "\n";
        if (est) std::cout << "rho_estimate      " << num6(*est) << "\n";
      }
    } else if (gstar->parsed()) {
      write_to(out_file,
               [&](std::ostream& os) { hypermat::write_graph(hypermat::gen_star(gn), os); });
    } else if (gbeta->parsed()) {
      write_to(out_file, [&](std::ostream& os) {
        hypermat::write_graph(hypermat::gen_beta_star(gr, gk), os);
      });
    } else if (gones->parsed()) {
      write_to(out_file, [&](std::ostream& os) {
        hypermat::write_tensor(hypermat::gen_all_ones(gr, gn), os);
      });
    } else if (gcycle->parsed()) {
      write_to(out_file,
               [&](std::ostream& os) { hypermat::write_graph(hypermat::gen_cycle(gn), os); });
    } else if (grandom->parsed()) {
      write_to(out_file, [&](std::ostream& os) {
        hypermat::write_graph(hypermat::gen_random(gr, gn, gdensity, gseed, gweighted), os);
      });
    } else if (verify->parsed()) {
      return run_verify(suite, trials, vseed, csv_out);
    }
  } catch (const hypermat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
