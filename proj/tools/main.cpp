// circlefol command-line front end.
//
//   solve     compute an invariant circle and its stable foliation
//   continue  sweep a model parameter, warm-starting each solve
//   verify    recompute the condition report for a stored solution
//   cohom     solve one twisted cohomological equation from coefficient files
//   export    sample a stored solution to CSV for plotting
//
// Exit codes: 0 success, 1 solver error, 2 usage error.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "circlefol/bootstrap.hpp"
#include "circlefol/continuation.hpp"
#include "circlefol/cohomology.hpp"
#include "circlefol/errors.hpp"
#include "circlefol/solution_io.hpp"

namespace {

using namespace circlefol;

std::map<std::string, double> parse_params(const std::vector<std::string>& kvs) {
  std::map<std::string, double> out;
  for (const auto& kv : kvs) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("--param expects key=value: " + kv);
    try {
      out[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--param value is not a number: " + kv);
    }
  }
  return out;
}

void print_report(const ConditionReport& rep) {
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return std::string(buf);
  };
  std::cout << "lambda_c0          " << num(rep.lambda_c0) << "\n"
            << "lambda_star (n=" << rep.lambda_star_n << ") " << num(rep.lambda_star) << "\n"
            << "da_c0              " << num(rep.da_c0) << "\n"
            << "da_inv_c0          " << num(rep.da_inv_c0) << "\n"
            << "dainv_c0           " << num(rep.dainv_c0) << "\n"
            << "m_max              " << num(rep.m_max) << "\n"
            << "residual_x0        " << num(rep.residual_x0) << "\n"
            << "residual_x1        " << num(rep.residual_x1) << "\n"
            << "residual_x2        " << num(rep.residual_x2) << "\n"
            << "frame_det_min      " << num(rep.frame_det_min) << "\n"
            << "taylor_tail_ratio  " << num(rep.taylor_tail_ratio) << "\n"
            << "analyticity_radius " << num(rep.analyticity_radius) << "\n";
  for (const auto& w : rep.warnings) std::cout << "warning: " << w << "\n";
}

struct CommonSolveOptions {
  std::string model;
  std::vector<std::string> params;
  int ntheta = 64;
  int order = 10;
  double delta = 0.3;
  double tol = 1e-12;
  int max_iters = 30;
  std::string schedule = "fixed";
  int burn_in = 48;
  int seeds = 4096;
};

SolverConfig solver_config(const CommonSolveOptions& o) {
  SolverConfig cfg;
  cfg.tol = o.tol;
  cfg.max_iters = o.max_iters;
  cfg.schedule = o.schedule == "nash_moser" ? SolverConfig::Schedule::NashMoser
                                            : SolverConfig::Schedule::Fixed;
  return cfg;
}

BootstrapConfig bootstrap_config(const CommonSolveOptions& o) {
  BootstrapConfig b;
  b.n_modes = o.ntheta;
  b.order = o.order;
  b.delta = o.delta;
  b.burn_in = o.burn_in;
  b.n_seeds = o.seeds;
  return b;
}

void add_common(CLI::App* cmd, CommonSolveOptions& o) {
  cmd->add_option("--model", o.model, "model name")->required();
  cmd->add_option("--param", o.params, "model parameter as key=value (repeatable)");
  cmd->add_option("--ntheta", o.ntheta, "Fourier mode cap");
  cmd->add_option("--order", o.order, "Taylor order in s");
  cmd->add_option("--delta", o.delta, "s-domain radius");
  cmd->add_option("--tol", o.tol, "residual tolerance");
  cmd->add_option("--max-iters", o.max_iters, "iteration cap");
  cmd->add_option("--schedule", o.schedule, "smoothing schedule: fixed | nash_moser")
      ->check(CLI::IsMember({"fixed", "nash_moser"}));
  cmd->add_option("--burn-in", o.burn_in, "bootstrap settle iterations");
  cmd->add_option("--seeds", o.seeds, "bootstrap fan size");
}

int cmd_solve(const CommonSolveOptions& o, const std::string& out_path,
              const std::string& warm_start) {
  auto f = ModelRegistry::instance().create(o.model, parse_params(o.params));
  ConjugacyTriple u0;
  if (!warm_start.empty()) {
    u0 = load_solution(warm_start).triple;
  } else {
    u0 = initial_guess(*f, bootstrap_config(o));
  }
  SolveResult res = solve(*f, u0, solver_config(o));
  SolutionDocument doc;
  doc.model_name = o.model;
  doc.model_params = f->parameters();
  doc.triple = res.u;
  doc.report = condition_report(*f, res.u);
  save_solution(doc, out_path);
  std::cout << "converged in " << res.iterations << " iterations, residual "
            << res.final_residual << "\n";
  print_report(doc.report);
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

int cmd_verify(const std::string& model, const std::vector<std::string>& params,
               const std::string& sol_path, double residual_threshold, double frame_threshold) {
  SolutionDocument doc = load_solution(sol_path);
  std::string name = model.empty() ? doc.model_name : model;
  auto overrides = params.empty() ? doc.model_params : parse_params(params);
  auto f = ModelRegistry::instance().create(name, overrides);
  VerdictThresholds thr;
  thr.residual = residual_threshold;
  thr.frame_det = frame_threshold;
  ReportOptions ropts;
  ropts.thresholds = thr;
  auto rep = condition_report(*f, doc.triple, ropts);
  print_report(rep);
  auto verdict = verify_aposteriori(rep, thr);
  for (const auto& line : verdict.explanations) std::cout << line << "\n";
  std::cout << (verdict.pass ? "PASS" : "FAIL") << "\n";
  return verdict.pass ? 0 : 1;
}

int cmd_export(const std::string& sol_path, int grid, int sgrid, double smax,
               const std::string& format, const std::string& out_path) {
  if (format != "csv") throw CLI::ValidationError("only --format csv is supported");
  SolutionDocument doc = load_solution(sol_path);
  std::ofstream out(out_path);
  if (!out) throw BadInput("cannot open for writing: " + out_path);
  out << "theta,s,x,y\n";
  out.precision(17);
  for (int i = 0; i < grid; ++i) {
    double theta = static_cast<double>(i) / grid;
    for (int q = 0; q < sgrid; ++q) {
      double s = sgrid == 1 ? 0.0 : -smax + 2.0 * smax * q / (sgrid - 1);
      double x = doc.triple.W.x(theta, s);
      double y = doc.triple.W.y(theta, s);
      out << theta << "," << s << "," << x - std::floor(x) << "," << y << "\n";
    }
  }
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

int cmd_cohom(const std::string& l_path, const std::string& a_path, const std::string& eta_path,
              double tol) {
  PeriodicFunction l = periodic_from_json_file(l_path);
  PeriodicFunction eta = periodic_from_json_file(eta_path);
  CircleMap a(periodic_from_json_file(a_path, "periodic_coeffs"));
  auto sol = solve_cohomological(l, a, eta, tol);
  std::cout << periodic_to_json(sol.phi) << "\n";
  std::cout << "residual " << sol.residual << " rounds " << sol.rounds << " terms "
            << sol.terms << "\n";
  return 0;
}

int cmd_continue(const CommonSolveOptions& o, const std::string& sweep,
                 const std::string& outdir) {
  // --sweep param:start:end:step
  std::vector<std::string> parts;
  std::string token;
  std::istringstream ss(sweep);
  while (std::getline(ss, token, ':')) parts.push_back(token);
  if (parts.size() != 4) throw CLI::ValidationError("--sweep expects param:start:end:step");
  ContinuationConfig ccfg;
  ccfg.parameter = parts[0];
  ccfg.start = std::stod(parts[1]);
  ccfg.end = std::stod(parts[2]);
  ccfg.step = std::stod(parts[3]);

  std::filesystem::create_directories(outdir);
  auto base = parse_params(o.params);
  int count = 0;
  auto records = run_continuation(
      o.model, base, ccfg, solver_config(o), bootstrap_config(o), {},
      [&](const ContinuationRecord& rec) {
        char name[64];
        std::snprintf(name, sizeof(name), "sol_%s_%.6f.json", ccfg.parameter.c_str(), rec.value);
        SolutionDocument doc;
        doc.model_name = o.model;
        auto params = base;
        params[ccfg.parameter] = rec.value;
        auto f = ModelRegistry::instance().create(o.model, params);
        doc.model_params = f->parameters();
        doc.triple = rec.u;
        doc.report = rec.report;
        save_solution(doc, (std::filesystem::path(outdir) / name).string());
        std::cout << ccfg.parameter << " = " << rec.value << ": " << rec.iterations
                  << " iterations, residual " << rec.report.residual_x0 << "\n";
        ++count;
      });
  std::cout << "continuation finished with " << records.size() << " points, " << count
            << " files in " << outdir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariant circles and their stable foliations for 2-D maps"};
  app.require_subcommand(1);

  CommonSolveOptions solve_opts;
  std::string out_path = "solution.json";
  std::string warm_start;
  auto* sc_solve = app.add_subcommand("solve", "solve from a bootstrap or warm-start guess");
  add_common(sc_solve, solve_opts);
  sc_solve->add_option("--out", out_path, "output solution file");
  sc_solve->add_option("--warm-start", warm_start, "solution file used as initial guess");

  CommonSolveOptions cont_opts;
  std::string sweep, outdir = "continuation";
  auto* sc_cont = app.add_subcommand("continue", "sweep a parameter with warm starts");
  add_common(sc_cont, cont_opts);
  sc_cont->add_option("--sweep", sweep, "param:start:end:step")->required();
  sc_cont->add_option("--outdir", outdir, "output directory");

  std::string v_model;
  std::vector<std::string> v_params;
  std::string v_solution;
  double v_residual_threshold = 1e-8, v_frame_threshold = 1e-8;
  auto* sc_verify = app.add_subcommand("verify", "condition report for a stored solution");
  sc_verify->add_option("--model", v_model, "model name (defaults to the stored one)");
  sc_verify->add_option("--param", v_params, "model parameter overrides");
  sc_verify->add_option("--solution", v_solution, "solution file")->required();
  sc_verify->add_option("--residual-threshold", v_residual_threshold, "residual gate");
  sc_verify->add_option("--frame-threshold", v_frame_threshold, "frame determinant gate");

  std::string c_l, c_a, c_eta;
  double c_tol = 1e-12;
  auto* sc_cohom = app.add_subcommand("cohom", "solve phi = l (phi o a) + eta");
  sc_cohom->add_option("--l", c_l, "twist coefficient file")->required();
  sc_cohom->add_option("--a", c_a, "circle map coefficient file")->required();
  sc_cohom->add_option("--eta", c_eta, "forcing coefficient file")->required();
  sc_cohom->add_option("--tol", c_tol, "residual tolerance");

  std::string e_solution, e_format = "csv", e_out = "leaves.csv";
  int e_grid = 128, e_sgrid = 21;
  double e_smax = 0.3;
  auto* sc_export = app.add_subcommand("export", "sample stored leaves to CSV");
  sc_export->add_option("--solution", e_solution, "solution file")->required();
  sc_export->add_option("--grid", e_grid, "number of theta samples");
  sc_export->add_option("--sgrid", e_sgrid, "number of s samples");
  sc_export->add_option("--smax", e_smax, "largest |s| exported");
  sc_export->add_option("--format", e_format, "output format (csv)");
  sc_export->add_option("--out", e_out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (sc_solve->parsed()) return cmd_solve(solve_opts, out_path, warm_start);
    if (sc_cont->parsed()) return cmd_continue(cont_opts, sweep, outdir);
    if (sc_verify->parsed())
      return cmd_verify(v_model, v_params, v_solution, v_residual_threshold, v_frame_threshold);
    if (sc_cohom->parsed()) return cmd_cohom(c_l, c_a, c_eta, c_tol);
    if (sc_export->parsed())
      return cmd_export(e_solution, e_grid, e_sgrid, e_smax, e_format, e_out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
