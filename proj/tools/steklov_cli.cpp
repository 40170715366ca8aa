// Command-line front end for the weighted boundary-eigenvalue library.
// Subcommands: solve | optimize | homogenize | perturb | appendix | report.
// All numeric output is deterministic: fixed float formatting (17 significant
// digits), no timestamps, single-threaded linear algebra.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "emit.hpp"
#include "steklov.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Library status propagated with its message; mapped to the exit code later.
struct StatusError : std::runtime_error {
  int status;
  StatusError(int s, const std::string& msg) : std::runtime_error(msg), status(s) {}
};

void check(int rc) {
  if (rc != STK_OK) throw StatusError(rc, stk_last_error());
}

using CurvePtr = std::unique_ptr<stk_curve, void (*)(stk_curve*)>;
using DensityPtr = std::unique_ptr<stk_density, void (*)(stk_density*)>;
using SpectrumPtr = std::unique_ptr<stk_spectrum, void (*)(stk_spectrum*)>;
using OptPtr = std::unique_ptr<stk_opt_result, void (*)(stk_opt_result*)>;

json load_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

std::vector<double> number_list(const json& j, const char* key) {
  std::vector<double> out;
  if (!j.contains(key)) return out;
  for (const auto& v : j.at(key)) out.push_back(v.get<double>());
  return out;
}

CurvePtr load_curve(const fs::path& path, int nodes_flag) {
  const json j = load_json(path);
  const std::string kind = j.value("kind", "");
  int n_nodes = nodes_flag > 0 ? nodes_flag : j.value("n_nodes", 0);
  if (n_nodes <= 0) {
    throw ConfigError("curve needs n_nodes (JSON field or --nodes flag)");
  }
  stk_curve* raw = nullptr;
  if (kind == "disk") {
    check(stk_curve_create_disk(n_nodes, &raw));
  } else if (kind == "fourier") {
    const auto cc = number_list(j, "cos");
    const auto sc = number_list(j, "sin");
    check(stk_curve_create_fourier(cc.data(), static_cast<int>(cc.size()), sc.data(),
                                   static_cast<int>(sc.size()), n_nodes, &raw));
  } else {
    throw ConfigError("curve kind must be \"disk\" or \"fourier\", got \"" + kind +
                      "\"");
  }
  return CurvePtr(raw, &stk_curve_destroy);
}

DensityPtr density_from_values(const stk_curve* curve, const std::vector<double>& rho) {
  const int n = stk_curve_n_nodes(curve);
  if (static_cast<int>(rho.size()) != n) {
    throw ConfigError("density has " + std::to_string(rho.size()) + " values, curve has " +
                      std::to_string(n) + " nodes");
  }
  std::vector<double> w(n);
  check(stk_curve_get_quadrature(curve, w.data()));
  double mass = 0.0;
  for (int i = 0; i < n; ++i) mass += rho[i] * w[i];
  const double alpha = mass / stk_curve_perimeter(curve);
  stk_density* raw = nullptr;
  check(stk_density_create_from_values(curve, rho.data(), alpha, &raw));
  return DensityPtr(raw, &stk_density_destroy);
}

DensityPtr load_density_csv(const stk_curve* curve, const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path.string());
  std::vector<double> rho;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (first && line.find("theta") != std::string::npos) {
      first = false;
      continue;  // header row
    }
    first = false;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw ConfigError(path.string() + ": expected \"theta,rho\" rows");
    }
    try {
      rho.push_back(std::stod(line.substr(comma + 1)));
    } catch (const std::exception&) {
      throw ConfigError(path.string() + ": bad number in row \"" + line + "\"");
    }
  }
  return density_from_values(curve, rho);
}

DensityPtr load_density(const stk_curve* curve, const fs::path& path) {
  if (path.extension() != ".json") return load_density_csv(curve, path);
  const json j = load_json(path);
  const std::string kind = j.value("kind", "");
  stk_density* raw = nullptr;
  if (kind == "constant") {
    check(stk_density_create_constant(curve, j.at("alpha").get<double>(), &raw));
  } else if (kind == "arcs") {
    check(stk_density_create_arc_indicator(curve, j.at("alpha").get<double>(),
                                           j.at("n_arcs").get<int>(), &raw));
  } else if (kind == "fourier") {
    const auto cc = number_list(j, "cos");
    const auto sc = number_list(j, "sin");
    check(stk_density_create_fourier(curve, j.at("alpha").get<double>(),
                                     j.value("eps", 1.0), cc.data(),
                                     static_cast<int>(cc.size()), sc.data(),
                                     static_cast<int>(sc.size()), &raw));
  } else if (kind == "values") {
    std::vector<double> rho = number_list(j, "values");
    return density_from_values(curve, rho);
  } else {
    throw ConfigError(
        "density kind must be constant | arcs | fourier | values, got \"" + kind +
        "\"");
  }
  return DensityPtr(raw, &stk_density_destroy);
}

fs::path prepare_out_dir(const std::string& out) {
  if (out.empty()) throw ConfigError("--out directory is required");
  fs::path dir(out);
  fs::create_directories(dir);
  return dir;
}

void write_manifest(const fs::path& dir, const std::string& command,
                    emit::Json settings) {
  emit::Json m = emit::Json::object();
  m.set("command", emit::Json::string(command));
  m.set("version", emit::Json::string(stk_version()));
  m.set("settings", std::move(settings));
  emit::write_file(dir / "manifest.json", m.dump());
}

// ---- solve ----------------------------------------------------------------

struct SolveArgs {
  std::string curve_path;
  std::string density_path;
  int k = 4;
  int nodes = 0;
  std::string out;
};

int run_solve(const SolveArgs& a) {
  const CurvePtr curve = load_curve(a.curve_path, a.nodes);
  const DensityPtr density = load_density(curve.get(), a.density_path);

  stk_spectrum* sraw = nullptr;
  check(stk_solve(curve.get(), density.get(), a.k, &sraw));
  SpectrumPtr spectrum(sraw, &stk_spectrum_destroy);

  const int count = stk_spectrum_count(spectrum.get());
  const int n = stk_curve_n_nodes(curve.get());
  std::vector<double> lambda(count), rayleigh(count);
  check(stk_spectrum_get_eigenvalues(spectrum.get(), lambda.data()));
  check(stk_spectrum_get_rayleigh(spectrum.get(), rayleigh.data()));

  const fs::path dir = prepare_out_dir(a.out);

  emit::Json ev = emit::Json::object();
  ev.set("eigenvalues", emit::Json::array().push_numbers(lambda));
  ev.set("rayleigh", emit::Json::array().push_numbers(rayleigh));
  emit::Json mismatch = emit::Json::array();
  for (int i = 0; i < count; ++i) {
    mismatch.push(emit::Json::number(std::abs(lambda[i] - rayleigh[i]) /
                                     std::max(std::abs(lambda[i]), 1e-300)));
  }
  ev.set("rayleigh_rel_mismatch", std::move(mismatch));
  emit::Json clusters = emit::Json::array();
  const int n_clusters = stk_spectrum_cluster_count(spectrum.get());
  for (int c = 0; c < n_clusters; ++c) {
    std::vector<int> members(count);
    int size = 0;
    check(stk_spectrum_get_cluster(spectrum.get(), c, members.data(), count, &size));
    emit::Json cl = emit::Json::array();
    for (int i = 0; i < size; ++i) cl.push(emit::Json::integer(members[i]));
    clusters.push(std::move(cl));
  }
  ev.set("clusters", std::move(clusters));
  ev.set("alpha", emit::Json::number(stk_density_alpha(density.get())));
  ev.set("perimeter", emit::Json::number(stk_curve_perimeter(curve.get())));
  ev.set("n_nodes", emit::Json::integer(n));
  emit::write_file(dir / "eigenvalues.json", ev.dump());

  std::vector<std::string> header = {"theta"};
  for (int k = 1; k <= count; ++k) header.push_back("u_" + std::to_string(k));
  emit::Csv traces(header);
  std::vector<double> theta(n);
  check(stk_curve_get_nodes(curve.get(), theta.data(), nullptr, nullptr));
  std::vector<std::vector<double>> u(count, std::vector<double>(n));
  for (int k = 0; k < count; ++k)
    check(stk_spectrum_get_trace(spectrum.get(), k + 1, u[k].data()));
  for (int i = 0; i < n; ++i) {
    std::vector<double> row = {theta[i]};
    for (int k = 0; k < count; ++k) row.push_back(u[k][i]);
    traces.row(row);
  }
  emit::write_file(dir / "traces.csv", traces.text());

  emit::Json settings = emit::Json::object();
  settings.set("curve", emit::Json::string(a.curve_path));
  settings.set("density", emit::Json::string(a.density_path));
  settings.set("k", emit::Json::integer(a.k));
  settings.set("nodes", emit::Json::integer(n));
  write_manifest(dir, "solve", std::move(settings));

  std::printf("wrote %s (%d eigenvalues)\n", (dir / "eigenvalues.json").string().c_str(),
              count);
  return 0;
}

// ---- optimize -------------------------------------------------------------

struct OptimizeArgs {
  double alpha = 0.5;
  int k = 1;
  std::string direction = "min";
  int seeds = 5;
  unsigned long long seed = 0;
  int nodes = 0;
  int max_iters = 0;
  std::string out;
};

int run_optimize(const OptimizeArgs& a) {
  stk_optimize_settings st;
  stk_optimize_settings_default(&st);
  st.n_seeds = a.seeds;
  st.seed = a.seed;
  if (a.nodes > 0) st.n_nodes = a.nodes;
  if (a.max_iters > 0) st.max_iters = a.max_iters;
  const int dir_code = a.direction == "max" ? STK_MAXIMIZE : STK_MINIMIZE;

  stk_opt_result* raw = nullptr;
  check(stk_optimize(a.alpha, a.k, dir_code, &st, &raw));
  OptPtr result(raw, &stk_opt_result_destroy);

  const fs::path dir = prepare_out_dir(a.out);

  const int n = stk_opt_n_nodes(result.get());
  std::vector<double> theta(n), rho(n);
  check(stk_opt_get_density(result.get(), theta.data(), rho.data()));
  emit::Csv density({"theta", "rho"});
  for (int i = 0; i < n; ++i) density.row({theta[i], rho[i]});
  emit::write_file(dir / "density.csv", density.text());

  double level = 0, vz = 0, vi = 0, vo = 0, tol = 0;
  int pass = 0;
  check(stk_opt_certificate(result.get(), &level, &vz, &vi, &vo, &tol, &pass));
  emit::Json cert = emit::Json::object();
  cert.set("direction", emit::Json::string(a.direction));
  cert.set("level", emit::Json::number(level));
  cert.set("violation_zero_band", emit::Json::number(vz));
  cert.set("violation_interior", emit::Json::number(vi));
  cert.set("violation_one_band", emit::Json::number(vo));
  cert.set("tolerance", emit::Json::number(tol));
  cert.set("pass", emit::Json::boolean(pass != 0));
  emit::write_file(dir / "optimality.json", cert.dump());

  const int hist = stk_opt_history_size(result.get());
  std::vector<double> objectives(hist);
  check(stk_opt_get_history(result.get(), objectives.data()));
  std::vector<double> steps(hist > 0 ? hist - 1 : 0);
  if (!steps.empty()) check(stk_opt_get_step_sizes(result.get(), steps.data()));
  const int n_seeds = stk_opt_seed_count(result.get());
  std::vector<double> seed_obj(n_seeds);
  check(stk_opt_get_seed_objectives(result.get(), seed_obj.data()));

  emit::Json settings = emit::Json::object();
  settings.set("alpha", emit::Json::number(a.alpha));
  settings.set("k", emit::Json::integer(a.k));
  settings.set("direction", emit::Json::string(a.direction));
  settings.set("seeds", emit::Json::integer(a.seeds));
  settings.set("seed", emit::Json::integer(static_cast<long long>(a.seed)));
  settings.set("n_nodes", emit::Json::integer(st.n_nodes));
  settings.set("n_modes", emit::Json::integer(st.n_modes));
  settings.set("final_n_modes", emit::Json::integer(st.final_n_modes));
  settings.set("max_iters", emit::Json::integer(st.max_iters));

  emit::Json m = emit::Json::object();
  m.set("command", emit::Json::string("optimize"));
  m.set("version", emit::Json::string(stk_version()));
  m.set("settings", std::move(settings));
  m.set("objective", emit::Json::number(stk_opt_objective(result.get())));
  m.set("termination", emit::Json::string(stk_opt_termination(result.get())));
  m.set("converged", emit::Json::boolean(stk_opt_converged(result.get()) != 0));
  m.set("iterations", emit::Json::integer(stk_opt_iterations(result.get())));
  m.set("winning_seed", emit::Json::integer(stk_opt_seed_index(result.get())));
  m.set("seed_objectives", emit::Json::array().push_numbers(seed_obj));
  m.set("objective_history", emit::Json::array().push_numbers(objectives));
  m.set("step_sizes", emit::Json::array().push_numbers(steps));
  m.set("certificate_pass", emit::Json::boolean(pass != 0));
  emit::write_file(dir / "manifest.json", m.dump());

  std::printf("%s lambda_%d: objective %.12g (%s, certificate %s)\n",
              a.direction == "max" ? "maximized" : "minimized", a.k,
              stk_opt_objective(result.get()), stk_opt_termination(result.get()),
              pass ? "pass" : "fail");
  return 0;
}

// ---- homogenize -----------------------------------------------------------

struct HomogenizeArgs {
  double alpha = 0.5;
  int k = 1;
  std::vector<int> narcs = {2, 4, 8, 16, 32};
  std::string out;
};

int run_homogenize(const HomogenizeArgs& a) {
  const int count = static_cast<int>(a.narcs.size());
  if (count == 0) throw ConfigError("--narcs needs at least one entry");
  std::vector<double> lambda(count);
  double limit = 0.0;
  check(stk_homogenize(a.alpha, a.k, a.narcs.data(), count, lambda.data(), &limit));

  const fs::path dir = prepare_out_dir(a.out);
  emit::Csv sweep({"n_arcs", "lambda", "limit", "deviation"});
  for (int i = 0; i < count; ++i) {
    sweep.raw_row({std::to_string(a.narcs[i]), emit::g17(lambda[i]), emit::g17(limit),
                   emit::g17(std::abs(lambda[i] - limit))});
  }
  emit::write_file(dir / "sweep.csv", sweep.text());

  emit::Json settings = emit::Json::object();
  settings.set("alpha", emit::Json::number(a.alpha));
  settings.set("k", emit::Json::integer(a.k));
  emit::Json arcs = emit::Json::array();
  for (int v : a.narcs) arcs.push(emit::Json::integer(v));
  settings.set("narcs", std::move(arcs));
  write_manifest(dir, "homogenize", std::move(settings));

  std::printf("wrote %s (limit %.12g)\n", (dir / "sweep.csv").string().c_str(), limit);
  return 0;
}

// ---- perturb --------------------------------------------------------------

struct PerturbArgs {
  double alpha = 0.5;
  int j = 1;
  double a = 1.0;
  double b = 0.0;
};

int run_perturb(const PerturbArgs& p) {
  double s_minus = 0, s_plus = 0;
  check(stk_fourier_shift(p.j, p.alpha, p.a, p.b, &s_minus, &s_plus));
  std::printf("constant density alpha = %.17g, perturbation %.17g*cos(%d theta) + "
              "%.17g*sin(%d theta)\n",
              p.alpha, p.a, 2 * p.j, p.b, 2 * p.j);
  std::printf("analytic first-order slopes of (lambda_%d, lambda_%d): %.17g, %.17g\n",
              2 * p.j - 1, 2 * p.j, s_minus, s_plus);

  const int n_nodes = 256;
  stk_curve* craw = nullptr;
  check(stk_curve_create_disk(n_nodes, &craw));
  CurvePtr curve(craw, &stk_curve_destroy);
  stk_density* draw = nullptr;
  check(stk_density_create_constant(curve.get(), p.alpha, &draw));
  DensityPtr density(draw, &stk_density_destroy);

  std::vector<double> theta(n_nodes);
  check(stk_curve_get_nodes(curve.get(), theta.data(), nullptr, nullptr));
  std::vector<double> delta(n_nodes);
  for (int i = 0; i < n_nodes; ++i) {
    delta[i] = p.a * std::cos(2 * p.j * theta[i]) + p.b * std::sin(2 * p.j * theta[i]);
  }
  const std::vector<double> eps = {1e-2, 1e-3};
  const int max_m = 8;
  std::vector<double> analytic(max_m), fd(eps.size() * max_m);
  int m = 0;
  double order = 0.0;
  check(stk_fd_check(curve.get(), density.get(), 2 * p.j - 1, delta.data(), eps.data(),
                     static_cast<int>(eps.size()), max_m, analytic.data(), fd.data(), &m,
                     &order));
  std::printf("cluster size %d; analytic slopes:", m);
  for (int i = 0; i < m; ++i) std::printf(" %.17g", analytic[i]);
  std::printf("\n");
  for (std::size_t e = 0; e < eps.size(); ++e) {
    double err = 0.0;
    std::printf("central differences at eps = %g:", eps[e]);
    for (int i = 0; i < m; ++i) {
      std::printf(" %.17g", fd[e * m + i]);
      err = std::max(err, std::abs(fd[e * m + i] - analytic[i]));
    }
    std::printf("   (max abs err %.3g)\n", err);
  }
  std::printf("observed convergence order: %.3f\n", order);
  return 0;
}

// ---- appendix -------------------------------------------------------------

int run_appendix(const std::string& out) {
  stk_sl_certificate_report rep;
  const int rc = stk_sl_certificate(&rep);
  if (rc != STK_OK && rc != STK_ERR_CERTIFICATE) check(rc);

  std::printf("interval counterexample: lambda_2(0) = %.12g, g(0) = %.12g, "
              "g(0.1) = %.12g, margin = %.6g => reciprocal map is %s\n",
              rep.lambda2_t0, rep.g0, rep.g01, rep.margin,
              rep.pass ? "non-convex (certified)" : "NOT certified");

  if (!out.empty()) {
    const fs::path dir = prepare_out_dir(out);
    emit::Json c = emit::Json::object();
    c.set("lambda2_t0", emit::Json::number(rep.lambda2_t0));
    c.set("closed_form_residual", emit::Json::number(rep.closed_form_residual));
    c.set("symmetry_residual", emit::Json::number(rep.symmetry_residual));
    c.set("endpoint_residual", emit::Json::number(rep.endpoint_residual));
    c.set("g0", emit::Json::number(rep.g0));
    c.set("g01", emit::Json::number(rep.g01));
    c.set("g1", emit::Json::number(rep.g1));
    c.set("margin", emit::Json::number(rep.margin));
    c.set("witness_t", emit::Json::array()
                           .push(emit::Json::number(0.0))
                           .push(emit::Json::number(0.1))
                           .push(emit::Json::number(1.0)));
    c.set("pass", emit::Json::boolean(rep.pass != 0));
    emit::write_file(dir / "certificate.json", c.dump());

    emit::Csv curve({"t", "lambda_2", "reciprocal"});
    for (int i = 0; i <= 100; ++i) {
      const double t = i / 100.0;
      double lambda = 0.0;
      check(stk_sl_eigenvalue(2, t, &lambda));
      curve.row({t, lambda, 1.0 / lambda});
    }
    emit::write_file(dir / "lambda2_curve.csv", curve.text());
    write_manifest(dir, "appendix", emit::Json::object());
  }
  return rep.pass ? 0 : 1;
}

// ---- report ---------------------------------------------------------------

int run_report(const std::string& in) {
  const fs::path dir(in);
  const fs::path ev_path = dir / "eigenvalues.json";
  if (!fs::exists(ev_path)) {
    throw ConfigError("no eigenvalues.json under " + dir.string());
  }
  const json ev = load_json(ev_path);
  const double alpha = ev.at("alpha").get<double>();
  const double perimeter = ev.at("perimeter").get<double>();
  const std::vector<double> lambda = ev.at("eigenvalues").get<std::vector<double>>();

  std::printf("spectrum report: %zu eigenvalues, alpha = %.6g, perimeter = %.6g\n",
              lambda.size(), alpha, perimeter);
  std::printf("%4s %18s %18s %10s %18s %12s\n", "k", "lambda", "weyl", "ratio",
              "upper_bound", "margin");
  bool ok = true;
  double min_margin = 0.0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    const int k = static_cast<int>(i) + 1;
    double weyl = 0.0;
    check(stk_weyl_value(alpha, k, &weyl));
    const double bound = 2.0 * kPi * k / (alpha * perimeter);
    const double margin = bound - lambda[i];
    if (i == 0 || margin < min_margin) min_margin = margin;
    if (margin < -1e-6) ok = false;
    std::printf("%4d %18.12g %18.12g %10.6f %18.12g %12.4e\n", k, lambda[i], weyl,
                lambda[i] / weyl, bound, margin);
  }
  if (fs::exists(dir / "sweep.csv")) {
    std::ifstream sweep(dir / "sweep.csv");
    std::string line;
    std::printf("\nhomogenization sweep:\n");
    while (std::getline(sweep, line)) std::printf("  %s\n", line.c_str());
  }
  std::printf("eigenvalue upper bound: %s (min margin %.4e)\n",
              ok ? "satisfied" : "VIOLATED", min_margin);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  // Deterministic, reproducible numerics: one BLAS thread, one OpenMP thread.
  setenv("OPENBLAS_NUM_THREADS", "1", 1);
  setenv("OMP_NUM_THREADS", "1", 1);

  CLI::App app{"weighted boundary-eigenvalue solver and extremal-density optimizer"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand(
      "solve", "solve the weighted eigenproblem for a curve + density");
  solve->add_option("--curve", solve_args.curve_path, "curve descriptor (JSON)")
      ->required();
  solve->add_option("--density", solve_args.density_path,
                    "density descriptor (JSON) or theta,rho CSV")
      ->required();
  solve->add_option("--k", solve_args.k, "number of eigenvalues");
  solve->add_option("--nodes", solve_args.nodes,
                    "override the curve descriptor's node count");
  solve->add_option("--out", solve_args.out, "output directory")->required();

  OptimizeArgs opt_args;
  CLI::App* optimize =
      app.add_subcommand("optimize", "extremize lambda_k over admissible densities");
  optimize->add_option("--alpha", opt_args.alpha, "mass fraction in (0,1]");
  optimize->add_option("--k", opt_args.k, "eigenvalue index (1-based)");
  optimize->add_option("--direction", opt_args.direction, "min or max")
      ->check(CLI::IsMember({"min", "max"}));
  optimize->add_option("--seeds", opt_args.seeds, "number of multi-start seeds");
  optimize->add_option("--seed", opt_args.seed, "base seed for randomized starts");
  optimize->add_option("--nodes", opt_args.nodes, "iteration grid size");
  optimize->add_option("--max-iters", opt_args.max_iters, "iteration cap per seed");
  optimize->add_option("--out", opt_args.out, "output directory")->required();

  HomogenizeArgs hom_args;
  CLI::App* homogenize = app.add_subcommand(
      "homogenize", "sweep lambda_k of symmetric n-arc indicator densities");
  homogenize->add_option("--alpha", hom_args.alpha, "mass fraction in (0,1]");
  homogenize->add_option("--k", hom_args.k, "eigenvalue index (1-based)");
  homogenize->add_option("--narcs", hom_args.narcs, "comma-separated arc counts")
      ->delimiter(',');
  homogenize->add_option("--out", hom_args.out, "output directory")->required();

  PerturbArgs pert_args;
  CLI::App* perturb = app.add_subcommand(
      "perturb", "first-order splitting of a constant-density eigenvalue pair");
  perturb->add_option("--alpha", pert_args.alpha, "mass fraction in (0,1]");
  perturb->add_option("--j", pert_args.j, "pair index: perturbs (lambda_{2j-1}, lambda_{2j})");
  perturb->add_option("--a", pert_args.a, "cos(2j theta) coefficient");
  perturb->add_option("--b", pert_args.b, "sin(2j theta) coefficient");

  std::string appendix_out;
  CLI::App* appendix = app.add_subcommand(
      "appendix", "certify non-convexity of the interval counterexample");
  appendix->add_option("--out", appendix_out, "optional output directory");

  std::string report_in;
  CLI::App* report =
      app.add_subcommand("report", "summarize a solve/homogenize output directory");
  report->add_option("--in", report_in, "directory with eigenvalues.json")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // help/version exit 0; any parse problem is a config error
  }

  try {
    if (solve->parsed()) return run_solve(solve_args);
    if (optimize->parsed()) return run_optimize(opt_args);
    if (homogenize->parsed()) return run_homogenize(hom_args);
    if (perturb->parsed()) return run_perturb(pert_args);
    if (appendix->parsed()) return run_appendix(appendix_out);
    if (report->parsed()) return run_report(report_in);
  } catch (const StatusError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    if (e.status == STK_ERR_SOLVER) return 3;
    if (e.status == STK_ERR_CERTIFICATE) return 1;
    return 2;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const json::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
