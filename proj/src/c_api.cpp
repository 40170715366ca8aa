#include "steklov.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "steklov/bem.hpp"
#include "steklov/density.hpp"
#include "steklov/disk_analytic.hpp"
#include "steklov/experiments.hpp"
#include "steklov/geometry.hpp"
#include "steklov/optimality.hpp"
#include "steklov/optimize.hpp"
#include "steklov/perturbation.hpp"
#include "steklov/spectrum.hpp"
#include "steklov/sturm_liouville.hpp"

namespace {

thread_local std::string g_last_error;

void set_error(const char* what) { g_last_error = what ? what : "unknown error"; }

// Maps exceptions from the C++ core onto status codes; the OK path runs fn.
template <typename Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const steklov::InvalidArgument& e) {
    set_error(e.what());
    return STK_ERR_INVALID;
  } catch (const steklov::SolverError& e) {
    set_error(e.what());
    return STK_ERR_SOLVER;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return STK_ERR_SOLVER;
  } catch (const std::exception& e) {
    set_error(e.what());
    return STK_ERR_SOLVER;
  }
}

int require(bool ok, const char* what) {
  if (!ok) {
    set_error(what);
    return STK_ERR_INVALID;
  }
  return STK_OK;
}

steklov::Direction to_direction(int direction) {
  if (direction != STK_MINIMIZE && direction != STK_MAXIMIZE) {
    throw steklov::InvalidArgument("direction must be STK_MINIMIZE or STK_MAXIMIZE");
  }
  return direction == STK_MINIMIZE ? steklov::Direction::minimize
                                   : steklov::Direction::maximize;
}

}  // namespace

struct stk_curve {
  steklov::BoundaryCurve impl;
};
struct stk_density {
  steklov::Density impl;
};
struct stk_spectrum {
  steklov::SpectralResult impl;
};
struct stk_opt_result {
  steklov::OptimizeTrace impl;
  stk_spectrum spectrum_view;
};

extern "C" {

const char* stk_version(void) { return steklov::version; }

const char* stk_last_error(void) { return g_last_error.c_str(); }

int stk_curve_create_disk(int n_nodes, stk_curve** out) {
  if (int rc = require(out != nullptr, "out must not be null")) return rc;
  return guarded([&] {
    *out = new stk_curve{steklov::make_disk(n_nodes)};
    return STK_OK;
  });
}

int stk_curve_create_fourier(const double* cos_c, int n_cos, const double* sin_c,
                             int n_sin, int n_nodes, stk_curve** out) {
  if (int rc = require(out != nullptr, "out must not be null")) return rc;
  if (int rc = require(n_cos >= 0 && n_sin >= 0, "coefficient counts must be >= 0"))
    return rc;
  if (int rc = require((cos_c != nullptr || n_cos == 0) && (sin_c != nullptr || n_sin == 0),
                       "null coefficient array with nonzero count"))
    return rc;
  return guarded([&] {
    std::vector<double> cc(cos_c, cos_c + n_cos), sc(sin_c, sin_c + n_sin);
    *out = new stk_curve{steklov::make_fourier_curve(cc, sc, n_nodes)};
    return STK_OK;
  });
}

void stk_curve_destroy(stk_curve* curve) { delete curve; }

int stk_curve_n_nodes(const stk_curve* curve) { return curve ? curve->impl.n_nodes : 0; }

double stk_curve_perimeter(const stk_curve* curve) {
  return curve ? curve->impl.perimeter : 0.0;
}

int stk_curve_get_nodes(const stk_curve* curve, double* theta, double* x, double* y) {
  if (int rc = require(curve != nullptr, "curve must not be null")) return rc;
  const int n = curve->impl.n_nodes;
  for (int i = 0; i < n; ++i) {
    if (theta) theta[i] = curve->impl.theta[i];
    if (x) x[i] = curve->impl.x[i];
    if (y) y[i] = curve->impl.y[i];
  }
  return STK_OK;
}

int stk_curve_get_quadrature(const stk_curve* curve, double* out) {
  if (int rc = require(curve && out, "curve and out must not be null")) return rc;
  Eigen::Map<Eigen::ArrayXd>(out, curve->impl.n_nodes) = curve->impl.weight;
  return STK_OK;
}

int stk_density_create_constant(const stk_curve* curve, double alpha, stk_density** out) {
  if (int rc = require(curve && out, "curve and out must not be null")) return rc;
  return guarded([&] {
    *out = new stk_density{steklov::make_constant(curve->impl, alpha)};
    return STK_OK;
  });
}

int stk_density_create_arc_indicator(const stk_curve* curve, double alpha, int n_arcs,
                                     stk_density** out) {
  if (int rc = require(curve && out, "curve and out must not be null")) return rc;
  return guarded([&] {
    *out = new stk_density{steklov::make_arc_indicator(curve->impl, alpha, n_arcs)};
    return STK_OK;
  });
}

int stk_density_create_fourier(const stk_curve* curve, double alpha, double eps,
                               const double* cos_c, int n_cos, const double* sin_c,
                               int n_sin, stk_density** out) {
  if (int rc = require(curve && out, "curve and out must not be null")) return rc;
  if (int rc = require((cos_c || n_cos == 0) && (sin_c || n_sin == 0),
                       "null coefficient array with nonzero count"))
    return rc;
  return guarded([&] {
    std::vector<double> cc(cos_c, cos_c + n_cos), sc(sin_c, sin_c + n_sin);
    *out = new stk_density{steklov::make_fourier_perturbed(curve->impl, alpha, eps, cc, sc)};
    return STK_OK;
  });
}

int stk_density_create_from_values(const stk_curve* curve, const double* values,
                                   double alpha, stk_density** out) {
  if (int rc = require(curve && values && out, "arguments must not be null")) return rc;
  return guarded([&] {
    Eigen::Map<const Eigen::ArrayXd> vals(values, curve->impl.n_nodes);
    *out = new stk_density{steklov::make_from_values(curve->impl, vals, alpha)};
    return STK_OK;
  });
}

int stk_density_project(const stk_curve* curve, const double* raw, double alpha,
                        stk_density** out) {
  if (int rc = require(curve && raw && out, "arguments must not be null")) return rc;
  return guarded([&] {
    Eigen::Map<const Eigen::ArrayXd> vals(raw, curve->impl.n_nodes);
    *out = new stk_density{steklov::project_admissible(curve->impl, vals, alpha)};
    return STK_OK;
  });
}

void stk_density_destroy(stk_density* density) { delete density; }

double stk_density_alpha(const stk_density* density) {
  return density ? density->impl.alpha : 0.0;
}

int stk_density_get_values(const stk_density* density, double* out) {
  if (int rc = require(density && out, "arguments must not be null")) return rc;
  Eigen::Map<Eigen::ArrayXd>(out, density->impl.values.size()) = density->impl.values;
  return STK_OK;
}

int stk_solve(const stk_curve* curve, const stk_density* density, int k_max,
              stk_spectrum** out) {
  if (int rc = require(curve && density && out, "arguments must not be null")) return rc;
  return guarded([&] {
    const steklov::LayerOperators ops = steklov::assemble(curve->impl);
    *out = new stk_spectrum{steklov::solve_weighted(ops, density->impl, k_max)};
    return STK_OK;
  });
}

int stk_solve_galerkin(const stk_curve* curve, const stk_density* density, int n_modes,
                       int k_max, stk_spectrum** out) {
  if (int rc = require(curve && density && out, "arguments must not be null")) return rc;
  return guarded([&] {
    *out = new stk_spectrum{
        steklov::disk_galerkin(curve->impl, density->impl, n_modes, k_max)};
    return STK_OK;
  });
}

void stk_spectrum_destroy(stk_spectrum* spectrum) { delete spectrum; }

int stk_spectrum_count(const stk_spectrum* spectrum) {
  return spectrum ? static_cast<int>(spectrum->impl.eigenvalues.size()) : 0;
}

int stk_spectrum_get_eigenvalues(const stk_spectrum* spectrum, double* out) {
  if (int rc = require(spectrum && out, "arguments must not be null")) return rc;
  Eigen::Map<Eigen::VectorXd>(out, spectrum->impl.eigenvalues.size()) =
      spectrum->impl.eigenvalues;
  return STK_OK;
}

int stk_spectrum_get_rayleigh(const stk_spectrum* spectrum, double* out) {
  if (int rc = require(spectrum && out, "arguments must not be null")) return rc;
  Eigen::Map<Eigen::VectorXd>(out, spectrum->impl.rayleigh.size()) =
      spectrum->impl.rayleigh;
  return STK_OK;
}

int stk_spectrum_get_trace(const stk_spectrum* spectrum, int k, double* out) {
  if (int rc = require(spectrum && out, "arguments must not be null")) return rc;
  if (int rc = require(k >= 1 && k <= spectrum->impl.traces.cols(), "k out of range"))
    return rc;
  Eigen::Map<Eigen::VectorXd>(out, spectrum->impl.traces.rows()) =
      spectrum->impl.traces.col(k - 1);
  return STK_OK;
}

int stk_spectrum_cluster_count(const stk_spectrum* spectrum) {
  return spectrum ? static_cast<int>(spectrum->impl.clusters.size()) : 0;
}

int stk_spectrum_get_cluster(const stk_spectrum* spectrum, int index, int* members,
                             int cap, int* size) {
  if (int rc = require(spectrum && members && size, "arguments must not be null"))
    return rc;
  if (int rc = require(index >= 0 &&
                           index < static_cast<int>(spectrum->impl.clusters.size()),
                       "cluster index out of range"))
    return rc;
  const std::vector<int>& cl = spectrum->impl.clusters[index];
  *size = static_cast<int>(cl.size());
  for (int i = 0; i < *size && i < cap; ++i) members[i] = cl[i];
  return STK_OK;
}

int stk_fourier_shift(int j, double alpha, double a, double b, double* slope_minus,
                      double* slope_plus) {
  if (int rc = require(slope_minus && slope_plus, "outputs must not be null")) return rc;
  return guarded([&] {
    const auto [lo, hi] = steklov::fourier_shift(j, alpha, a, b);
    *slope_minus = lo;
    *slope_plus = hi;
    return STK_OK;
  });
}

int stk_fd_check(const stk_curve* curve, const stk_density* density, int k,
                 const double* delta_rho, const double* eps_list, int n_eps, int max_m,
                 double* analytic, double* fd, int* m_out, double* observed_order) {
  if (int rc = require(curve && density && delta_rho && eps_list && analytic && fd &&
                           m_out && observed_order,
                       "arguments must not be null"))
    return rc;
  if (int rc = require(n_eps >= 1 && max_m >= 1, "n_eps and max_m must be >= 1"))
    return rc;
  return guarded([&] {
    Eigen::Map<const Eigen::ArrayXd> dr(delta_rho, curve->impl.n_nodes);
    std::vector<double> eps(eps_list, eps_list + n_eps);
    const steklov::FdReport rep = steklov::fd_check(curve->impl, density->impl, k, dr, eps);
    const int m = static_cast<int>(rep.cluster.size());
    *m_out = m;
    if (m > max_m) {
      set_error("cluster larger than max_m");
      return STK_ERR_INVALID;
    }
    for (int i = 0; i < m; ++i) analytic[i] = rep.analytic[i];
    for (int e = 0; e < n_eps; ++e)
      for (int i = 0; i < m; ++i) fd[e * m + i] = rep.fd(e, i);
    *observed_order = rep.observed_order;
    return STK_OK;
  });
}

int stk_check_optimality(const stk_spectrum* spectrum, int cluster_index, int direction,
                         double band_tol, double viol_tol, double* level,
                         double* violation_zero, double* violation_interior,
                         double* violation_one, double* tol_effective, int* pass,
                         double* f_values) {
  if (int rc = require(spectrum && level && violation_zero && violation_interior &&
                           violation_one && tol_effective && pass,
                       "arguments must not be null"))
    return rc;
  return guarded([&] {
    const steklov::OptimalityReport rep =
        steklov::check_optimality(spectrum->impl, spectrum->impl.density, cluster_index,
                                  to_direction(direction), band_tol, viol_tol);
    *level = rep.c;
    *violation_zero = rep.violation_zero;
    *violation_interior = rep.violation_interior;
    *violation_one = rep.violation_one;
    *tol_effective = rep.tol_effective;
    *pass = rep.pass ? 1 : 0;
    if (f_values) Eigen::Map<Eigen::ArrayXd>(f_values, rep.f.size()) = rep.f;
    return STK_OK;
  });
}

void stk_optimize_settings_default(stk_optimize_settings* settings) {
  if (!settings) return;
  const steklov::OptimizeSettings d;
  settings->n_nodes = d.n_nodes;
  settings->n_modes = d.n_modes;
  settings->final_n_modes = d.final_n_modes;
  settings->cluster_rel_tol = d.cluster_rel_tol;
  settings->max_iters = d.max_iters;
  settings->step_tol = d.step_tol;
  settings->obj_tol = d.obj_tol;
  settings->obj_stall_iters = d.obj_stall_iters;
  settings->armijo = d.armijo;
  settings->shrink = d.shrink;
  settings->t0 = d.t0;
  settings->n_seeds = d.n_seeds;
  settings->seed = d.seed;
}

int stk_optimize(double alpha, int k, int direction,
                 const stk_optimize_settings* settings, stk_opt_result** out) {
  if (int rc = require(out != nullptr, "out must not be null")) return rc;
  return guarded([&] {
    steklov::ExtremalProblem problem;
    problem.alpha = alpha;
    problem.k = k;
    problem.direction = to_direction(direction);
    if (settings) {
      problem.settings.n_nodes = settings->n_nodes;
      problem.settings.n_modes = settings->n_modes;
      problem.settings.final_n_modes = settings->final_n_modes;
      problem.settings.cluster_rel_tol = settings->cluster_rel_tol;
      problem.settings.max_iters = settings->max_iters;
      problem.settings.step_tol = settings->step_tol;
      problem.settings.obj_tol = settings->obj_tol;
      problem.settings.obj_stall_iters = settings->obj_stall_iters;
      problem.settings.armijo = settings->armijo;
      problem.settings.shrink = settings->shrink;
      problem.settings.t0 = settings->t0;
      problem.settings.n_seeds = settings->n_seeds;
      problem.settings.seed = settings->seed;
    }
    problem.curve = steklov::make_disk(problem.settings.n_nodes);
    auto* res = new stk_opt_result;
    res->impl = steklov::optimize(problem);
    res->spectrum_view.impl = res->impl.final_spectrum;
    *out = res;
    return STK_OK;
  });
}

void stk_opt_result_destroy(stk_opt_result* result) { delete result; }

double stk_opt_objective(const stk_opt_result* result) {
  return result ? result->impl.final_objective : 0.0;
}

int stk_opt_iterations(const stk_opt_result* result) {
  return result ? result->impl.iterations : 0;
}

int stk_opt_converged(const stk_opt_result* result) {
  return result && result->impl.converged ? 1 : 0;
}

const char* stk_opt_termination(const stk_opt_result* result) {
  return result ? result->impl.termination.c_str() : "";
}

int stk_opt_seed_index(const stk_opt_result* result) {
  return result ? result->impl.seed_index : -1;
}

int stk_opt_history_size(const stk_opt_result* result) {
  return result ? static_cast<int>(result->impl.objectives.size()) : 0;
}

int stk_opt_get_history(const stk_opt_result* result, double* objectives) {
  if (int rc = require(result && objectives, "arguments must not be null")) return rc;
  for (std::size_t i = 0; i < result->impl.objectives.size(); ++i)
    objectives[i] = result->impl.objectives[i];
  return STK_OK;
}

int stk_opt_get_step_sizes(const stk_opt_result* result, double* steps) {
  if (int rc = require(result && steps, "arguments must not be null")) return rc;
  for (std::size_t i = 0; i < result->impl.step_sizes.size(); ++i)
    steps[i] = result->impl.step_sizes[i];
  return STK_OK;
}

int stk_opt_seed_count(const stk_opt_result* result) {
  return result ? static_cast<int>(result->impl.seed_objectives.size()) : 0;
}

int stk_opt_get_seed_objectives(const stk_opt_result* result, double* objectives) {
  if (int rc = require(result && objectives, "arguments must not be null")) return rc;
  for (std::size_t i = 0; i < result->impl.seed_objectives.size(); ++i)
    objectives[i] = result->impl.seed_objectives[i];
  return STK_OK;
}

int stk_opt_n_nodes(const stk_opt_result* result) {
  return result ? static_cast<int>(result->impl.final_density.values.size()) : 0;
}

int stk_opt_get_density(const stk_opt_result* result, double* theta, double* rho) {
  if (int rc = require(result != nullptr, "result must not be null")) return rc;
  const auto& tr = result->impl;
  const int n = static_cast<int>(tr.final_density.values.size());
  for (int i = 0; i < n; ++i) {
    if (theta) theta[i] = tr.final_spectrum.curve.theta[i];
    if (rho) rho[i] = tr.final_density.values[i];
  }
  return STK_OK;
}

const stk_spectrum* stk_opt_spectrum(const stk_opt_result* result) {
  return result ? &result->spectrum_view : nullptr;
}

int stk_opt_certificate(const stk_opt_result* result, double* level,
                        double* violation_zero, double* violation_interior,
                        double* violation_one, double* tol_effective, int* pass) {
  if (int rc = require(result && level && violation_zero && violation_interior &&
                           violation_one && tol_effective && pass,
                       "arguments must not be null"))
    return rc;
  const steklov::OptimalityReport& rep = result->impl.certificate;
  *level = rep.c;
  *violation_zero = rep.violation_zero;
  *violation_interior = rep.violation_interior;
  *violation_one = rep.violation_one;
  *tol_effective = rep.tol_effective;
  *pass = rep.pass ? 1 : 0;
  return STK_OK;
}

int stk_homogenize(double alpha, int k, const int* n_arcs, int count, double* lambda_out,
                   double* limit) {
  if (int rc = require(n_arcs && lambda_out && limit && count >= 1,
                       "arguments must not be null and count >= 1"))
    return rc;
  return guarded([&] {
    std::vector<int> ns(n_arcs, n_arcs + count);
    const auto rows = steklov::homogenization_sweep(alpha, k, ns);
    for (std::size_t i = 0; i < rows.size(); ++i) lambda_out[i] = rows[i].lambda;
    *limit = rows.front().limit;
    return STK_OK;
  });
}

int stk_weyl_value(double alpha, int k, double* weyl) {
  if (int rc = require(weyl != nullptr, "weyl must not be null")) return rc;
  return guarded([&] {
    if (k < 1) throw steklov::InvalidArgument("k must be >= 1");
    if (!(alpha > 0.0 && alpha <= 1.0))
      throw steklov::InvalidArgument("alpha must lie in (0, 1]");
    *weyl = static_cast<double>((k + 1) / 2) / alpha;
    return STK_OK;
  });
}

int stk_hps_margin(const stk_spectrum* spectrum, double alpha, double* min_margin,
                   int* pass) {
  if (int rc = require(spectrum && min_margin && pass, "arguments must not be null"))
    return rc;
  return guarded([&] {
    const steklov::BoundCheck bc = steklov::hps_bound_check(
        spectrum->impl, alpha, spectrum->impl.curve.perimeter);
    *min_margin = bc.min_margin;
    *pass = bc.pass ? 1 : 0;
    return STK_OK;
  });
}

int stk_sl_f_eval(double lambda, double t, double* out) {
  if (int rc = require(out != nullptr, "out must not be null")) return rc;
  return guarded([&] {
    *out = steklov::f_eval(lambda, t);
    return STK_OK;
  });
}

int stk_sl_eigenvalue(int k, double t, double* out) {
  if (int rc = require(out != nullptr, "out must not be null")) return rc;
  return guarded([&] {
    *out = steklov::eigenvalue(k, t);
    return STK_OK;
  });
}

int stk_sl_closed_form_t0(int k, double* out) {
  if (int rc = require(out != nullptr, "out must not be null")) return rc;
  return guarded([&] {
    *out = steklov::closed_form_t0(k);
    return STK_OK;
  });
}

int stk_sl_derivative_t0(int k, double* out) {
  if (int rc = require(out != nullptr, "out must not be null")) return rc;
  return guarded([&] {
    *out = steklov::derivative_t0(k);
    return STK_OK;
  });
}

int stk_sl_certificate(stk_sl_certificate_report* report) {
  if (int rc = require(report != nullptr, "report must not be null")) return rc;
  return guarded([&] {
    const steklov::NonconvexityReport rep = steklov::nonconvexity_certificate();
    report->lambda2_t0 = rep.lambda2_t0;
    report->closed_form_residual = rep.closed_form_residual;
    report->symmetry_residual = rep.symmetry_residual;
    report->endpoint_residual = rep.endpoint_residual;
    report->g0 = rep.g0;
    report->g01 = rep.g01;
    report->g1 = rep.g1;
    report->margin = rep.margin;
    report->pass = rep.pass ? 1 : 0;
    return rep.pass ? STK_OK : STK_ERR_CERTIFICATE;
  });
}

}  // extern "C"
