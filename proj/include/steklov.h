/* C interface to the boundary-density eigenvalue toolkit.
 *
 * All functions returning int yield a status code; outputs are written
 * through pointers only on STK_OK. Handles are opaque and freed with the
 * matching *_destroy call. stk_last_error() describes the most recent
 * failure on the calling thread.
 */
#ifndef STEKLOV_H
#define STEKLOV_H

#ifdef __cplusplus
extern "C" {
#endif

#define STK_OK 0
#define STK_ERR_CERTIFICATE 1
#define STK_ERR_INVALID 2
#define STK_ERR_SOLVER 3

#define STK_MINIMIZE 0
#define STK_MAXIMIZE 1

typedef struct stk_curve stk_curve;
typedef struct stk_density stk_density;
typedef struct stk_spectrum stk_spectrum;
typedef struct stk_opt_result stk_opt_result;

const char* stk_version(void);
const char* stk_last_error(void);

/* ---- boundary curves ---- */
int stk_curve_create_disk(int n_nodes, stk_curve** out);
/* r(theta) = 1 + sum_j cos_c[j] cos((j+1) theta) + sum_j sin_c[j] sin((j+1) theta);
 * either list may be NULL when its count is 0. */
int stk_curve_create_fourier(const double* cos_c, int n_cos, const double* sin_c,
                             int n_sin, int n_nodes, stk_curve** out);
void stk_curve_destroy(stk_curve* curve);
int stk_curve_n_nodes(const stk_curve* curve);
double stk_curve_perimeter(const stk_curve* curve);
/* Each output array holds n_nodes values; any may be NULL to skip. */
int stk_curve_get_nodes(const stk_curve* curve, double* theta, double* x, double* y);
/* Arclength quadrature weights; out holds n_nodes entries summing to the
 * perimeter. */
int stk_curve_get_quadrature(const stk_curve* curve, double* out);

/* ---- admissible densities (values in [0,1], mass alpha * perimeter) ---- */
int stk_density_create_constant(const stk_curve* curve, double alpha, stk_density** out);
int stk_density_create_arc_indicator(const stk_curve* curve, double alpha, int n_arcs,
                                     stk_density** out);
int stk_density_create_fourier(const stk_curve* curve, double alpha, double eps,
                               const double* cos_c, int n_cos, const double* sin_c,
                               int n_sin, stk_density** out);
int stk_density_create_from_values(const stk_curve* curve, const double* values,
                                   double alpha, stk_density** out);
/* Nearest admissible density (box clip + mass shift) to the raw values. */
int stk_density_project(const stk_curve* curve, const double* raw, double alpha,
                        stk_density** out);
void stk_density_destroy(stk_density* density);
double stk_density_alpha(const stk_density* density);
int stk_density_get_values(const stk_density* density, double* out);

/* ---- spectra ---- */
int stk_solve(const stk_curve* curve, const stk_density* density, int k_max,
              stk_spectrum** out);
int stk_solve_galerkin(const stk_curve* curve, const stk_density* density, int n_modes,
                       int k_max, stk_spectrum** out);
void stk_spectrum_destroy(stk_spectrum* spectrum);
int stk_spectrum_count(const stk_spectrum* spectrum);
int stk_spectrum_get_eigenvalues(const stk_spectrum* spectrum, double* out);
int stk_spectrum_get_rayleigh(const stk_spectrum* spectrum, double* out);
/* k is 1-based; out holds n_nodes trace values of the k-th eigenfunction. */
int stk_spectrum_get_trace(const stk_spectrum* spectrum, int k, double* out);
int stk_spectrum_cluster_count(const stk_spectrum* spectrum);
/* members holds up to cap 0-based eigenvalue indices; *size gets the count. */
int stk_spectrum_get_cluster(const stk_spectrum* spectrum, int index, int* members,
                             int cap, int* size);

/* ---- density perturbations ---- */
/* First-order split of the constant-density pair (lambda_{2j-1}, lambda_{2j})
 * under alpha + eps(a cos(2j theta) + b sin(2j theta)). */
int stk_fourier_shift(int j, double alpha, double a, double b, double* slope_minus,
                      double* slope_plus);
/* Analytic slopes of the cluster containing lambda_k (1-based) along
 * delta_rho, with matched central differences at each eps. analytic holds m
 * values; fd holds n_eps * m values (row-major per eps). m is capped by
 * max_m; *m_out receives the cluster size. */
int stk_fd_check(const stk_curve* curve, const stk_density* density, int k,
                 const double* delta_rho, const double* eps_list, int n_eps,
                 int max_m, double* analytic, double* fd, int* m_out,
                 double* observed_order);

/* ---- stationarity certificate ---- */
/* Certifies the level-set conditions of the cluster (0-based index into the
 * spectrum's clusters) at the density the spectrum was solved with.
 * f_values may be NULL or hold n_nodes entries. *pass is 1/0. Returns STK_OK
 * even when the certificate fails; inspect *pass. */
int stk_check_optimality(const stk_spectrum* spectrum, int cluster_index,
                         int direction, double band_tol, double viol_tol,
                         double* level, double* violation_zero,
                         double* violation_interior, double* violation_one,
                         double* tol_effective, int* pass, double* f_values);

/* ---- extremal optimization (unit disk) ---- */
typedef struct stk_optimize_settings {
  int n_nodes;
  int n_modes;
  int final_n_modes;
  double cluster_rel_tol;
  int max_iters;
  double step_tol;
  double obj_tol;
  int obj_stall_iters;
  double armijo;
  double shrink;
  double t0;
  int n_seeds;
  unsigned long long seed;
} stk_optimize_settings;

void stk_optimize_settings_default(stk_optimize_settings* settings);
int stk_optimize(double alpha, int k, int direction,
                 const stk_optimize_settings* settings, stk_opt_result** out);
void stk_opt_result_destroy(stk_opt_result* result);
double stk_opt_objective(const stk_opt_result* result);       /* polished lambda_k */
int stk_opt_iterations(const stk_opt_result* result);
int stk_opt_converged(const stk_opt_result* result);
const char* stk_opt_termination(const stk_opt_result* result);
int stk_opt_seed_index(const stk_opt_result* result);
int stk_opt_history_size(const stk_opt_result* result);
int stk_opt_get_history(const stk_opt_result* result, double* objectives);
int stk_opt_get_step_sizes(const stk_opt_result* result, double* steps);
int stk_opt_seed_count(const stk_opt_result* result);
int stk_opt_get_seed_objectives(const stk_opt_result* result, double* objectives);
int stk_opt_n_nodes(const stk_opt_result* result);
int stk_opt_get_density(const stk_opt_result* result, double* theta, double* rho);
/* Borrowed view of the polished spectrum; valid until the result is destroyed. */
const stk_spectrum* stk_opt_spectrum(const stk_opt_result* result);
/* Certificate computed at the final density (see stk_check_optimality). */
int stk_opt_certificate(const stk_opt_result* result, double* level,
                        double* violation_zero, double* violation_interior,
                        double* violation_one, double* tol_effective, int* pass);

/* ---- sweeps and bounds ---- */
/* lambda_k of the symmetric n-arc indicator for each n in n_arcs, plus the
 * oscillation limit ceil(k/2)/alpha in *limit. */
int stk_homogenize(double alpha, int k, const int* n_arcs, int count,
                   double* lambda_out, double* limit);
int stk_weyl_value(double alpha, int k, double* weyl);
/* Smallest margin of lambda_k <= 2 pi k / (alpha |Gamma|) over the spectrum. */
int stk_hps_margin(const stk_spectrum* spectrum, double alpha, double* min_margin,
                   int* pass);

/* ---- piecewise-density membrane (interval counterexample) ---- */
int stk_sl_f_eval(double lambda, double t, double* out);
int stk_sl_eigenvalue(int k, double t, double* out);
int stk_sl_closed_form_t0(int k, double* out);
int stk_sl_derivative_t0(int k, double* out);

typedef struct stk_sl_certificate_report {
  double lambda2_t0;
  double closed_form_residual;
  double symmetry_residual;
  double endpoint_residual;
  double g0;
  double g01;
  double g1;
  double margin;
  int pass;
} stk_sl_certificate_report;

/* Returns STK_OK when the certificate holds, STK_ERR_CERTIFICATE otherwise
 * (the report is filled either way). */
int stk_sl_certificate(stk_sl_certificate_report* report);

#ifdef __cplusplus
}
#endif

#endif /* STEKLOV_H */
