#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "steklov/optimality.hpp"
#include "steklov/spectrum.hpp"

namespace steklov {

struct OptimizeSettings {
  int n_nodes = 512;            // iteration grid
  int n_modes = 80;             // basis size while iterating (disk engine)
  int final_n_modes = 200;      // basis size for the final polish solve
  double cluster_rel_tol = 1e-3;
  int max_iters = 150;
  double step_tol = 1e-8;       // accepted relative step below this stops
  double obj_tol = 1e-10;       // relative objective stall threshold
  int obj_stall_iters = 5;      // consecutive stalls required to stop
  double armijo = 1e-4;
  double shrink = 0.5;
  double t0 = 0.25;             // initial trial step
  int n_seeds = 5;
  unsigned long long seed = 0;  // base seed for the randomized starts
};

// One extremal eigenvalue problem over the admissible densities on a fixed
// curve: push lambda_k down (minimize) or up (maximize) subject to values in
// [0,1] and fixed mass alpha * perimeter.
struct ExtremalProblem {
  BoundaryCurve curve;
  double alpha = 0.5;
  int k = 1;
  Direction direction = Direction::minimize;
  Eigen::ArrayXd initial_values;  // optional; empty -> built-in seed family
  OptimizeSettings settings;
};

struct DirectionStep {
  Eigen::ArrayXd d;          // per-node direction, |d_i| <= 1, mass-neutral
  double predicted = 0.0;    // first-order objective change per unit step
  std::vector<int> window;   // 0-based eigenvalue indices modeled jointly
};

struct OptimizeTrace {
  std::vector<double> objectives;   // initial value, then one per accepted step
  std::vector<double> step_sizes;   // accepted step lengths
  double final_objective = 0.0;     // lambda_k of the polished final solve
  Density final_density;
  SpectralResult final_spectrum;    // polished solve, windows re-orthonormalized
  bool converged = false;
  std::string termination;          // stationary | step-tolerance |
                                    // objective-tolerance | max-iterations |
                                    // line-search-failure
  int iterations = 0;
  int seed_index = -1;              // winning start (multi-start runs)
  std::vector<double> seed_objectives;
  OptimalityReport certificate;
  int certificate_cluster = 0;      // cluster index certified in final_spectrum
};

// Eigenvalue window around lambda_k at the given tolerance: for minimization
// the whole cluster containing lambda_k; for maximization the cluster extended
// downward only (upward neighbors cap the objective, they do not carry it).
std::vector<int> cluster_window(const Eigen::VectorXd& eigenvalues, int k,
                                Direction direction, double rel_tol);

// First-order direction subproblem: over directions d with |d_i| <= 1,
// mass-neutral, and zero where the box is active against the move, optimize
// the first-order change lambda_k inherits from the window — the eigenvalue
// of the interaction matrix M(d) at lambda_k's position — by alternating
// between that eigenvector and an exact linear subproblem. Exact when the
// window is a single eigenvalue.
DirectionStep direction_step(const ExtremalProblem& problem, const Density& rho,
                             const SpectralResult& spec);

// Projected monotone line-search descent from one starting density.
OptimizeTrace optimize_single(const ExtremalProblem& problem, const Density& rho0);

// Multi-start driver: deterministic seed family (or perturbations of the
// provided initial density), best final objective wins.
OptimizeTrace optimize(const ExtremalProblem& problem);

}  // namespace steklov
