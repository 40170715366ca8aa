#pragma once

#include <Eigen/Dense>
#include <vector>

#include "steklov/spectrum.hpp"

namespace steklov {

// Density-perturbation derivative of a simple eigenvalue: the per-node values
// g(theta_i) = -lambda_k * u_k(theta_i)^2, paired with a direction delta_rho
// through boundary_integral(curve, g * delta_rho). k is 1-based (lambda_1 is
// the first positive eigenvalue). Throws if lambda_k shares a cluster.
Eigen::ArrayXd eigen_gradient(const SpectralResult& spec, int k);

// First-order interaction matrix of a degenerate cluster along delta_rho:
// M_ij = -lambda * integral(u_i u_j delta_rho ds) over the cluster's
// orthonormal traces. Its eigenvalues are the slopes of the cluster members.
Eigen::MatrixXd gateaux_matrix(const SpectralResult& spec, int cluster_index,
                               const Eigen::ArrayXd& delta_rho);

// Central finite-difference validation of the analytic slopes around rho for
// the cluster containing lambda_k. Sorted eigenvalue branches swap sign of
// epsilon at a crossing, so member i at +eps is paired with member m-1-i at
// -eps; this restores second-order accuracy for symmetric splittings.
struct FdReport {
  std::vector<int> cluster;            // 0-based eigenvalue indices
  Eigen::VectorXd analytic;            // slopes nu_i, ascending
  std::vector<double> eps;             // as given
  Eigen::MatrixXd fd;                  // n_eps x m matched difference quotients
  Eigen::VectorXd max_abs_err;         // per eps row, against analytic
  double observed_order = 0.0;         // least-squares slope of log err vs log eps
};

FdReport fd_check(const BoundaryCurve& curve, const Density& rho, int k,
                  const Eigen::ArrayXd& delta_rho, const std::vector<double>& eps_list);

}  // namespace steklov
