#pragma once

#include <Eigen/Dense>
#include <vector>

#include "steklov/bem.hpp"
#include "steklov/density.hpp"

namespace steklov {

// Nontrivial weighted Steklov spectrum 0 < lambda_1 <= ... <= lambda_K with
// boundary traces normalized to integral(rho u_k^2 ds) = 1 and orthonormalized
// within each numerical-multiplicity cluster. rayleigh_k is the boundary
// bilinear form estimate of the Dirichlet energy of u_k (equals lambda_k for a
// converged eigenpair).
struct SpectralResult {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd traces;  // n_nodes x K
  std::vector<std::vector<int>> clusters;  // 0-based indices into eigenvalues
  Eigen::VectorXd rayleigh;
  Density density;
  BoundaryCurve curve;
  int discarded_complex = 0;  // QZ pairs rejected for non-negligible imaginary part
};

// Greedy multiplicity chaining: consecutive sorted values join one cluster
// while their relative gap stays below rel_tol.
std::vector<std::vector<int>> cluster(const Eigen::VectorXd& eigenvalues, double rel_tol);

// Solves the reciprocal pencil rho W op_b x = mu W op_a x (mu = 1/lambda) with
// the QZ factorization, discards the constant mode (mu = infinity) and the
// rho-kernel modes (mu ~ 0, lambda = infinity), and returns the k_max smallest
// eigenvalues with traces u = op_b x.
SpectralResult solve_weighted(const LayerOperators& ops, const Density& rho, int k_max);

// Disk-only Fourier-Galerkin solver in the classical Steklov basis
// {cos(m theta)/sqrt(pi), sin(m theta)/sqrt(pi)}, m = 1..n_modes:
// eigenvalues of D^{-1/2} B(rho) D^{-1/2} are 1/lambda, where
// B_ij = integral(rho phi_i phi_j ds) and D = diag(1,1,2,2,...).
// Requires n_nodes > 2*n_modes so the nodal quadrature of B is alias-free.
SpectralResult disk_galerkin(const BoundaryCurve& curve, const Density& rho, int n_modes,
                             int k_max);

// Symmetric (Lowdin) orthonormalization of the trace block in the
// rho-weighted discrete inner product; block is n_nodes x m, modified in place.
void orthonormalize_in_rho(const BoundaryCurve& curve, const Density& rho,
                           Eigen::Ref<Eigen::MatrixXd> block);

}  // namespace steklov
