#include "steklov/spectrum.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace steklov {

namespace {

Eigen::VectorXd rho_weights(const BoundaryCurve& curve, const Density& rho) {
  return (rho.values * curve.weight).matrix();
}

// G^{-1/2} for a symmetric positive (semi)definite Gram matrix; eigenvalues are
// floored to keep degenerate blocks finite.
Eigen::MatrixXd inverse_sqrt(const Eigen::MatrixXd& gram) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
  Eigen::VectorXd d = es.eigenvalues().cwiseMax(1e-14);
  return es.eigenvectors() * d.cwiseSqrt().cwiseInverse().asDiagonal() *
         es.eigenvectors().transpose();
}

}  // namespace

std::vector<std::vector<int>> cluster(const Eigen::VectorXd& eigenvalues, double rel_tol) {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < eigenvalues.size(); ++i) {
    if (i > 0 &&
        eigenvalues[i] - eigenvalues[i - 1] <=
            rel_tol * std::max(std::abs(eigenvalues[i - 1]), 1e-300)) {
      out.back().push_back(i);
    } else {
      out.push_back({i});
    }
  }
  return out;
}

void orthonormalize_in_rho(const BoundaryCurve& curve, const Density& rho,
                           Eigen::Ref<Eigen::MatrixXd> block) {
  const Eigen::VectorXd rw = rho_weights(curve, rho);
  const Eigen::MatrixXd gram = block.transpose() * rw.asDiagonal() * block;
  block = block * inverse_sqrt(gram);
}

SpectralResult solve_weighted(const LayerOperators& ops, const Density& rho, int k_max) {
  const BoundaryCurve& curve = ops.curve;
  const int n = curve.n_nodes;
  if (k_max < 1) throw InvalidArgument("k_max must be >= 1");
  if (rho.values.size() != n) throw InvalidArgument("density size != operator size");

  const Eigen::VectorXd rw = rho_weights(curve, rho);
  Eigen::MatrixXd lhs = rw.asDiagonal() * ops.op_b;
  Eigen::MatrixXd rhs = curve.weight.matrix().asDiagonal() * ops.op_a;

  Eigen::VectorXd ar(n), ai(n), beta(n);
  Eigen::MatrixXd vr(n, n);
  const int info =
      LAPACKE_dggev(LAPACK_COL_MAJOR, 'N', 'V', n, lhs.data(), n, rhs.data(), n, ar.data(),
                    ai.data(), beta.data(), nullptr, n, vr.data(), n);
  if (info != 0) throw SolverError("dggev failed, info = " + std::to_string(info));

  // mu = 1/lambda. beta ~ 0 is the deflated constant mode (lambda = 0);
  // mu ~ 0 comes from the kernel of rho (lambda = infinity). Both are dropped.
  const double beta_floor = 1e-12 * beta.cwiseAbs().maxCoeff();
  struct Mode {
    double mu;
    int col;
  };
  std::vector<Mode> modes;
  int discarded = 0;
  for (int j = 0; j < n; ++j) {
    if (ai[j] != 0.0 && j + 1 < n) {
      // Conjugate pair: columns j, j+1 hold the real and imaginary parts. For a
      // near-real pair both parts span the invariant subspace and are kept.
      if (std::abs(beta[j]) > beta_floor) {
        const double re = ar[j] / beta[j];
        const double im = ai[j] / beta[j];
        if (std::abs(im) <= 1e-6 * std::max(1.0, std::abs(re))) {
          modes.push_back({re, j});
          modes.push_back({re, j + 1});
        } else {
          discarded += 2;
        }
      }
      ++j;
    } else if (std::abs(beta[j]) > beta_floor) {
      modes.push_back({ar[j] / beta[j], j});
    }
  }

  double mu_max = 0.0;
  for (const Mode& m : modes) mu_max = std::max(mu_max, m.mu);
  if (!(mu_max > 0.0)) throw SolverError("no positive eigenvalues recovered");
  const double mu_floor = 1e-10 * mu_max;
  std::vector<Mode> keep;
  for (const Mode& m : modes)
    if (m.mu > mu_floor) keep.push_back(m);
  std::stable_sort(keep.begin(), keep.end(),
                   [](const Mode& a, const Mode& b) { return a.mu > b.mu; });

  // Traces of all candidate modes, then positivity screening of the rho-norm
  // (a mode with no rho-mass cannot be normalized and is spurious).
  Eigen::MatrixXd xs(n, static_cast<int>(keep.size()));
  for (int c = 0; c < xs.cols(); ++c) xs.col(c) = vr.col(keep[c].col);
  Eigen::MatrixXd us = ops.op_b * xs;

  std::vector<int> sel;
  for (int c = 0; c < us.cols() && static_cast<int>(sel.size()) < k_max; ++c) {
    const double quad = us.col(c).transpose() * rw.asDiagonal() * us.col(c);
    if (quad > 1e-12 * us.col(c).squaredNorm()) sel.push_back(c);
  }
  if (static_cast<int>(sel.size()) < k_max) {
    throw SolverError("k_max = " + std::to_string(k_max) +
                      " exceeds the recoverable eigenvalue count " +
                      std::to_string(sel.size()));
  }

  SpectralResult res;
  res.eigenvalues.resize(k_max);
  res.traces.resize(n, k_max);
  Eigen::MatrixXd xsel(n, k_max);
  for (int k = 0; k < k_max; ++k) {
    const int c = sel[k];
    res.eigenvalues[k] = 1.0 / keep[c].mu;
    const double quad = us.col(c).transpose() * rw.asDiagonal() * us.col(c);
    const double scale = 1.0 / std::sqrt(quad);
    res.traces.col(k) = us.col(c) * scale;
    xsel.col(k) = xs.col(c) * scale;
  }

  res.clusters = cluster(res.eigenvalues, 1e-6);
  for (const auto& cl : res.clusters) {
    if (cl.size() < 2) continue;
    Eigen::MatrixXd ub(n, cl.size()), xb(n, cl.size());
    for (std::size_t i = 0; i < cl.size(); ++i) {
      ub.col(i) = res.traces.col(cl[i]);
      xb.col(i) = xsel.col(cl[i]);
    }
    const Eigen::MatrixXd gram = ub.transpose() * rw.asDiagonal() * ub;
    const Eigen::MatrixXd t = inverse_sqrt(gram);
    ub = ub * t;
    xb = xb * t;
    for (std::size_t i = 0; i < cl.size(); ++i) {
      res.traces.col(cl[i]) = ub.col(i);
      xsel.col(cl[i]) = xb.col(i);
    }
  }

  // Boundary form (flux, trace) pairing estimates the Dirichlet energy.
  res.rayleigh.resize(k_max);
  Eigen::MatrixXd flux = ops.op_a * xsel;
  for (int k = 0; k < k_max; ++k) {
    res.rayleigh[k] =
        flux.col(k).dot((curve.weight * res.traces.col(k).array()).matrix());
  }

  res.density = rho;
  res.curve = curve;
  res.discarded_complex = discarded;
  return res;
}

SpectralResult disk_galerkin(const BoundaryCurve& curve, const Density& rho, int n_modes,
                             int k_max) {
  if (!curve.is_disk) throw InvalidArgument("disk_galerkin requires the disk");
  if (n_modes < 1 || k_max < 1) throw InvalidArgument("n_modes and k_max must be >= 1");
  if (k_max > 2 * n_modes) throw InvalidArgument("k_max exceeds basis size");
  const int n = curve.n_nodes;
  if (n <= 2 * n_modes) {
    throw InvalidArgument("disk_galerkin needs n_nodes > 2*n_modes (nodal quadrature "
                          "aliases the basis otherwise)");
  }
  if (rho.values.size() != n) throw InvalidArgument("density size != n_nodes");

  const int kk = 2 * n_modes;
  Eigen::MatrixXd phi(kk, n);
  const double inv_sqrt_pi = 1.0 / std::sqrt(pi);
  for (int m = 1; m <= n_modes; ++m) {
    phi.row(2 * m - 2) = (m * curve.theta).cos().transpose() * inv_sqrt_pi;
    phi.row(2 * m - 1) = (m * curve.theta).sin().transpose() * inv_sqrt_pi;
  }
  Eigen::VectorXd dinv(kk);
  for (int m = 1; m <= n_modes; ++m)
    dinv[2 * m - 2] = dinv[2 * m - 1] = 1.0 / std::sqrt(static_cast<double>(m));

  // A positive eigenfunction mean is admissible (only integral(rho u ds) = 0
  // is forced), so the quadratic form integral(rho u^2) is minimized over the
  // constant component: B is deflated by the rank-one term g g^T / mass with
  // g_i = integral(rho phi_i ds). Without it the matrix pins mean(u) = 0 and
  // its spectrum is not the weighted Steklov spectrum for nonconstant rho.
  const Eigen::VectorXd rw = rho_weights(curve, rho);
  const double mass = rw.sum();
  const Eigen::VectorXd g = phi * rw;
  const Eigen::MatrixXd bmat =
      phi * rw.asDiagonal() * phi.transpose() - g * (g.transpose() / mass);
  const Eigen::MatrixXd amat = dinv.asDiagonal() * bmat * dinv.asDiagonal();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(amat);
  if (es.info() != Eigen::Success) throw SolverError("symmetric eigensolver failed");

  const double mu_max = es.eigenvalues().maxCoeff();
  if (!(mu_max > 0.0)) throw SolverError("no positive eigenvalues recovered");
  const double mu_floor = 1e-10 * mu_max;
  if (es.eigenvalues()[kk - k_max] <= mu_floor) {
    throw SolverError("k_max = " + std::to_string(k_max) +
                      " exceeds the recoverable eigenvalue count");
  }

  SpectralResult res;
  res.eigenvalues.resize(k_max);
  res.traces.resize(n, k_max);
  res.rayleigh.resize(k_max);
  for (int k = 0; k < k_max; ++k) {
    const double mu = es.eigenvalues()[kk - 1 - k];
    const Eigen::VectorXd c = es.eigenvectors().col(kk - 1 - k);
    res.eigenvalues[k] = 1.0 / mu;
    const Eigen::VectorXd y = dinv.asDiagonal() * c;
    // Constant component chosen so that integral(rho u ds) = 0.
    Eigen::VectorXd u =
        (phi.transpose() * y).array() - g.dot(y) / mass;
    const double quad = u.transpose() * rw.asDiagonal() * u;
    if (!(quad > 0.0)) throw SolverError("mode has no rho-mass");
    res.traces.col(k) = u / std::sqrt(quad);
    // Dirichlet energy of the expansion is |c|^2 = 1 before normalization.
    res.rayleigh[k] = 1.0 / quad;
  }

  res.clusters = cluster(res.eigenvalues, 1e-6);
  for (const auto& cl : res.clusters) {
    if (cl.size() < 2) continue;
    Eigen::MatrixXd ub(n, cl.size());
    for (std::size_t i = 0; i < cl.size(); ++i) ub.col(i) = res.traces.col(cl[i]);
    orthonormalize_in_rho(curve, rho, ub);
    for (std::size_t i = 0; i < cl.size(); ++i) res.traces.col(cl[i]) = ub.col(i);
  }

  res.density = rho;
  res.curve = curve;
  return res;
}

}  // namespace steklov
