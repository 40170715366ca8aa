#include "steklov/perturbation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace steklov {

namespace {

int cluster_of(const std::vector<std::vector<int>>& clusters, int index) {
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    if (std::find(clusters[c].begin(), clusters[c].end(), index) != clusters[c].end()) {
      return static_cast<int>(c);
    }
  }
  throw InvalidArgument("eigenvalue index " + std::to_string(index + 1) +
                        " not present in the solved spectrum");
}

}  // namespace

Eigen::ArrayXd eigen_gradient(const SpectralResult& spec, int k) {
  if (k < 1 || k > spec.eigenvalues.size()) throw InvalidArgument("k out of range");
  const int c = cluster_of(spec.clusters, k - 1);
  if (spec.clusters[c].size() != 1) {
    throw InvalidArgument("lambda_" + std::to_string(k) +
                          " lies in a multiplicity cluster; use gateaux_matrix");
  }
  return -spec.eigenvalues[k - 1] * spec.traces.col(k - 1).array().square();
}

Eigen::MatrixXd gateaux_matrix(const SpectralResult& spec, int cluster_index,
                               const Eigen::ArrayXd& delta_rho) {
  if (cluster_index < 0 || cluster_index >= static_cast<int>(spec.clusters.size())) {
    throw InvalidArgument("cluster index out of range");
  }
  const std::vector<int>& cl = spec.clusters[cluster_index];
  const int n = spec.curve.n_nodes;
  const int m = static_cast<int>(cl.size());
  if (delta_rho.size() != n) throw InvalidArgument("delta_rho size != n_nodes");

  Eigen::MatrixXd u(n, m);
  double lambda = 0.0;
  for (int i = 0; i < m; ++i) {
    u.col(i) = spec.traces.col(cl[i]);
    lambda += spec.eigenvalues[cl[i]];
  }
  lambda /= m;

  const Eigen::VectorXd rw = (spec.density.values * spec.curve.weight).matrix();
  const Eigen::MatrixXd gram = u.transpose() * rw.asDiagonal() * u;
  if ((gram - Eigen::MatrixXd::Identity(m, m)).cwiseAbs().maxCoeff() > 1e-6) {
    throw InvalidArgument("cluster traces are not rho-orthonormal");
  }

  const Eigen::VectorXd dw = (delta_rho * spec.curve.weight).matrix();
  Eigen::MatrixXd mat = -lambda * (u.transpose() * dw.asDiagonal() * u);
  return 0.5 * (mat + mat.transpose());
}

FdReport fd_check(const BoundaryCurve& curve, const Density& rho, int k,
                  const Eigen::ArrayXd& delta_rho, const std::vector<double>& eps_list) {
  if (k < 1) throw InvalidArgument("k must be >= 1");
  if (eps_list.empty()) throw InvalidArgument("eps_list must be nonempty");
  const int k_solve = k + 6;

  // The operators are density-independent, so off the disk they are assembled
  // once; on the disk the basis solver is both faster and rho-exact.
  LayerOperators ops;
  const bool galerkin = curve.is_disk && curve.n_nodes >= 64;
  const int n_modes = galerkin ? std::min(120, (curve.n_nodes - 1) / 2) : 0;
  if (!galerkin) ops = assemble(curve);
  auto solve = [&](const Density& d) {
    return galerkin ? disk_galerkin(curve, d, n_modes, k_solve)
                    : solve_weighted(ops, d, k_solve);
  };

  const SpectralResult base = solve(rho);
  const int ci = cluster_of(base.clusters, k - 1);
  const std::vector<int>& cl = base.clusters[ci];
  const int m = static_cast<int>(cl.size());
  const int c0 = cl.front();

  FdReport rep;
  rep.cluster = cl;
  rep.eps = eps_list;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gateaux_matrix(base, ci, delta_rho));
  rep.analytic = es.eigenvalues();

  const int ne = static_cast<int>(eps_list.size());
  rep.fd.resize(ne, m);
  rep.max_abs_err.resize(ne);
  for (int e = 0; e < ne; ++e) {
    const double eps = eps_list[e];
    if (!(eps > 0.0)) throw InvalidArgument("eps values must be positive");
    const Density plus = make_from_values(curve, rho.values + eps * delta_rho, rho.alpha);
    const Density minus = make_from_values(curve, rho.values - eps * delta_rho, rho.alpha);
    const SpectralResult sp = solve(plus);
    const SpectralResult sm = solve(minus);
    for (int i = 0; i < m; ++i) {
      rep.fd(e, i) =
          (sp.eigenvalues[c0 + i] - sm.eigenvalues[c0 + m - 1 - i]) / (2.0 * eps);
    }
    rep.max_abs_err[e] = (rep.fd.row(e).transpose() - rep.analytic).cwiseAbs().maxCoeff();
  }

  // Convergence order from a least-squares fit of log(err) against log(eps),
  // ignoring rows at the rounding floor.
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int cnt = 0;
  for (int e = 0; e < ne; ++e) {
    if (rep.max_abs_err[e] <= 1e-13) continue;
    const double x = std::log(eps_list[e]);
    const double y = std::log(rep.max_abs_err[e]);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
    ++cnt;
  }
  const double denom = cnt * sxx - sx * sx;
  rep.observed_order = (cnt >= 2 && std::abs(denom) > 0.0)
                           ? (cnt * sxy - sx * sy) / denom
                           : 0.0;
  return rep;
}

}  // namespace steklov
