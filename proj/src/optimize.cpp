#include "steklov/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "steklov/bem.hpp"
#include "steklov/density.hpp"

namespace steklov {

namespace {

// Shared solve path for the iteration: basis solver on the disk, boundary
// pencil elsewhere (operators assembled once per run).
struct Engine {
  const BoundaryCurve& curve;
  int n_modes = 0;
  LayerOperators ops;

  explicit Engine(const BoundaryCurve& c, int modes) : curve(c) {
    if (curve.is_disk) {
      n_modes = std::min(modes, (curve.n_nodes - 1) / 2);
    } else {
      ops = assemble(curve);
    }
  }
  SpectralResult solve(const Density& rho, int k_max) const {
    return curve.is_disk ? disk_galerkin(curve, rho, n_modes, k_max)
                         : solve_weighted(ops, rho, k_max);
  }
};

// minimize sum_i cost_i * w_i * d_i over lo <= d <= hi with sum_i w_i d_i = 0:
// at the optimum d_i sits at lo_i when cost_i + mu > 0 and at hi_i otherwise,
// with the multiplier mu fixed by the mass constraint (monotone bisection).
// Nodes whose reduced cost vanishes at the optimal multiplier form a tied
// block the bang-bang rule cannot split; they take the fractional values
// needed to zero the mass exactly.
Eigen::ArrayXd mass_neutral_lp(const Eigen::ArrayXd& cost, const Eigen::ArrayXd& lo,
                               const Eigen::ArrayXd& hi, const Eigen::ArrayXd& w) {
  auto fill = [&](double mu, Eigen::ArrayXd& d) {
    for (int i = 0; i < cost.size(); ++i) d[i] = (cost[i] + mu > 0.0) ? lo[i] : hi[i];
  };
  Eigen::ArrayXd d(cost.size());
  double mu_lo = -cost.maxCoeff() - 1.0;  // everything at hi: mass >= 0
  double mu_hi = -cost.minCoeff() + 1.0;  // everything at lo: mass <= 0
  for (int it = 0; it < 200; ++it) {
    const double mu = 0.5 * (mu_lo + mu_hi);
    if (mu == mu_lo || mu == mu_hi) break;
    fill(mu, d);
    if ((d * w).sum() > 0.0) {
      mu_lo = mu;
    } else {
      mu_hi = mu;
    }
  }
  Eigen::ArrayXd d_up(cost.size());
  fill(mu_lo, d_up);  // mass >= 0
  fill(mu_hi, d);     // mass <= 0
  double need = -(d * w).sum();
  for (int i = 0; i < cost.size() && need > 0.0; ++i) {
    if (d_up[i] == d[i]) continue;
    const double cap = w[i] * (hi[i] - lo[i]);
    if (cap <= need) {
      d[i] = hi[i];
      need -= cap;
    } else {
      d[i] = lo[i] + need / w[i];
      need = 0.0;
    }
  }
  return d;
}

struct WindowModel {
  Eigen::MatrixXd u;       // rho-orthonormal traces over the window
  Eigen::ArrayXd f;        // sum of squared traces
  double lambda = 0.0;     // window mean eigenvalue
};

WindowModel build_window_model(const SpectralResult& spec, const Density& rho,
                               const std::vector<int>& window) {
  WindowModel wm;
  const int m = static_cast<int>(window.size());
  wm.u.resize(spec.curve.n_nodes, m);
  for (int i = 0; i < m; ++i) {
    wm.u.col(i) = spec.traces.col(window[i]);
    wm.lambda += spec.eigenvalues[window[i]];
  }
  wm.lambda /= m;
  // Members of distinct solver clusters are only near-orthogonal; the model
  // needs an orthonormal block.
  orthonormalize_in_rho(spec.curve, rho, wm.u);
  wm.f = wm.u.array().square().rowwise().sum();
  return wm;
}

}  // namespace

std::vector<int> cluster_window(const Eigen::VectorXd& eigenvalues, int k,
                                Direction direction, double rel_tol) {
  if (k < 1 || k > eigenvalues.size()) throw InvalidArgument("k out of range");
  auto joined = [&](int i) {
    return eigenvalues[i] - eigenvalues[i - 1] <=
           rel_tol * std::max(std::abs(eigenvalues[i - 1]), 1e-300);
  };
  int lo = k - 1;
  while (lo > 0 && joined(lo)) --lo;
  int hi = k - 1;
  if (direction == Direction::minimize) {
    while (hi + 1 < eigenvalues.size() && joined(hi + 1)) ++hi;
  }
  std::vector<int> window;
  for (int i = lo; i <= hi; ++i) window.push_back(i);
  return window;
}

DirectionStep direction_step(const ExtremalProblem& problem, const Density& rho,
                             const SpectralResult& spec) {
  const int n = spec.curve.n_nodes;
  if (rho.values.size() != n) throw InvalidArgument("density size != n_nodes");
  const bool minimize = problem.direction == Direction::minimize;

  DirectionStep ds;
  ds.window = cluster_window(spec.eigenvalues, problem.k, problem.direction,
                             problem.settings.cluster_rel_tol);
  const WindowModel wm = build_window_model(spec, rho, ds.window);
  const int m = static_cast<int>(ds.window.size());
  // Position of the objective eigenvalue inside the window: a perturbation
  // reorders the window values, and lambda_k inherits the p-th smallest.
  const int p = problem.k - 1 - ds.window.front();

  // Box faces: moves off an exactly saturated node must point inward.
  Eigen::ArrayXd lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    lo[i] = rho.values[i] <= 1e-12 ? 0.0 : -1.0;
    hi[i] = rho.values[i] >= 1.0 - 1e-12 ? 0.0 : 1.0;
  }
  const Eigen::ArrayXd& w = spec.curve.weight;

  auto interaction = [&](const Eigen::ArrayXd& d) -> Eigen::MatrixXd {
    const Eigen::VectorXd dw = (d * w).matrix();
    Eigen::MatrixXd mat = -wm.lambda * (wm.u.transpose() * dw.asDiagonal() * wm.u);
    return 0.5 * (mat + mat.transpose());
  };
  // First-order slope the objective inherits from a candidate direction.
  auto slope = [&](const Eigen::ArrayXd& d) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(interaction(d));
    return es.eigenvalues()[p];
  };
  // Linear subproblem for a fixed unit combination a: optimize the slope of
  // the single mode u_a = U a, a linear functional of d.
  auto lp_for = [&](const Eigen::VectorXd& a) -> Eigen::ArrayXd {
    const Eigen::ArrayXd ua = (wm.u * a).array();
    Eigen::ArrayXd cost = -wm.lambda * ua.square();
    if (!minimize) cost = -cost;
    return mass_neutral_lp(cost, lo, hi, w);
  };

  // Alternate between the eigenvector at the objective's position and the
  // exact linear step, keeping the best direction seen; exact when m == 1.
  Eigen::ArrayXd cavg = -wm.lambda / m * wm.f;
  if (!minimize) cavg = -cavg;
  Eigen::ArrayXd best = mass_neutral_lp(cavg, lo, hi, w);
  double best_val = slope(best);
  Eigen::ArrayXd cur = best;
  for (int round = 0; round < 6 && m > 1; ++round) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(interaction(cur));
    const Eigen::VectorXd a = es.eigenvectors().col(p);
    cur = lp_for(a);
    const double val = slope(cur);
    if ((minimize && val < best_val) || (!minimize && val > best_val)) {
      best_val = val;
      best = cur;
    }
  }
  if (m == 1) {
    best = lp_for(Eigen::VectorXd::Ones(1));
    best_val = slope(best);
  }

  ds.d = best;
  ds.predicted = best_val;
  return ds;
}

OptimizeTrace optimize_single(const ExtremalProblem& problem, const Density& rho0) {
  const OptimizeSettings& st = problem.settings;
  if (problem.k < 1) throw InvalidArgument("k must be >= 1");
  const BoundaryCurve& curve = problem.curve;
  const int k_solve = problem.k + 6;
  const bool minimize = problem.direction == Direction::minimize;
  const Engine engine(curve, st.n_modes);

  OptimizeTrace tr;
  Density rho = rho0;
  SpectralResult spec = engine.solve(rho, k_solve);
  double obj = spec.eigenvalues[problem.k - 1];
  tr.objectives.push_back(obj);

  int stall = 0;
  tr.termination = "max-iterations";
  double t_trial = st.t0;
  for (int iter = 0; iter < st.max_iters; ++iter) {
    const DirectionStep ds = direction_step(problem, rho, spec);
    if ((minimize && ds.predicted >= -1e-8) || (!minimize && ds.predicted <= 1e-8)) {
      tr.termination = "stationary";
      tr.converged = true;
      break;
    }

    bool accepted = false;
    double t = t_trial;
    double cobj = obj;
    Density cand = rho;
    SpectralResult cspec;
    while (t >= 1e-14) {
      cand = project_admissible(curve, rho.values + t * ds.d, problem.alpha);
      cspec = engine.solve(cand, k_solve);
      cobj = cspec.eigenvalues[problem.k - 1];
      const double gain = cobj - obj;
      const double required = st.armijo * t * ds.predicted;
      if ((minimize && gain <= required) || (!minimize && gain >= required)) {
        accepted = true;
        break;
      }
      t *= st.shrink;
    }
    if (!accepted) {
      tr.termination = "line-search-failure";
      break;
    }

    const double change = std::abs(cobj - obj);
    rho = std::move(cand);
    spec = std::move(cspec);
    obj = cobj;
    tr.objectives.push_back(obj);
    tr.step_sizes.push_back(t);
    ++tr.iterations;
    t_trial = std::min(2.0 * t, 0.5);

    if (t < st.step_tol) {
      tr.termination = "step-tolerance";
      tr.converged = true;
      break;
    }
    stall = change < st.obj_tol * std::max(1.0, std::abs(obj)) ? stall + 1 : 0;
    if (stall >= st.obj_stall_iters) {
      tr.termination = "objective-tolerance";
      tr.converged = true;
      break;
    }
  }

  // Polish the final density at higher basis resolution, then certify the
  // stationarity conditions on the cluster holding lambda_k.
  const Engine fine(curve, std::max(st.final_n_modes, st.n_modes));
  tr.final_spectrum = fine.solve(rho, k_solve);
  tr.final_spectrum.clusters =
      cluster(tr.final_spectrum.eigenvalues, st.cluster_rel_tol);
  for (const auto& cl : tr.final_spectrum.clusters) {
    if (cl.size() < 2) continue;
    Eigen::MatrixXd block(curve.n_nodes, cl.size());
    for (std::size_t i = 0; i < cl.size(); ++i)
      block.col(i) = tr.final_spectrum.traces.col(cl[i]);
    orthonormalize_in_rho(curve, rho, block);
    for (std::size_t i = 0; i < cl.size(); ++i)
      tr.final_spectrum.traces.col(cl[i]) = block.col(i);
  }
  tr.final_density = rho;
  tr.final_objective = tr.final_spectrum.eigenvalues[problem.k - 1];
  for (std::size_t c = 0; c < tr.final_spectrum.clusters.size(); ++c) {
    const auto& cl = tr.final_spectrum.clusters[c];
    if (std::find(cl.begin(), cl.end(), problem.k - 1) != cl.end()) {
      tr.certificate_cluster = static_cast<int>(c);
      break;
    }
  }
  tr.certificate = check_optimality(tr.final_spectrum, rho, tr.certificate_cluster,
                                    problem.direction);
  return tr;
}

OptimizeTrace optimize(const ExtremalProblem& problem) {
  const OptimizeSettings& st = problem.settings;
  if (st.n_seeds < 1) throw InvalidArgument("n_seeds must be >= 1");
  const BoundaryCurve& curve = problem.curve;
  const bool minimize = problem.direction == Direction::minimize;

  Eigen::ArrayXd base;
  if (problem.initial_values.size() > 0) {
    if (problem.initial_values.size() != curve.n_nodes) {
      throw InvalidArgument("initial density size != n_nodes");
    }
    base = problem.initial_values;
  } else {
    base = Eigen::ArrayXd::Constant(curve.n_nodes, problem.alpha);
  }

  OptimizeTrace best;
  std::vector<double> finals;
  for (int s = 0; s < st.n_seeds; ++s) {
    Eigen::ArrayXd raw = base;
    if (s == 0) {
      if (problem.initial_values.size() == 0) {
        raw += 1e-2 * ((problem.k + 1) * curve.theta).cos();
      }
    } else if (s == 1) {
      raw += 1e-2 * (problem.k * curve.theta).cos();
    } else {
      std::mt19937_64 rng(st.seed * 1000003ULL + static_cast<unsigned long long>(s));
      auto unit = [&]() {
        return 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0;
      };
      for (int m = 1; m <= 4; ++m) {
        raw += (1e-2 / m) *
               (unit() * (m * curve.theta).cos() + unit() * (m * curve.theta).sin());
      }
    }
    const Density rho0 = project_admissible(curve, raw, problem.alpha);
    OptimizeTrace tr = optimize_single(problem, rho0);
    const double fin = tr.final_objective;
    finals.push_back(fin);
    const bool better = best.objectives.empty() ||
                        (minimize ? fin < best.final_objective
                                  : fin > best.final_objective);
    if (better) {
      best = std::move(tr);
      best.seed_index = s;
    }
  }
  best.seed_objectives = std::move(finals);
  return best;
}

}  // namespace steklov
