#include "steklov/density.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace steklov {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw InvalidArgument("alpha must lie in (0, 1], got " + std::to_string(alpha));
  }
}

}  // namespace

Density make_constant(const BoundaryCurve& curve, double alpha) {
  check_alpha(alpha);
  Density d;
  d.values = Eigen::ArrayXd::Constant(curve.n_nodes, alpha);
  d.alpha = alpha;
  return d;
}

Density make_arc_indicator(const BoundaryCurve& curve, double alpha, int n_arcs) {
  check_alpha(alpha);
  if (!curve.is_disk) throw InvalidArgument("make_arc_indicator requires the disk");
  if (n_arcs < 1) throw InvalidArgument("n_arcs must be >= 1");

  const int n = curve.n_nodes;
  const double h = 2.0 * pi / n;
  Eigen::ArrayXd v = Eigen::ArrayXd::Zero(n);
  for (int i = 0; i < n; ++i) {
    const double a = curve.theta[i] - 0.5 * h;
    const double b = curve.theta[i] + 0.5 * h;
    double overlap = 0.0;
    for (int l = 0; l < n_arcs; ++l) {
      const double lo = pi * (2.0 * l - alpha) / n_arcs;
      const double hi = pi * (2.0 * l + alpha) / n_arcs;
      for (int s = -1; s <= 1; ++s) {
        const double shift = 2.0 * pi * s;
        overlap += std::max(0.0, std::min(b, hi + shift) - std::max(a, lo + shift));
      }
    }
    v[i] = std::clamp(overlap / h, 0.0, 1.0);
  }
  Density d;
  d.values = std::move(v);
  d.alpha = alpha;
  return d;
}

Density make_fourier_perturbed(const BoundaryCurve& curve, double alpha, double eps,
                               const std::vector<double>& cos_coeffs,
                               const std::vector<double>& sin_coeffs) {
  check_alpha(alpha);
  const int n = curve.n_nodes;
  Eigen::ArrayXd delta = Eigen::ArrayXd::Zero(n);
  for (std::size_t m = 1; m <= cos_coeffs.size(); ++m)
    delta += cos_coeffs[m - 1] * (static_cast<double>(m) * curve.theta).cos();
  for (std::size_t m = 1; m <= sin_coeffs.size(); ++m)
    delta += sin_coeffs[m - 1] * (static_cast<double>(m) * curve.theta).sin();
  // Recentre so the perturbation is mean-zero against the arclength measure
  // (a no-op on the disk, where pure harmonics already integrate to zero).
  delta -= boundary_integral(curve, delta) / curve.perimeter;

  Eigen::ArrayXd v = alpha + eps * delta;
  if (v.minCoeff() < -1e-12 || v.maxCoeff() > 1.0 + 1e-12) {
    throw InvalidArgument("perturbed density leaves [0, 1]");
  }
  Density d;
  d.values = v.cwiseMax(0.0).cwiseMin(1.0);
  d.alpha = alpha;
  return d;
}

Density make_from_values(const BoundaryCurve& curve, const Eigen::ArrayXd& values,
                         double alpha) {
  check_alpha(alpha);
  if (values.size() != curve.n_nodes) {
    throw InvalidArgument("density length != n_nodes");
  }
  if (!values.allFinite() || values.minCoeff() < -1e-12 || values.maxCoeff() > 1.0 + 1e-12) {
    throw InvalidArgument("density values must lie in [0, 1]");
  }
  const double mass = boundary_integral(curve, values);
  const double target = alpha * curve.perimeter;
  if (std::abs(mass - target) > 1e-8 * std::max(1.0, target)) {
    throw InvalidArgument("density mass " + std::to_string(mass) +
                          " != alpha*perimeter " + std::to_string(target));
  }
  Density d;
  d.values = values.cwiseMax(0.0).cwiseMin(1.0);
  d.alpha = alpha;
  return d;
}

Density project_admissible(const BoundaryCurve& curve, const Eigen::ArrayXd& raw,
                           double alpha) {
  check_alpha(alpha);
  if (raw.size() != curve.n_nodes) throw InvalidArgument("raw length != n_nodes");
  if (!raw.allFinite()) throw InvalidArgument("raw values must be finite");

  const double target = alpha * curve.perimeter;
  const auto mass_at = [&](double mu) {
    return ((raw + mu).cwiseMax(0.0).cwiseMin(1.0) * curve.weight).sum();
  };
  // mass_at is nondecreasing and continuous in mu; these brackets pin the
  // extremes (all-zero vs all-one densities).
  double lo = -raw.maxCoeff();
  double hi = 1.0 - raw.minCoeff();
  for (int it = 0; it < 200 && hi - lo > 1e-14 * (1.0 + std::abs(lo) + std::abs(hi)); ++it) {
    const double mid = 0.5 * (lo + hi);
    (mass_at(mid) < target ? lo : hi) = mid;
  }
  const double mu = 0.5 * (lo + hi);

  Density d;
  d.values = (raw + mu).cwiseMax(0.0).cwiseMin(1.0);
  d.alpha = alpha;
  return d;
}

}  // namespace steklov
