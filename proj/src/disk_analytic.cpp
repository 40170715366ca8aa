#include "steklov/disk_analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace steklov {

namespace {

double wrap_2pi(double a) {
  double w = std::fmod(a, 2.0 * pi);
  if (w < 0.0) w += 2.0 * pi;
  return w;
}

}  // namespace

ArcSet make_arc_set(std::vector<double> midpoints, std::vector<double> lengths) {
  if (midpoints.size() != lengths.size() || midpoints.empty()) {
    throw InvalidArgument("arc set needs matching nonempty midpoint/length lists");
  }
  double total = 0.0;
  for (double len : lengths) {
    if (!(len > 0.0)) throw InvalidArgument("arc lengths must be positive");
    total += len;
  }
  if (!(total < 2.0 * pi)) throw InvalidArgument("arcs must not cover the whole circle");

  // Disjointness mod 2*pi: sort by start angle and check consecutive gaps,
  // including the wrap-around pair.
  const std::size_t n = midpoints.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> start(n);
  for (std::size_t i = 0; i < n; ++i) start[i] = wrap_2pi(midpoints[i] - 0.5 * lengths[i]);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return start[a] < start[b]; });
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t a = order[i];
    const std::size_t b = order[(i + 1) % n];
    const double end_a = start[a] + lengths[a];
    const double start_b = start[b] + (i + 1 == n ? 2.0 * pi : 0.0);
    if (end_a > start_b + 1e-14) throw InvalidArgument("arcs overlap");
  }

  ArcSet arcs;
  arcs.midpoints = std::move(midpoints);
  arcs.lengths = std::move(lengths);
  arcs.epsilon = total / (2.0 * pi);
  return arcs;
}

ArcSet make_symmetric_arcs(int n_arcs, double eps) {
  if (n_arcs < 1) throw InvalidArgument("n_arcs must be >= 1");
  if (!(eps > 0.0 && eps < 1.0)) throw InvalidArgument("eps must lie in (0, 1)");
  std::vector<double> mid(n_arcs), len(n_arcs);
  for (int l = 0; l < n_arcs; ++l) {
    mid[l] = 2.0 * pi * l / n_arcs;
    len[l] = 2.0 * pi * eps / n_arcs;
  }
  return make_arc_set(std::move(mid), std::move(len));
}

std::vector<double> exact_constant_spectrum(double alpha, int k_max) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw InvalidArgument("alpha must lie in (0, 1]");
  if (k_max < 1) throw InvalidArgument("k_max must be >= 1");
  std::vector<double> out(k_max);
  for (int k = 1; k <= k_max; ++k) out[k - 1] = static_cast<double>((k + 1) / 2) / alpha;
  return out;
}

std::pair<double, double> fourier_shift(int j, double alpha, double a2j, double b2j) {
  if (j < 1) throw InvalidArgument("harmonic index must be >= 1");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw InvalidArgument("alpha must lie in (0, 1]");
  const double s = j / (2.0 * alpha * alpha) * std::hypot(a2j, b2j);
  return {-s, +s};
}

PerturbationVerdict criticality_verdict(int k, Direction direction, double alpha) {
  if (k < 1) throw InvalidArgument("k must be >= 1");
  PerturbationVerdict v;
  v.k = k;
  v.direction = direction;
  const bool odd = (k % 2 != 0);
  v.harmonic = odd ? (k + 1) / 2 : k / 2;
  std::tie(v.slope_minus, v.slope_plus) = fourier_shift(v.harmonic, alpha, 1.0, 0.0);
  // lambda_k is the lower branch (slope_minus) for odd k and the upper branch
  // (slope_plus) for even k, so no first-order perturbation can raise an odd
  // lambda_k or lower an even one, while the witness moves it the other way.
  const bool critical =
      odd ? (direction == Direction::maximize) : (direction == Direction::minimize);
  if (critical) {
    v.verdict = "critical";
  } else {
    v.verdict = "not-local-extremum";
    v.witness = "cos(" + std::to_string(2 * v.harmonic) + "*theta)";
  }
  return v;
}

ArcMatrixResult neumann_arc_matrix(int m, const ArcSet& arcs) {
  if (m < 1) throw InvalidArgument("harmonic m must be >= 1");
  if (!(arcs.epsilon > 0.0)) throw InvalidArgument("arc set has zero total length");
  Eigen::Matrix2d acc = Eigen::Matrix2d::Zero();
  for (std::size_t j = 0; j < arcs.midpoints.size(); ++j) {
    const double s = std::sin(m * arcs.lengths[j]);
    const double c2 = std::cos(2.0 * m * arcs.midpoints[j]);
    const double s2 = std::sin(2.0 * m * arcs.midpoints[j]);
    acc(0, 0) += s * c2;
    acc(0, 1) += s * s2;
    acc(1, 1) -= s * c2;
  }
  acc(1, 0) = acc(0, 1);
  ArcMatrixResult res;
  res.m = m * Eigen::Matrix2d::Identity() + acc / (2.0 * pi * arcs.epsilon);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(res.m);
  res.nu_min = es.eigenvalues()[0];
  res.nu_max = es.eigenvalues()[1];
  return res;
}

std::string asymptotic_verdict(int k, int n_arcs) {
  if (k < 1 || n_arcs < 1) throw InvalidArgument("k and n_arcs must be >= 1");
  if (n_arcs == k + 1) return "local-min";
  if (n_arcs == k) return "local-max";
  return "inconclusive";
}

}  // namespace steklov
