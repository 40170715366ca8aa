// Admissible nodal densities: constructors, mass bookkeeping, and the
// weighted projection onto the box-plus-mass constraint set.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "steklov/density.hpp"
#include "steklov/geometry.hpp"

using namespace steklov;

namespace {

// Exact weighted projection onto {0 <= v <= 1, sum v_i w_i = target} by
// breakpoint enumeration: the projection is clip(raw + mu) and the mass is a
// piecewise-linear nonincreasing... (increasing in mu) function whose kinks
// are at mu = -raw_i and mu = 1 - raw_i. Locate the bracketing kinks, then
// solve the linear segment exactly — no iteration, independent of the
// library's bisection.
Eigen::ArrayXd exact_projection(const Eigen::ArrayXd& raw, const Eigen::ArrayXd& w,
                                double target) {
  const int n = static_cast<int>(raw.size());
  std::vector<double> kinks;
  kinks.reserve(2 * n);
  for (int i = 0; i < n; ++i) {
    kinks.push_back(-raw[i]);
    kinks.push_back(1.0 - raw[i]);
  }
  std::sort(kinks.begin(), kinks.end());
  auto mass = [&](double mu) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += w[i] * std::clamp(raw[i] + mu, 0.0, 1.0);
    return s;
  };
  // Mass is nondecreasing in mu; find the segment containing the target.
  double lo = kinks.front(), hi = kinks.back();
  for (std::size_t j = 0; j + 1 < kinks.size(); ++j) {
    if (mass(kinks[j]) <= target && target <= mass(kinks[j + 1])) {
      lo = kinks[j];
      hi = kinks[j + 1];
      break;
    }
  }
  // On (lo, hi) the active set is fixed: mass(mu) = mass(lo) + slope*(mu-lo)
  // with slope = sum of w_i over the unclipped nodes at the midpoint.
  const double mid = 0.5 * (lo + hi);
  double slope = 0.0;
  for (int i = 0; i < n; ++i) {
    const double v = raw[i] + mid;
    if (v > 0.0 && v < 1.0) slope += w[i];
  }
  const double mu = (slope > 0.0) ? lo + (target - mass(lo)) / slope : lo;
  Eigen::ArrayXd out(n);
  for (int i = 0; i < n; ++i) out[i] = std::clamp(raw[i] + mu, 0.0, 1.0);
  return out;
}

double mass_of(const BoundaryCurve& c, const Eigen::ArrayXd& v) {
  return boundary_integral(c, v);
}

}  // namespace

TEST_CASE("constant density has exact mass and validated range") {
  const BoundaryCurve c = make_disk(128);
  const Density half = make_constant(c, 0.5);
  CHECK(std::abs(mass_of(c, half.values) - pi) < 1e-13);
  CHECK(half.alpha == 0.5);

  const Density full = make_constant(c, 1.0);
  CHECK((full.values == 1.0).all());

  CHECK_THROWS_AS(make_constant(c, 0.0), InvalidArgument);
  CHECK_THROWS_AS(make_constant(c, 1.5), InvalidArgument);
}

TEST_CASE("two-arc indicator covers the expected arcs with exact mass") {
  const BoundaryCurve c = make_disk(512);
  const Density rho = make_arc_indicator(c, 0.5, 2);
  // Arcs [0.75 pi, 1.25 pi] and [1.75 pi, 2.25 pi] (mod 2 pi), length pi/2 each.
  auto inside = [](double th) {
    const double t = std::fmod(th + 2.0 * pi, 2.0 * pi);
    return (t > 0.75 * pi && t < 1.25 * pi) || (t > 1.75 * pi) || (t < 0.25 * pi);
  };
  const double h = 2.0 * pi / c.n_nodes;
  for (int i = 0; i < c.n_nodes; ++i) {
    const double th = c.theta[i];
    // Nodes whose full quadrature cell lies inside (outside) must be 1 (0);
    // the straddling nodes carry fractional overlap.
    if (inside(th - 0.51 * h) && inside(th + 0.51 * h)) {
      // Interior cells land at 1 only up to the rounding of the overlap
      // ratio (endpoint difference divided by the cell width).
      CHECK(rho.values[i] == doctest::Approx(1.0).epsilon(1e-12));
    } else if (!inside(th - 0.51 * h) && !inside(th + 0.51 * h)) {
      CHECK(rho.values[i] <= 1e-12);
    } else {
      CHECK(rho.values[i] >= 0.0);
      CHECK(rho.values[i] <= 1.0);
    }
  }
  CHECK(std::abs(mass_of(c, rho.values) - pi) < 1e-8);
}

TEST_CASE("arc indicator mass stays exact across arc counts and offsets") {
  const BoundaryCurve c = make_disk(512);
  for (int n_arcs : {1, 2, 3, 4, 8, 16}) {
    for (double alpha : {0.25, 0.5, 0.7}) {
      const Density rho = make_arc_indicator(c, alpha, n_arcs);
      CHECK(std::abs(mass_of(c, rho.values) - alpha * 2.0 * pi) < 1e-8);
      CHECK(rho.values.minCoeff() >= 0.0);
      CHECK(rho.values.maxCoeff() <= 1.0);
    }
  }
  const Density full = make_arc_indicator(c, 1.0, 1);
  CHECK((full.values - 1.0).abs().maxCoeff() < 1e-12);
  CHECK_THROWS_AS(make_arc_indicator(c, 0.5, 0), InvalidArgument);
  CHECK_THROWS_AS(make_arc_indicator(c, -0.1, 2), InvalidArgument);
}

TEST_CASE("harmonic perturbations keep the mass and respect the box") {
  const BoundaryCurve c = make_disk(256);

  const Density base = make_fourier_perturbed(c, 0.5, 0.0, {1.0}, {});
  CHECK((base.values - 0.5).abs().maxCoeff() < 1e-15);

  const Density wav = make_fourier_perturbed(c, 0.5, 0.1, {0.0, 1.0}, {});
  for (int i = 0; i < c.n_nodes; ++i) {
    CHECK(std::abs(wav.values[i] - (0.5 + 0.1 * std::cos(2.0 * c.theta[i]))) < 1e-12);
  }
  CHECK(std::abs(mass_of(c, wav.values) - pi) < 1e-12);

  CHECK_THROWS_AS(make_fourier_perturbed(c, 0.5, 0.6, {0.0, 1.0}, {}), InvalidArgument);
}

TEST_CASE("projection matches the exact breakpoint solution per node") {
  const BoundaryCurve c = make_disk(256);
  const Eigen::ArrayXd raw = 0.5 + c.theta.cos();
  const Density p = project_admissible(c, raw, 0.5);
  const Eigen::ArrayXd oracle = exact_projection(raw, c.weight, 0.5 * c.perimeter);
  CHECK((p.values - oracle).abs().maxCoeff() < 1e-8);
  CHECK(std::abs(mass_of(c, p.values) - pi) < 1e-10);
}

TEST_CASE("projection of already feasible points is the identity") {
  const BoundaryCurve c = make_disk(128);
  const Density flat = project_admissible(c, Eigen::ArrayXd::Constant(c.n_nodes, 0.5), 0.5);
  CHECK((flat.values - 0.5).abs().maxCoeff() < 1e-12);

  const Density lifted = project_admissible(c, Eigen::ArrayXd::Zero(c.n_nodes), 0.5);
  CHECK((lifted.values - 0.5).abs().maxCoeff() < 1e-12);

  // Idempotency.
  const Eigen::ArrayXd raw = 0.4 + 0.8 * c.theta.sin();
  const Density once = project_admissible(c, raw, 0.5);
  const Density twice = project_admissible(c, once.values, 0.5);
  CHECK((once.values - twice.values).abs().maxCoeff() < 1e-12);
}

TEST_CASE("projection against the exact oracle on random inputs") {
  const BoundaryCurve c = make_disk(128);
  std::mt19937_64 gen(20240817);
  std::uniform_real_distribution<double> u(-1.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::ArrayXd raw(c.n_nodes);
    for (int i = 0; i < c.n_nodes; ++i) raw[i] = u(gen);
    const double alpha = 0.2 + 0.06 * trial / 2.0;
    const Density p = project_admissible(c, raw, alpha);
    const Eigen::ArrayXd oracle = exact_projection(raw, c.weight, alpha * c.perimeter);
    CHECK((p.values - oracle).abs().maxCoeff() < 1e-8);
    CHECK(std::abs(mass_of(c, p.values) - alpha * c.perimeter) < 1e-9);
    CHECK(p.values.minCoeff() >= 0.0);
    CHECK(p.values.maxCoeff() <= 1.0);
  }
}

TEST_CASE("no nearby feasible point beats the projection") {
  const BoundaryCurve c = make_disk(64);
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> u(-1.5, 2.5);
  std::uniform_real_distribution<double> z(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::ArrayXd raw(c.n_nodes);
    for (int i = 0; i < c.n_nodes; ++i) raw[i] = u(gen);
    const Density p = project_admissible(c, raw, 0.5);
    const double best = ((p.values - raw).square() * c.weight).sum();
    for (int s = 0; s < 25; ++s) {
      // Random mass-neutral perturbation, scaled to keep the box.
      Eigen::ArrayXd dir(c.n_nodes);
      for (int i = 0; i < c.n_nodes; ++i) dir[i] = z(gen);
      dir -= (dir * c.weight).sum() / c.weight.sum();
      double scale = 1e-3;
      for (int i = 0; i < c.n_nodes; ++i) {
        if (p.values[i] + scale * dir[i] > 1.0) scale = (1.0 - p.values[i]) / dir[i];
        if (p.values[i] + scale * dir[i] < 0.0) scale = -p.values[i] / dir[i];
      }
      if (!(scale > 0.0)) continue;
      const Eigen::ArrayXd cand = p.values + scale * dir;
      const double dist = ((cand - raw).square() * c.weight).sum();
      CHECK(dist >= best - 1e-12);
    }
  }
}

TEST_CASE("value wrapping validates the box and the mass") {
  const BoundaryCurve c = make_disk(128);
  const Eigen::ArrayXd good = Eigen::ArrayXd::Constant(c.n_nodes, 0.25);
  CHECK(make_from_values(c, good, 0.25).alpha == 0.25);

  Eigen::ArrayXd bad_box = good;
  bad_box[3] = 1.2;
  CHECK_THROWS_AS(make_from_values(c, bad_box, 0.25), InvalidArgument);

  CHECK_THROWS_AS(make_from_values(c, good, 0.5), InvalidArgument);  // mass mismatch
}
