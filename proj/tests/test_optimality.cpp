// Level-set stationarity certificate: the cluster's squared-trace sum must
// sit below / at / above a common level on the density's 0 / interior / 1
// regions (minimize; reversed for maximize).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <vector>

#include "doctest.h"
#include "steklov/bem.hpp"
#include "steklov/density.hpp"
#include "steklov/geometry.hpp"
#include "steklov/optimality.hpp"
#include "steklov/spectrum.hpp"

using namespace steklov;

TEST_CASE("constant density passes the maximizer certificate with a flat level") {
  const BoundaryCurve c = make_disk(256);
  const Density rho = make_constant(c, 0.5);
  const SpectralResult spec = disk_galerkin(c, rho, 60, 2);
  REQUIRE(spec.clusters[0].size() == 2);
  const OptimalityReport rep = check_optimality(spec, rho, 0, Direction::maximize);
  CHECK(rep.pass);
  // F = (cos^2 + sin^2) / (pi alpha) = 2/pi everywhere.
  CHECK(rep.c == doctest::Approx(2.0 / pi).epsilon(1e-8));
  CHECK((rep.f - 2.0 / pi).abs().maxCoeff() < 1e-8);
  CHECK(rep.violation_interior < 1e-8);
  // All nodes lie strictly between the box faces.
  for (int r : rep.region) CHECK(r == 1);
}

TEST_CASE("a generic interior density fails the minimizer certificate") {
  const BoundaryCurve c = make_disk(256);
  const Density rho = make_fourier_perturbed(c, 0.5, 0.25, {1.0}, {});
  const SpectralResult spec = disk_galerkin(c, rho, 80, 2);
  const OptimalityReport rep =
      check_optimality(spec, rho, 0, Direction::minimize, 1e-3, 1e-2);
  CHECK(!rep.pass);
  CHECK(rep.violation_interior > rep.tol_effective);
}

TEST_CASE("the level is invariant under recombination of the cluster basis") {
  const BoundaryCurve c = make_disk(256);
  const Density rho = make_constant(c, 0.5);
  SpectralResult spec = disk_galerkin(c, rho, 60, 2);
  const OptimalityReport base = check_optimality(spec, rho, 0, Direction::maximize);

  const double phi = 1.1;
  SpectralResult rotated = spec;
  rotated.traces.col(0) =
      std::cos(phi) * spec.traces.col(0) + std::sin(phi) * spec.traces.col(1);
  rotated.traces.col(1) =
      -std::sin(phi) * spec.traces.col(0) + std::cos(phi) * spec.traces.col(1);
  const OptimalityReport rot = check_optimality(rotated, rho, 0, Direction::maximize);
  CHECK((rot.f - base.f).abs().maxCoeff() < 1e-10);
  CHECK(std::abs(rot.c - base.c) < 1e-10);
}

TEST_CASE("bang-bang two-arc minimizer satisfies the split-level conditions") {
  // The two-arc indicator of half mass is the known first-eigenvalue
  // minimizer shape; with no interior nodes the certificate reduces to
  // max F on {rho=0} <= min F on {rho=1} up to tolerance.
  const BoundaryCurve c = make_disk(512);
  const Density rho = make_arc_indicator(c, 0.5, 2);
  const SpectralResult spec = solve_weighted(assemble(c), rho, 2);
  const OptimalityReport rep =
      check_optimality(spec, rho, 0, Direction::minimize, 1e-3, 1e-2);
  CHECK(rep.pass);
  // The indicator's fractional edge nodes are the only interior points.
  int interior = 0;
  for (int r : rep.region) interior += (r == 1);
  CHECK(interior <= 4);
}

TEST_CASE("cluster index bounds are validated") {
  const BoundaryCurve c = make_disk(256);
  const Density rho = make_constant(c, 0.5);
  const SpectralResult spec = disk_galerkin(c, rho, 60, 2);
  CHECK_THROWS_AS(check_optimality(spec, rho, 5, Direction::minimize), InvalidArgument);
  CHECK_THROWS_AS(check_optimality(spec, rho, -1, Direction::minimize), InvalidArgument);
}
