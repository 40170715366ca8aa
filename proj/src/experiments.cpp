#include "steklov/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "steklov/bem.hpp"
#include "steklov/density.hpp"
#include "steklov/geometry.hpp"

namespace steklov {

std::vector<SweepRow> homogenization_sweep(double alpha, int k,
                                           const std::vector<int>& n_list) {
  if (k < 1) throw InvalidArgument("k must be >= 1");
  if (n_list.empty()) throw InvalidArgument("n_list must be nonempty");
  for (std::size_t i = 1; i < n_list.size(); ++i) {
    if (n_list[i] <= n_list[i - 1]) throw InvalidArgument("n_list must be increasing");
  }
  const double limit = static_cast<double>((k + 1) / 2) / alpha;
  std::vector<SweepRow> rows;
  for (int n_arcs : n_list) {
    SweepRow row;
    row.n_arcs = n_arcs;
    // The indicator has 2*n_arcs jump points; the trace loses regularity at
    // each switch, so the grid scales with the arc count.
    row.n_nodes = std::max(256, 32 * n_arcs);
    const BoundaryCurve curve = make_disk(row.n_nodes);
    const Density rho = make_arc_indicator(curve, alpha, n_arcs);
    const SpectralResult spec = solve_weighted(assemble(curve), rho, k);
    row.lambda = spec.eigenvalues[k - 1];
    row.limit = limit;
    rows.push_back(row);
  }
  return rows;
}

std::vector<WeylRow> weyl_compare(double alpha, const std::vector<double>& extremal_values) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw InvalidArgument("alpha must lie in (0, 1]");
  std::vector<WeylRow> rows;
  for (std::size_t i = 0; i < extremal_values.size(); ++i) {
    WeylRow row;
    row.k = static_cast<int>(i) + 1;
    row.extremal = extremal_values[i];
    row.weyl = static_cast<double>((row.k + 1) / 2) / alpha;
    row.ratio = row.extremal / row.weyl;
    rows.push_back(row);
  }
  return rows;
}

BoundCheck hps_bound_check(const SpectralResult& spec, double alpha, double perimeter) {
  BoundCheck bc;
  bc.min_margin = std::numeric_limits<double>::infinity();
  bc.pass = true;
  for (int k = 1; k <= spec.eigenvalues.size(); ++k) {
    const double bound = 2.0 * pi * k / (alpha * perimeter);
    const double margin = bound - spec.eigenvalues[k - 1];
    bc.bounds.push_back(bound);
    bc.margins.push_back(margin);
    bc.min_margin = std::min(bc.min_margin, margin);
    if (margin < -1e-6) bc.pass = false;
  }
  return bc;
}

}  // namespace steklov
