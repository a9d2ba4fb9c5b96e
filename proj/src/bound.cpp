#include "critline/bound.hpp"

#include <cmath>

#include "critline/errors.hpp"
#include "critline/parallel.hpp"
#include "critline/quadrature.hpp"

namespace critline {

double bound_integrand(const MollifierConfig& cfg, double t, Region region) {
  if (cfg.R == 0.0)
    throw NumericalError("theta1*(a+b) vanishes at the evaluation point a=b=-R: R = 0");
  int order = std::max(cfg.Q.degree(), 0);
  auto a = jet_var_a<double>(order, -cfg.R, -cfg.R);
  auto b = jet_var_b<double>(order, -cfg.R, -cfg.R);
  return apply_operator(cfg.Q, cfg.Q, integrand_jet(cfg, a, b, t, region));
}

namespace {

// Region integrals at given settings; node values are computed independently
// and reduced in index order, so the result is identical for any worker count.
std::pair<double, double> region_integrals(const MollifierConfig& cfg) {
  const QuadRule& rule = gauss_legendre(cfg.quad.nodes_t);
  int n = rule.size();

  auto integrate_region = [&](double lo, double hi, Region region) {
    std::vector<double> vals(static_cast<size_t>(n));
    double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    parallel_for(n, [&](int i) {
      vals[static_cast<size_t>(i)] =
          half * rule.w[i] * bound_integrand(cfg, mid + half * rule.x[i], region);
    });
    double acc = 0.0;
    for (double v : vals) acc += v;
    return acc;
  };

  double r1 = integrate_region(0.0, 1.0, Region::inner);
  double r2 = 0.0;
  if (cfg.theta > cfg.theta1)
    r2 = integrate_region(1.0, cfg.theta / cfg.theta1, Region::outer);
  return {r1, r2};
}

double kappa_of(const MollifierConfig& cfg, double mean) {
  if (!(mean > 0.0))
    throw NumericalError("mean value is not positive; bound undefined for this configuration");
  return 1.0 - std::log(mean) / cfg.R;
}

}  // namespace

BoundResult compute_bound(const MollifierConfig& cfg) {
  if (cfg.R == 0.0)
    throw NumericalError("theta1*(a+b) vanishes at the evaluation point a=b=-R: R = 0");
  ConstraintReport rep = check_constraints(cfg);
  if (!rep.ok()) throw ConstraintError(rep.to_string());

  BoundResult out;
  out.config = cfg;
  auto [r1, r2] = region_integrals(cfg);
  out.integral_region1 = r1;
  out.integral_region2 = r2;
  out.mean_value = r1 + r2;
  out.kappa = kappa_of(cfg, out.mean_value);

  if (cfg.quad.refine) {
    double prev = out.kappa;
    for (int step = 0; step < 2; ++step) {
      MollifierConfig fine = cfg;
      fine.quad.nodes_t = cfg.quad.nodes_t << (step + 1);
      fine.quad.nodes_mu = cfg.quad.nodes_mu << (step + 1);
      auto [f1, f2] = region_integrals(fine);
      double k = kappa_of(cfg, f1 + f2);
      out.kappa_refinement_deltas.push_back(k - prev);
      prev = k;
    }
    if (std::abs(out.kappa_refinement_deltas.back()) > 1e-8)
      throw NumericalError("quadrature refinement did not converge (second doubling moved kappa by " +
                           std::to_string(out.kappa_refinement_deltas.back()) + ")");
  }
  return out;
}

std::vector<std::pair<double, double>> scan_R(const MollifierConfig& cfg, double r_min,
                                              double r_max, int steps) {
  if (!(r_min > 0.0) || !(r_min <= r_max) || steps < 1)
    throw ParseError("scan_R: need 0 < r_min <= r_max and steps >= 1");
  std::vector<std::pair<double, double>> table;
  table.reserve(static_cast<size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    double r = (steps == 1) ? r_min : r_min + (r_max - r_min) * i / (steps - 1);
    MollifierConfig c = cfg;
    c.R = r;
    table.emplace_back(r, compute_bound(c).kappa);
  }
  return table;
}

}  // namespace critline
