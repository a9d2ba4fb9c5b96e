#pragma once

#include <utility>
#include <vector>

#include "critline/config.hpp"
#include "critline/kernel.hpp"

namespace critline {

enum class Region { inner, outer };

struct BoundResult {
  double kappa = 0.0;
  double mean_value = 0.0;
  double integral_region1 = 0.0;
  double integral_region2 = 0.0;
  MollifierConfig config;
  // Change in kappa after doubling (nodes_t, nodes_mu) once and twice;
  // empty when quad.refine is off.
  std::vector<double> kappa_refinement_deltas;
};

// The jet of (F(b,a,t) - e^{-a-b} F(-a,-b,t)) / (theta1 (a+b)), where F is the
// inner or outer bilinear form.  The negated-argument form is computed on
// negated jets, not re-derived formulas.
template <class S>
Jet2<S> integrand_jet(const MollifierConfig& cfg, const Jet2<S>& a, const Jet2<S>& b,
                      double t, Region region) {
  Jet2<S> fba = region == Region::inner ? kernel::bilinear_form(cfg, b, a, t)
                                        : kernel::bilinear_form_outer(cfg, b, a, t);
  Jet2<S> fnn = region == Region::inner ? kernel::bilinear_form(cfg, -a, -b, t)
                                        : kernel::bilinear_form_outer(cfg, -a, -b, t);
  Jet2<S> num = fba - exp(-(a + b)) * fnn;
  Jet2<S> den = (a + b) * cfg.theta1;
  return num * recip(den);
}

// Q(-d/da) Q(-d/db) of the quotient above, evaluated at a = b = -R.
double bound_integrand(const MollifierConfig& cfg, double t, Region region);

// Two-region t-integration, mean value M, and kappa = 1 - log(M)/R.
BoundResult compute_bound(const MollifierConfig& cfg);

// (R, kappa) over an inclusive grid; all other parameters fixed.
std::vector<std::pair<double, double>> scan_R(const MollifierConfig& cfg, double r_min,
                                              double r_max, int steps);

}  // namespace critline
