#pragma once

#include <string>
#include <vector>

#include "critline/polynomial.hpp"

namespace critline {

// unconditional: mollifier length exponents at their proven limits
// (theta <= 4/7, theta1 <= 1/2).  theta1_conjecture: theta = theta1,
// extendable to 1, where the outer integration region is empty.
enum class Mode { unconditional, theta1_conjecture };

std::string to_string(Mode m);
Mode mode_from_string(const std::string& s);

struct QuadratureSettings {
  int nodes_t = 64;
  int nodes_mu = 48;
  bool refine = true;
};

// Full description of one bound computation: exponents, R, the polynomial
// family, and quadrature settings.  The polynomials P1 and Q are built from
// constrained bases so P1(0)=0, P1(1)=1, Q(0)=1 and Q'(x)=Q'(1-x) hold
// structurally; the higher pieces P_2..P_I have zero constant term.
struct MollifierConfig {
  double theta = 4.0 / 7.0;
  double theta1 = 0.5;
  double R = 1.0;
  int I = 2;
  std::vector<double> p1_basis;
  std::vector<std::vector<double>> p_coeffs;  // l = 2..I; entry k multiplies x^{k+1}
  std::vector<double> q_basis;
  Mode mode = Mode::unconditional;
  QuadratureSettings quad;

  // The first-order piece of the kernel family admits two readings when the
  // index ranges collide at small I; the default omits the P1 terms, matching
  // the coefficient family the prime-sum expansion produces.  The flag
  // switches to the variant that includes them.
  bool v1_includes_p1 = false;

  // Expanded polynomials and their derivatives; filled by finalize().
  Polynomial P1, P1d, Q, Qd;
  std::vector<Polynomial> P;   // P[l-2] for l = 2..I
  std::vector<Polynomial> Pd;

  void finalize();

  const Polynomial& P_l(int l) const { return P[static_cast<size_t>(l) - 2]; }
  const Polynomial& Pd_l(int l) const { return Pd[static_cast<size_t>(l) - 2]; }
};

struct ConstraintReport {
  std::vector<std::pair<std::string, double>> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

// Checks the structural identities on the expanded polynomials (so manually
// injected coefficients are caught too) plus the parameter ranges.
// Violations are data, not failures.
ConstraintReport check_constraints(const MollifierConfig& cfg);

namespace reference {
// Bundled reference configurations matching configs/theorem1.ini and
// configs/corollary1.ini.
MollifierConfig theorem1();
MollifierConfig corollary1();
}  // namespace reference

}  // namespace critline
