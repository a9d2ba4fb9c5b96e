#include "critline/config.hpp"

#include <cmath>
#include <sstream>

#include "critline/errors.hpp"

namespace critline {

std::string to_string(Mode m) {
  return m == Mode::unconditional ? "unconditional" : "theta1_conjecture";
}

Mode mode_from_string(const std::string& s) {
  if (s == "unconditional") return Mode::unconditional;
  if (s == "theta1_conjecture") return Mode::theta1_conjecture;
  throw ParseError("unknown mode '" + s + "' (expected unconditional or theta1_conjecture)");
}

void MollifierConfig::finalize() {
  P1 = p1_from_basis(p1_basis);
  P1d = derivative(P1);
  Q = q_from_basis(q_basis);
  Qd = derivative(Q);
  P.clear();
  Pd.clear();
  for (const auto& c : p_coeffs) {
    P.push_back(poly_from_shifted_coeffs(c));
    Pd.push_back(derivative(P.back()));
  }
}

std::string ConstraintReport::to_string() const {
  std::ostringstream os;
  if (violations.empty()) return "all constraints satisfied";
  os << "constraint violations:";
  for (const auto& [name, mag] : violations) os << " [" << name << " |" << mag << "|]";
  return os.str();
}

ConstraintReport check_constraints(const MollifierConfig& cfg) {
  constexpr double tol = 1e-12;
  ConstraintReport rep;
  auto flag = [&](const std::string& name, double mag) {
    if (std::abs(mag) > tol) rep.violations.emplace_back(name, std::abs(mag));
  };

  flag("P1(0)=0", cfg.P1(0.0));
  flag("P1(1)=1", cfg.P1(1.0) - 1.0);
  for (int l = 2; l <= cfg.I && l - 2 < static_cast<int>(cfg.P.size()); ++l)
    flag("P_l(0)=0 (l=" + std::to_string(l) + ")", cfg.P_l(l)(0.0));
  flag("Q(0)=1", cfg.Q.coeff(0) - 1.0);

  // Q' symmetry as a polynomial identity on the coefficients.
  Polynomial diff = cfg.Qd;
  Polynomial refl = reflect_unit(cfg.Qd);
  double worst = 0.0;
  int deg = std::max(diff.degree(), refl.degree());
  for (int k = 0; k <= deg; ++k)
    worst = std::max(worst, std::abs(diff.coeff(k) - refl.coeff(k)));
  flag("Q' symmetry", worst);

  if (!(cfg.theta1 > 0.0)) rep.violations.emplace_back("theta1 > 0", cfg.theta1);
  if (!(cfg.theta1 <= cfg.theta))
    rep.violations.emplace_back("theta1 <= theta", cfg.theta1 - cfg.theta);
  if (cfg.mode == Mode::unconditional) {
    if (!(cfg.theta <= 4.0 / 7.0 + tol))
      rep.violations.emplace_back("theta <= 4/7", cfg.theta - 4.0 / 7.0);
    if (!(cfg.theta1 <= 0.5 + tol))
      rep.violations.emplace_back("theta1 <= 1/2", cfg.theta1 - 0.5);
  } else {
    if (!(cfg.theta == cfg.theta1))
      rep.violations.emplace_back("theta = theta1 (conjecture mode)", cfg.theta - cfg.theta1);
    if (!(cfg.theta <= 1.0 + tol)) rep.violations.emplace_back("theta <= 1", cfg.theta - 1.0);
  }
  if (!(cfg.R > 0.0)) rep.violations.emplace_back("R > 0", cfg.R);
  if (cfg.I < 2) rep.violations.emplace_back("I >= 2", static_cast<double>(cfg.I));
  if (static_cast<int>(cfg.p_coeffs.size()) != cfg.I - 1)
    rep.violations.emplace_back("piece count = I-1",
                                static_cast<double>(cfg.p_coeffs.size()) - (cfg.I - 1));
  return rep;
}

namespace reference {

MollifierConfig theorem1() {
  MollifierConfig cfg;
  cfg.theta = 4.0 / 7.0;
  cfg.theta1 = 0.5;
  cfg.R = 1.3025;
  cfg.I = 3;
  cfg.p1_basis = {0.2950, -2.2345, 1.882};
  cfg.p_coeffs = {{0.0849, 1.9824}, {0.7516}};
  cfg.q_basis = {-0.6684, -1.0798, -5.0447};
  cfg.mode = Mode::unconditional;
  cfg.finalize();
  return cfg;
}

MollifierConfig corollary1() {
  MollifierConfig cfg;
  cfg.theta = 1.0;
  cfg.theta1 = 1.0;
  cfg.R = 0.7721;
  cfg.I = 3;
  cfg.p1_basis = {0.1560, -1.4045, -0.0662};
  cfg.p_coeffs = {{2.0409, 0.2661}, {-0.0734}};
  cfg.q_basis = {-0.7721, -0.1901, -3.9627};
  cfg.mode = Mode::theta1_conjecture;
  cfg.finalize();
  return cfg;
}

}  // namespace reference

}  // namespace critline
