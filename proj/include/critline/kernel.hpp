#pragma once

#include <cmath>
#include <vector>

#include "critline/config.hpp"
#include "critline/jet.hpp"
#include "critline/quadrature.hpp"

// Jet-valued evaluation of the main-term kernel: the damped mu-integrals, the
// per-index profiles V_0, V_0*, V_1..V_I, and the two bilinear forms that feed
// the t-integration of the bound.  Everything is a pure function of
// (cfg, jets, t) and safe to evaluate concurrently.
namespace critline::kernel {

namespace detail {
inline double parity(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }
}

// int_0^{1-t} P_l(1-t-mu) mu^power e^{-theta1*mu*a} dmu, jet-valued in a.
//
// Writing a = c0 + N with N nilpotent, the damping factor splits into
// e^{-theta1*mu*c0} times a terminating series in N, so the quadrature
// reduces to scalar moments against e^{-theta1*mu*c0}; the jet is assembled
// once from those moments.
template <class S>
Jet2<S> inner_integral(const MollifierConfig& cfg, int l, int power, const Jet2<S>& a,
                       double t) {
  if (l < 2 || l > cfg.I) throw StructuralError("inner_integral: l out of range");
  Jet2<S> res = jet_const<S>(a.order, a.a0, a.b0, S{});
  double len = 1.0 - t;
  if (len <= 0.0) return res;

  const Polynomial& P = cfg.P_l(l);
  const QuadRule& rule = gauss_legendre(cfg.quad.nodes_mu);
  const int kmax = 2 * a.order;
  const S c0 = a.value();

  std::vector<S> mom(static_cast<size_t>(kmax) + 1, S{});
  for (int i = 0; i < rule.size(); ++i) {
    double mu = 0.5 * len * (rule.x[i] + 1.0);
    double w = 0.5 * len * rule.w[i];
    using std::exp;
    S f = exp(c0 * S{-cfg.theta1 * mu}) * S{w * P(1.0 - t - mu)};
    double mp = std::pow(mu, power);
    for (int k = 0; k <= kmax; ++k) {
      mom[static_cast<size_t>(k)] += f * S{mp};
      mp *= mu;
    }
  }

  Jet2<S> nil = a;
  nil.c[0] = S{};
  bool has_nil = !critline::detail::is_zero_jet(nil);
  Jet2<S> npow = jet_const<S>(a.order, a.a0, a.b0, S{1});
  double scale = 1.0;  // (-theta1)^k / k!
  for (int k = 0; k <= kmax; ++k) {
    res += npow * (mom[static_cast<size_t>(k)] * S{scale});
    if (k == kmax || !has_nil) break;
    npow = npow * nil;
    if (critline::detail::is_zero_jet(npow)) break;
    scale *= -cfg.theta1 / (k + 1);
  }
  return res;
}

// a*theta1*P1(1 - (theta1/theta) t) + (theta1/theta)*P1'(...) plus the
// alternating sum of damped integrals of the higher pieces.
template <class S>
Jet2<S> v0(const MollifierConfig& cfg, const Jet2<S>& a, double t) {
  double x = 1.0 - (cfg.theta1 / cfg.theta) * t;
  Jet2<S> res = a * (cfg.theta1 * cfg.P1(x));
  res.c[0] += S{(cfg.theta1 / cfg.theta) * cfg.P1d(x)};
  for (int l = 2; l <= cfg.I; ++l) {
    double w = detail::parity(l) / factorial(l - 2);
    res += inner_integral(cfg, l, l - 2, a, t) * w;
  }
  return res;
}

// The two-term tail profile used on [1, theta/theta1]; no integral part.
template <class S>
Jet2<S> v0_star(const MollifierConfig& cfg, const Jet2<S>& a, double t) {
  double x = 1.0 - (cfg.theta1 / cfg.theta) * t;
  Jet2<S> res = a * (cfg.theta1 * cfg.P1(x));
  res.c[0] += S{(cfg.theta1 / cfg.theta) * cfg.P1d(x)};
  return res;
}

// V_m for 1 <= m <= I.  One formula covers the whole family once empty index
// ranges are dropped: the a*theta1*P_m + P_m' head (absent for m=1 unless
// cfg.v1_includes_p1), the -C(m+1,m) P_{m+1} term while m+1 <= I, and the
// damped integrals of the pieces above m+1.
template <class S>
Jet2<S> v_m(const MollifierConfig& cfg, int m, const Jet2<S>& a, double t) {
  if (m < 1 || m > cfg.I) throw StructuralError("v_m: m out of range");
  double x = 1.0 - t;
  Jet2<S> res = jet_const<S>(a.order, a.a0, a.b0, S{});
  if (m >= 2 || cfg.v1_includes_p1) {
    const Polynomial& Pm = (m == 1) ? cfg.P1 : cfg.P_l(m);
    const Polynomial& Pmd = (m == 1) ? cfg.P1d : cfg.Pd_l(m);
    res += a * (cfg.theta1 * Pm(x));
    res.c[0] += S{Pmd(x)};
  }
  if (m + 1 <= cfg.I)
    res.c[0] -= S{static_cast<double>(binomial(m + 1, m)) * cfg.P_l(m + 1)(x)};
  for (int l = m + 2; l <= cfg.I; ++l) {
    double w = static_cast<double>(binomial(l, m)) * detail::parity(l - m) /
               factorial(l - m - 2);
    res += inner_integral(cfg, l, l - m - 2, a, t) * w;
  }
  return res;
}

// sum over 0 <= k <= min(m1,m2) of m1!/(m1-k)! * C(m2,k); symmetric in (m1,m2).
inline double tuple_pair_weight(int m1, int m2) {
  std::int64_t acc = 0;
  int kmax = std::min(m1, m2);
  for (int k = 0; k <= kmax; ++k) {
    std::int64_t perm = 1;
    for (int i = 0; i < k; ++i) perm *= (m1 - i);
    acc += perm * binomial(m2, k);
  }
  return static_cast<double>(acc);
}

// The inner-region bilinear form: the weighted double sum of V_{m1}(a) V_{m2}(b)
// with t^{m1+m2}/(m1+m2)! and the tuple-pair weights.
template <class S>
Jet2<S> bilinear_form(const MollifierConfig& cfg, const Jet2<S>& a, const Jet2<S>& b,
                      double t) {
  int I = cfg.I;
  std::vector<Jet2<S>> va, vb;
  va.reserve(static_cast<size_t>(I) + 1);
  vb.reserve(static_cast<size_t>(I) + 1);
  va.push_back(v0(cfg, a, t));
  vb.push_back(v0(cfg, b, t));
  for (int m = 1; m <= I; ++m) {
    va.push_back(v_m(cfg, m, a, t));
    vb.push_back(v_m(cfg, m, b, t));
  }
  Jet2<S> res = jet_const<S>(a.order, a.a0, a.b0, S{});
  for (int m1 = 0; m1 <= I; ++m1) {
    for (int m2 = 0; m2 <= I; ++m2) {
      double w =
          tuple_pair_weight(m1, m2) * std::pow(t, m1 + m2) / factorial(m1 + m2);
      if (w == 0.0) continue;
      res += (va[static_cast<size_t>(m1)] * vb[static_cast<size_t>(m2)]) * w;
    }
  }
  return res;
}

// The outer-region form: the plain product of the two tail profiles.
template <class S>
Jet2<S> bilinear_form_outer(const MollifierConfig& cfg, const Jet2<S>& a,
                            const Jet2<S>& b, double t) {
  return v0_star(cfg, a, t) * v0_star(cfg, b, t);
}

}  // namespace critline::kernel
