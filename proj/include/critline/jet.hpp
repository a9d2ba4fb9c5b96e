#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "critline/errors.hpp"
#include "critline/polynomial.hpp"

namespace critline {

// Bivariate truncated Taylor expansion in displacements (da, db) around the
// expansion point (a0, b0).  c[i][j] holds the Taylor coefficient
// f^(i,j)(a0,b0) / (i! j!), stored row-major on a full (order+1)^2 grid.
//
// S is the coefficient scalar: double for the bound evaluation, long double
// for high-precision cross-checks, std::complex<double> for the order-0
// shifted-argument evaluations.
template <class S>
struct Jet2 {
  int order = 0;
  S a0{};
  S b0{};
  std::vector<S> c;

  int stride() const { return order + 1; }
  S& at(int i, int j) { return c[static_cast<size_t>(i) * (order + 1) + j]; }
  const S& at(int i, int j) const { return c[static_cast<size_t>(i) * (order + 1) + j]; }
  S value() const { return c[0]; }

  bool same_shape(const Jet2& o) const {
    return order == o.order && a0 == o.a0 && b0 == o.b0;
  }
};

namespace detail {

template <class S>
void require_shape(const Jet2<S>& x, const Jet2<S>& y, const char* op) {
  if (!x.same_shape(y))
    throw StructuralError(std::string("jet ") + op + ": order/center mismatch");
}

template <class S>
bool is_zero_jet(const Jet2<S>& x) {
  for (const S& v : x.c)
    if (v != S{}) return false;
  return true;
}

}  // namespace detail

template <class S>
Jet2<S> jet_const(int order, S a0, S b0, S value) {
  Jet2<S> j;
  j.order = order;
  j.a0 = a0;
  j.b0 = b0;
  j.c.assign(static_cast<size_t>(order + 1) * (order + 1), S{});
  j.c[0] = value;
  return j;
}

template <class S>
Jet2<S> jet_var_a(int order, S a0, S b0) {
  Jet2<S> j = jet_const<S>(order, a0, b0, a0);
  if (order >= 1) j.at(1, 0) = S{1};
  return j;
}

template <class S>
Jet2<S> jet_var_b(int order, S a0, S b0) {
  Jet2<S> j = jet_const<S>(order, a0, b0, b0);
  if (order >= 1) j.at(0, 1) = S{1};
  return j;
}

template <class S>
Jet2<S> operator+(const Jet2<S>& x, const Jet2<S>& y) {
  detail::require_shape(x, y, "add");
  Jet2<S> r = x;
  for (size_t k = 0; k < r.c.size(); ++k) r.c[k] += y.c[k];
  return r;
}

template <class S>
Jet2<S> operator-(const Jet2<S>& x, const Jet2<S>& y) {
  detail::require_shape(x, y, "sub");
  Jet2<S> r = x;
  for (size_t k = 0; k < r.c.size(); ++k) r.c[k] -= y.c[k];
  return r;
}

template <class S>
Jet2<S> operator-(const Jet2<S>& x) {
  Jet2<S> r = x;
  for (S& v : r.c) v = -v;
  return r;
}

template <class S>
Jet2<S>& operator+=(Jet2<S>& x, const Jet2<S>& y) {
  detail::require_shape(x, y, "add");
  for (size_t k = 0; k < x.c.size(); ++k) x.c[k] += y.c[k];
  return x;
}

template <class S, class R>
Jet2<S> operator*(const Jet2<S>& x, R r) {
  Jet2<S> out = x;
  S f = static_cast<S>(r);
  for (S& v : out.c) v *= f;
  return out;
}

template <class S, class R>
Jet2<S> operator*(R r, const Jet2<S>& x) {
  return x * r;
}

// Truncated Cauchy product.  Each output coefficient accumulates a few dozen
// terms; compensated summation keeps the kernel sums stable across the
// thousands of products per quadrature pass.
template <class S>
Jet2<S> operator*(const Jet2<S>& x, const Jet2<S>& y) {
  detail::require_shape(x, y, "mul");
  int n = x.order;
  Jet2<S> r = jet_const<S>(n, x.a0, x.b0, S{});
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      S sum{};
      S comp{};
      for (int p = 0; p <= i; ++p) {
        for (int q = 0; q <= j; ++q) {
          S term = x.at(p, q) * y.at(i - p, j - q);
          S t = sum + term;
          // Kahan-Neumaier compensation, valid for complex S as well.
          comp += term - (t - sum);
          sum = t;
        }
      }
      r.at(i, j) = sum + comp;
    }
  }
  return r;
}

// exp(x) = exp(c0) * sum_{k<=2n} (x-c0)^k / k!; the displacement part is
// nilpotent so the series terminates exactly.
template <class S>
Jet2<S> exp(const Jet2<S>& x) {
  using std::exp;
  Jet2<S> nil = x;
  nil.c[0] = S{};
  Jet2<S> sum = jet_const<S>(x.order, x.a0, x.b0, S{1});
  Jet2<S> term = sum;
  int kmax = 2 * x.order;
  for (int k = 1; k <= kmax; ++k) {
    term = term * nil;
    if (detail::is_zero_jet(term)) break;
    sum += term * (1.0 / factorial(k));
  }
  return sum * exp(x.c[0]);
}

// 1/x by the truncated geometric series around the constant term.
template <class S>
Jet2<S> recip(const Jet2<S>& x) {
  using std::abs;
  S c0 = x.c[0];
  if (abs(c0) <= 1e-300)
    throw NumericalError("jet reciprocal: zero constant term at the expansion point");
  // u = 1 - x/c0 is nilpotent; 1/x = (1/c0) sum u^k.
  Jet2<S> u = x * (S{-1} / c0);
  u.c[0] += S{1};
  Jet2<S> sum = jet_const<S>(x.order, x.a0, x.b0, S{1});
  Jet2<S> term = sum;
  int kmax = 2 * x.order;
  for (int k = 1; k <= kmax; ++k) {
    term = term * u;
    if (detail::is_zero_jet(term)) break;
    sum += term;
  }
  return sum * (S{1} / c0);
}

// q1(-d/da) q2(-d/db) applied to the function carried by f, evaluated at the
// expansion point: sum_{i,j} q1_i q2_j (-1)^{i+j} i! j! c[i][j].
template <class S>
S apply_operator(const Polynomial& q1, const Polynomial& q2, const Jet2<S>& f) {
  int d1 = q1.degree();
  int d2 = q2.degree();
  if (f.order < d1 || f.order < d2)
    throw StructuralError("apply_operator: jet order below operator degree");
  S acc{};
  for (int i = 0; i <= d1; ++i) {
    if (q1.coeffs[i] == 0.0) continue;
    for (int j = 0; j <= d2; ++j) {
      if (q2.coeffs[j] == 0.0) continue;
      double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
      double w = q1.coeffs[i] * q2.coeffs[j] * sign * factorial(i) * factorial(j);
      acc += f.at(i, j) * S{w};
    }
  }
  return acc;
}

}  // namespace critline
