#include "critline/polynomial.hpp"

#include <cmath>
#include <cstdlib>

#include "critline/errors.hpp"

namespace critline {

static void trim(std::vector<double>& c) {
  while (!c.empty() && c.back() == 0.0) c.pop_back();
}

Polynomial::Polynomial(std::vector<double> c) : coeffs(std::move(c)) { trim(coeffs); }

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial derivative(const Polynomial& p) {
  std::vector<double> d;
  for (int k = 1; k <= p.degree(); ++k) d.push_back(k * p.coeffs[k]);
  return Polynomial(std::move(d));
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Polynomial reflect_unit(const Polynomial& p) {
  // p(1-x) = sum_k c_k sum_i C(k,i) (-x)^i
  std::vector<double> out(p.coeffs.size(), 0.0);
  for (int k = 0; k <= p.degree(); ++k) {
    double ck = p.coeffs[k];
    if (ck == 0.0) continue;
    for (int i = 0; i <= k; ++i) {
      double sign = (i % 2 == 0) ? 1.0 : -1.0;
      out[i] += ck * sign * static_cast<double>(binomial(k, i));
    }
  }
  return Polynomial(std::move(out));
}

Polynomial p1_from_basis(std::span<const double> c) {
  int m = static_cast<int>(c.size());
  std::vector<double> out(static_cast<size_t>(m) + 2, 0.0);
  out[1] = 1.0;  // leading x
  for (int k = 1; k <= m; ++k) {
    double ck = c[k - 1];
    if (ck == 0.0) continue;
    // x(1-x)^k contributes C(k,i)(-1)^i at x^{i+1}
    for (int i = 0; i <= k; ++i) {
      double sign = (i % 2 == 0) ? 1.0 : -1.0;
      out[static_cast<size_t>(i) + 1] += ck * sign * static_cast<double>(binomial(k, i));
    }
  }
  return Polynomial(std::move(out));
}

Polynomial q_from_basis(std::span<const double> c) {
  int m = static_cast<int>(c.size());
  std::vector<double> out(static_cast<size_t>(2 * m) + 1, 0.0);
  out[0] = 1.0;
  for (int k = 0; k < m; ++k) {
    double ck = c[k];
    if (ck == 0.0) continue;
    // B_k(x) = sum_i C(k,i)(-1)^i x^{k+i+1}/(k+i+1)
    for (int i = 0; i <= k; ++i) {
      double sign = (i % 2 == 0) ? 1.0 : -1.0;
      out[static_cast<size_t>(k + i) + 1] +=
          ck * sign * static_cast<double>(binomial(k, i)) / (k + i + 1);
    }
  }
  return Polynomial(std::move(out));
}

Polynomial poly_from_shifted_coeffs(std::span<const double> c) {
  std::vector<double> out(c.size() + 1, 0.0);
  for (size_t i = 0; i < c.size(); ++i) out[i + 1] = c[i];
  return Polynomial(std::move(out));
}

}  // namespace critline
