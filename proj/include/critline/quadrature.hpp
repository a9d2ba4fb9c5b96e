#pragma once

#include <vector>

namespace critline {

// Gauss-Legendre nodes and weights on [-1, 1].
struct QuadRule {
  std::vector<double> x;
  std::vector<double> w;
  int size() const { return static_cast<int>(x.size()); }
};

// Cached rule for n nodes; thread-safe.
const QuadRule& gauss_legendre(int n);

// Integrate f over [lo, hi] with an n-node rule.
template <class F>
auto integrate(int n, double lo, double hi, F&& f) -> decltype(f(0.0)) {
  const QuadRule& r = gauss_legendre(n);
  double mid = 0.5 * (lo + hi);
  double half = 0.5 * (hi - lo);
  decltype(f(0.0)) acc{};
  for (int i = 0; i < r.size(); ++i) acc += f(mid + half * r.x[i]) * (half * r.w[i]);
  return acc;
}

}  // namespace critline
