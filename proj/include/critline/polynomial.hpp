#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace critline {

// Dense real polynomial in the monomial basis; coeffs[k] multiplies x^k.
// The zero polynomial is the empty coefficient vector (degree -1).
struct Polynomial {
  std::vector<double> coeffs;

  Polynomial() = default;
  explicit Polynomial(std::vector<double> c);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.empty(); }
  double coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(coeffs.size())) ? coeffs[k] : 0.0;
  }

  // Horner evaluation.
  double operator()(double x) const;
};

Polynomial derivative(const Polynomial& p);

// p(1 - x), expanded with exact integer binomials.
Polynomial reflect_unit(const Polynomial& p);

// x + sum_k c[k] * x * (1-x)^(k+1).  Vanishes at 0 and equals 1 at 1 by construction.
Polynomial p1_from_basis(std::span<const double> c);

// 1 + sum_k c[k] * B_k(x) with B_k(x) = int_0^x u^k (1-u)^k du.
// B_k'(x) = x^k (1-x)^k is symmetric about 1/2, so Q'(x) = Q'(1-x) by construction.
Polynomial q_from_basis(std::span<const double> c);

// c[0]*x + c[1]*x^2 + ...; the zero-constant-term family used for the higher pieces.
Polynomial poly_from_shifted_coeffs(std::span<const double> c);

std::int64_t binomial(int n, int k);
double factorial(int n);

}  // namespace critline
