#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "critline/config.hpp"
#include "critline/sieve.hpp"

// Brute-force evaluation of the finite sums behind the bound, plus the
// matching main-term formulas.  These are the independent checks: the brute
// side touches only the sieve tables and the coefficient definition, never
// the kernel module.
namespace critline::oracle {

using cplx = std::complex<double>;

// Finite two-piece coefficients a_j for j <= y: the full prime-tuple formula
// below y1, the single leading piece above it (j = y1 included in the inner
// piece).  a_1 = 1 and a_j = 0 on non-squarefree j.
struct FiniteMollifier {
  std::int64_t y = 0;
  std::int64_t y1 = 0;
  std::vector<double> a;  // index 0..y
};

FiniteMollifier mollifier_coeffs(const ArithmeticTables& tables, std::int64_t y,
                                 std::int64_t y1, const MollifierConfig& cfg);

// y1 = y^(theta1/theta), i.e. both pieces scaled to the same effective T.
std::int64_t linked_y1(std::int64_t y, const MollifierConfig& cfg);

// sum over multiples of j: a_h / h^(1+alpha), h <= y.  Compensated summation.
cplx e_alpha_brute(std::int64_t j, cplx alpha, const FiniteMollifier& mol,
                   const ArithmeticTables& tables);

// Main-term formula for the same sum at finite y: the Euler-factor prefactor
// times the G-profile expansion over the prime-tuple sums of j.  The
// x-integrals are evaluated by quadrature.  j must be squarefree.
cplx e_alpha_main_term(std::int64_t j, cplx alpha, std::int64_t y, std::int64_t y1,
                       const MollifierConfig& cfg, const ArithmeticTables& tables);

// sum_{h,k<=y} a_h a_k (h,k)^(1+alpha+beta) / (h^(1+alpha) k^(1+beta)),
// computed through the gcd-grouping identity in O(y log y).
// Guarded at y <= 1e5 unless force.
cplx sigma_brute(cplx alpha, cplx beta, const FiniteMollifier& mol,
                 const ArithmeticTables& tables, bool force = false);

// Same sum by the definitional O(y^2) double loop; guarded at y <= 500
// unless force.  Retained as the independent cross-check of the grouping.
cplx sigma_brute_direct(cplx alpha, cplx beta, const FiniteMollifier& mol,
                        const ArithmeticTables& tables, bool force = false);

// Main term of Sigma at alpha = a/log T, beta = b/log T: the two-region
// t-integral of the bilinear forms at order-0 complex arguments, divided by
// theta1 log T.
cplx sigma_main_term(cplx alpha, cplx beta, const MollifierConfig& cfg,
                     double t_effective);

// Euler factors over the distinct primes of j.
cplx euler_f(std::int64_t j, cplx w, const ArithmeticTables& tables);   // prod (1 - p^-w)
double euler_f1(std::int64_t j, double w, const ArithmeticTables& tables);  // prod (1 + p^-w)

// m! e_m(log p : p | j): the ordered-tuple prime-log sums.
double tuple_sum(const std::vector<std::int32_t>& primes, int m);

}  // namespace critline::oracle
