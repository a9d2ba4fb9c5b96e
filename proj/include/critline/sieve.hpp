#pragma once

#include <cstdint>
#include <vector>

namespace critline {

// Linear-sieve products up to `limit`: Moebius values, smallest prime factors,
// and the ascending prime list.  Built once, immutable afterwards.
struct ArithmeticTables {
  std::int64_t limit = 0;
  std::vector<std::int8_t> mobius;  // index 0..limit
  std::vector<std::int32_t> spf;
  std::vector<std::int32_t> primes;

  int mu(std::int64_t n) const { return mobius[static_cast<size_t>(n)]; }
  bool squarefree(std::int64_t n) const { return mu(n) != 0; }

  // Distinct prime divisors, ascending; n must be within the table.
  std::vector<std::int32_t> distinct_primes(std::int64_t n) const;
};

// Fails with a resource error beyond the in-memory budget (5e8).
ArithmeticTables sieve(std::int64_t limit);

}  // namespace critline
