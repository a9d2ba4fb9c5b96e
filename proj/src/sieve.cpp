#include "critline/sieve.hpp"

#include "critline/errors.hpp"

namespace critline {

std::vector<std::int32_t> ArithmeticTables::distinct_primes(std::int64_t n) const {
  std::vector<std::int32_t> out;
  while (n > 1) {
    std::int32_t p = spf[static_cast<size_t>(n)];
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  return out;
}

ArithmeticTables sieve(std::int64_t limit) {
  if (limit < 2) throw StructuralError("sieve: limit must be >= 2");
  if (limit > 500'000'000)
    throw ResourceError("sieve limit " + std::to_string(limit) + " exceeds the memory budget (5e8)");
  ArithmeticTables t;
  t.limit = limit;
  size_t n = static_cast<size_t>(limit) + 1;
  t.mobius.assign(n, 0);
  t.spf.assign(n, 0);
  t.mobius[1] = 1;
  for (std::int64_t i = 2; i <= limit; ++i) {
    if (t.spf[static_cast<size_t>(i)] == 0) {
      t.spf[static_cast<size_t>(i)] = static_cast<std::int32_t>(i);
      t.mobius[static_cast<size_t>(i)] = -1;
      t.primes.push_back(static_cast<std::int32_t>(i));
    }
    for (std::int32_t p : t.primes) {
      if (p > t.spf[static_cast<size_t>(i)] || i * p > limit) break;
      t.spf[static_cast<size_t>(i * p)] = p;
      t.mobius[static_cast<size_t>(i * p)] =
          (p == t.spf[static_cast<size_t>(i)]) ? 0 : -t.mobius[static_cast<size_t>(i)];
    }
  }
  return t;
}

}  // namespace critline
