#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "pnl/error.hpp"

namespace pnl {

/// Canonical index of an element of F_p^n (little-endian base-p digits).
using Index = std::uint32_t;

constexpr std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

constexpr bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

/// Floor of the square root, exact for all 64-bit inputs.
std::uint64_t isqrt(std::uint64_t v);
bool is_square(std::uint64_t v);

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t v);

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

/// Legendre symbol (l/p) for an odd prime p; l may be negative.
int legendre(std::int64_t l, unsigned p);

inline unsigned mod_p(std::int64_t v, unsigned p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<unsigned>(r < 0 ? r + p : r);
}

}  // namespace pnl
