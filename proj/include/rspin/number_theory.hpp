#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace rspin {

/// Least non-negative residue of x modulo m (m >= 1).
constexpr std::int64_t mod_floor(std::int64_t x, std::int64_t m) {
  const std::int64_t v = x % m;
  return v < 0 ? v + m : v;
}

/// Residue of x in (-m/2, m/2].
constexpr std::int64_t mod_centered(std::int64_t x, std::int64_t m) {
  const std::int64_t v = mod_floor(x, m);
  return 2 * v > m ? v - m : v;
}

constexpr std::int64_t abs64(std::int64_t x) { return x < 0 ? -x : x; }

/// Inverse of a modulo m; requires gcd(a, m) == 1.
inline std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t old_r = mod_floor(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw std::domain_error("mod_inverse: arguments are not coprime");
  return mod_floor(old_s, m);
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer overflow in product");
  return out;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer overflow in sum");
  return out;
}

/// base^exp, throwing std::overflow_error when the result leaves int64.
inline std::int64_t checked_pow(std::int64_t base, unsigned exp) {
  std::int64_t out = 1;
  for (unsigned i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

/// base^exp saturating at `ceiling + 1` (so callers can compare against a cap
/// without overflow).
inline std::uint64_t saturating_pow(std::uint64_t base, unsigned exp, std::uint64_t ceiling) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && out > ceiling / base) return ceiling + 1;
    out *= base;
  }
  return out;
}

/// Positive divisors of |n| in ascending order; n must be nonzero.
inline std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n == 0) throw std::domain_error("divisors: zero has infinitely many divisors");
  n = abs64(n);
  std::vector<std::int64_t> low, high;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

/// gcd(a, b, r) as a divisor of r in [1, r]; gcd 0 never occurs since r >= 1.
inline std::int64_t ideal_generator(std::int64_t a, std::int64_t b, std::int64_t r) {
  return std::gcd(std::gcd(mod_floor(a, r), mod_floor(b, r)), r);
}

/// Jordan's totient J_2(n) = n^2 prod_{p|n} (1 - 1/p^2).
inline std::int64_t jordan_totient2(std::int64_t n) {
  std::int64_t out = n * n;
  std::int64_t m = n;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    out = out / (p * p) * (p * p - 1);
  }
  if (m > 1) out = out / (m * m) * (m * m - 1);
  return out;
}

}  // namespace rspin
