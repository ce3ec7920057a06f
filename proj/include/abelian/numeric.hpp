#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace abelian {

// Exact 64-bit arithmetic. Anything that would wrap aborts with
// std::overflow_error instead of producing a wrong answer.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in multiplication");
  return r;
}

inline std::int64_t checked_neg(std::int64_t a) { return checked_sub(0, a); }

inline std::int64_t checked_div(std::int64_t a, std::int64_t b) {
  if (b == 0) throw std::domain_error("division by zero");
  if (a == std::numeric_limits<std::int64_t>::min() && b == -1)
    throw std::overflow_error("integer overflow in division");
  return a / b;
}

// Least nonnegative residue of v modulo m. Requires m > 0.
inline std::int64_t mod_reduce(std::int64_t v, std::int64_t m) {
  std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

// lcm for nonnegative inputs, overflow-checked.
inline std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / std::gcd(a, b), b);
}

// Trial division. Returns (prime, exponent) pairs, primes ascending.
inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("factorize requires n >= 1");
  std::vector<std::pair<std::int64_t, int>> factors;
  for (std::int64_t p = 2; p <= n / p; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    factors.emplace_back(p, e);
  }
  if (n > 1) factors.emplace_back(n, 1);
  return factors;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p <= n / p; ++p)
    if (n % p == 0) return false;
  return true;
}

// n = p^e with e >= 1 when such a decomposition exists; nullopt for n = 1
// and for n divisible by two distinct primes.
inline std::optional<std::pair<std::int64_t, int>> prime_power_decompose(
    std::int64_t n) {
  if (n < 1) throw std::invalid_argument("prime_power_decompose requires n >= 1");
  if (n == 1) return std::nullopt;
  auto factors = factorize(n);
  if (factors.size() != 1) return std::nullopt;
  return factors.front();
}

// All partitions of n into non-increasing positive parts, largest-first:
// partitions(4) = {4}, {3,1}, {2,2}, {2,1,1}, {1,1,1,1}.
inline std::vector<std::vector<int>> partitions(int n) {
  if (n < 0) throw std::invalid_argument("partitions requires n >= 0");
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  recurse(recurse, n, n);
  return out;
}

inline std::int64_t checked_pow(std::int64_t base, int exponent) {
  std::int64_t r = 1;
  for (int i = 0; i < exponent; ++i) r = checked_mul(r, base);
  return r;
}

}  // namespace abelian
