#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace yendo {

/// Base-p expansion of a non-negative integer, least-significant digit first.
/// Zero is stored as the single digit [0].
struct DigitVector {
  std::vector<std::uint64_t> digits;
  std::uint64_t prime = 2;

  std::uint64_t value() const;
  bool operator==(const DigitVector&) const = default;
};

/// Largest prime accepted by the modular routines. Primality is decided by
/// trial division, so the bound keeps that check trivially cheap.
inline constexpr std::uint64_t kMaxPrime = 1u << 16;

bool is_prime(std::uint64_t p);

/// Throws std::invalid_argument unless p is a prime no larger than kMaxPrime.
void require_prime(std::uint64_t p);

DigitVector p_adic_digits(std::uint64_t a, std::uint64_t p);

/// C(m, n) mod p through the digit-wise product of Lucas' congruence.
/// Returns 0 for n > m.
std::uint64_t binom_mod_p(std::uint64_t m, std::uint64_t n, std::uint64_t p);

/// Parity of C(m, n): odd exactly when every binary digit of n is at most
/// the matching digit of m.
constexpr bool binom_odd(std::uint64_t m, std::uint64_t n) {
  return n <= m && (n & ~m) == 0;
}

/// C(m+2g, g) mod 2; decides whether Y^mu is a summand of M^lambda.
std::uint64_t b_parity(std::uint64_t m, std::uint64_t g);

// Exact-integer route, kept independent of the digit arithmetic above.

/// C(m, n) as an arbitrary-precision integer via the multiplicative formula.
mpz_class binom_exact(std::uint64_t m, std::uint64_t n);

/// All of C(m, 0..m) as exact integers, one multiplicative sweep along the row.
std::vector<mpz_class> binom_row_exact(std::uint64_t m);

std::uint64_t binom_mod_p_exact(std::uint64_t m, std::uint64_t n, std::uint64_t p);

}  // namespace yendo
