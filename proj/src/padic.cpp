#include "yendo/padic.hpp"

#include <stdexcept>
#include <string>

namespace yendo {

std::uint64_t DigitVector::value() const {
  std::uint64_t v = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) v = v * prime + *it;
  return v;
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_prime(std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("modulus must be at least 2, got " + std::to_string(p));
  if (p > kMaxPrime)
    throw std::invalid_argument("modulus " + std::to_string(p) + " exceeds supported bound " +
                                std::to_string(kMaxPrime));
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
}

DigitVector p_adic_digits(std::uint64_t a, std::uint64_t p) {
  require_prime(p);
  DigitVector out{{}, p};
  do {
    out.digits.push_back(a % p);
    a /= p;
  } while (a != 0);
  return out;
}

namespace {

// Small binomial mod p for single digits 0 <= n <= m < p.
std::uint64_t digit_binom(std::uint64_t m, std::uint64_t n, std::uint64_t p) {
  if (n > m) return 0;
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    num = num * ((m - i) % p) % p;
    den = den * ((i + 1) % p) % p;
  }
  // den is a product of units mod p; invert by Fermat.
  std::uint64_t inv = 1, base = den, e = p - 2;
  while (e) {
    if (e & 1) inv = inv * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return num * inv % p;
}

}  // namespace

std::uint64_t binom_mod_p(std::uint64_t m, std::uint64_t n, std::uint64_t p) {
  require_prime(p);
  if (n > m) return 0;
  if (p == 2) return binom_odd(m, n) ? 1 : 0;
  std::uint64_t acc = 1;
  while (n != 0 || m != 0) {
    acc = acc * digit_binom(m % p, n % p, p) % p;
    if (acc == 0) return 0;
    m /= p;
    n /= p;
  }
  return acc;
}

std::uint64_t b_parity(std::uint64_t m, std::uint64_t g) { return binom_mod_p(m + 2 * g, g, 2); }

mpz_class binom_exact(std::uint64_t m, std::uint64_t n) {
  if (n > m) return 0;
  if (n > m - n) n = m - n;
  mpz_class acc = 1;
  for (std::uint64_t i = 1; i <= n; ++i) {
    acc *= static_cast<unsigned long>(m - n + i);
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return acc;
}

std::vector<mpz_class> binom_row_exact(std::uint64_t m) {
  std::vector<mpz_class> row(m + 1);
  row[0] = 1;
  for (std::uint64_t n = 0; n < m; ++n) {
    row[n + 1] = row[n] * static_cast<unsigned long>(m - n);
    mpz_divexact_ui(row[n + 1].get_mpz_t(), row[n + 1].get_mpz_t(),
                    static_cast<unsigned long>(n + 1));
  }
  return row;
}

std::uint64_t binom_mod_p_exact(std::uint64_t m, std::uint64_t n, std::uint64_t p) {
  require_prime(p);
  return mpz_fdiv_ui(binom_exact(m, n).get_mpz_t(), static_cast<unsigned long>(p));
}

}  // namespace yendo
