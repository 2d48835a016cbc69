#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace yendo {

/// Square-free monomial in x_1..x_k, stored as a support mask with x_i at
/// bit i-1. The mask value is the order key phi = sum_{i in support} 2^(i-1).
struct Monomial {
  std::uint32_t mask = 0;

  std::uint32_t phi() const { return mask; }
  std::size_t degree() const;
  /// Generator indices in the support, ascending and 1-based.
  std::vector<std::uint32_t> support() const;
  bool contains(std::uint32_t i) const { return (mask >> (i - 1)) & 1u; }

  static Monomial from_support(const std::vector<std::uint32_t>& indices);

  auto operator<=>(const Monomial&) const = default;
};

/// "1" for the unit, otherwise e.g. "x1x3".
std::string to_string(const Monomial& x);

/// K[x_1..x_k] / < x_i^2, killed >, the canonical algebra of dimension n.
struct Presentation {
  std::uint32_t n = 1;
  std::uint32_t k = 0;
  std::vector<Monomial> killed;          // ascending phi
  std::vector<Monomial> quotient_basis;  // ascending phi, size n

  bool operator==(const Presentation&) const = default;
};

inline constexpr std::uint32_t kMaxPresentationDim = 1u << 20;

/// Smallest k with n <= 2^k.
std::uint32_t generator_count(std::uint32_t n);

/// Killed products by the arithmetic rule: x_k in the support, degree >= 2,
/// and sum_i 2^(r_i - 1) + 2^(k-1) > n - 1.
std::vector<Monomial> killed_by_inequality(std::uint32_t n);

/// Killed products by rank: among all products of at least two distinct
/// generators ordered by phi, everything past the n-(k+1) smallest.
std::vector<Monomial> killed_by_rank(std::uint32_t n);

/// Throws std::logic_error if the two rules above ever disagree.
Presentation presentation_for_dimension(std::uint32_t n);

/// Product in the quotient; nullopt for zero. Both factors must be quotient
/// basis monomials of p.
std::optional<Monomial> quotient_multiply(const Presentation& p, Monomial a, Monomial b);

/// `K[x1..xk]/<x1^2, ..., xk^2, m1, m2, ...>` with killed monomials in phi order.
std::string to_text(const Presentation& p);

}  // namespace yendo
