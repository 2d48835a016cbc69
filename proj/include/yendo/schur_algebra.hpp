#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "yendo/finite_algebra.hpp"
#include "yendo/gf2.hpp"
#include "yendo/report.hpp"

namespace yendo {

/// A two-part partition (first >= second >= 0).
struct Partition {
  std::uint32_t first = 0;
  std::uint32_t second = 0;

  std::uint32_t size() const { return first + second; }
  bool operator==(const Partition&) const = default;
};

std::string to_string(const Partition& p);

/// Raised when elements of different algebras S_K(lambda) are combined.
struct ContextMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Element sum_i c_i b(i) of S_K(lambda) over GF(2). The binding (m, lambda2)
/// is part of the value: b(2) of one algebra is not b(2) of another.
class Element {
 public:
  Element(std::uint32_t m, std::uint32_t lambda2) : m_(m), lambda2_(lambda2), coeffs_(lambda2 + 1) {}
  Element(std::uint32_t m, std::uint32_t lambda2, BitVec coeffs);

  std::uint32_t m() const { return m_; }
  std::uint32_t lambda2() const { return lambda2_; }
  const BitVec& coeffs() const { return coeffs_; }

  bool has(std::uint32_t label) const { return coeffs_.test(label); }
  bool is_zero() const { return coeffs_.none(); }
  /// Labels i with non-zero coefficient, ascending.
  std::vector<std::uint32_t> labels() const;

  Element& operator+=(const Element& other);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  bool operator==(const Element&) const = default;

  void require_same_algebra(const Element& other) const;

 private:
  std::uint32_t m_;
  std::uint32_t lambda2_;
  BitVec coeffs_;
};

std::string to_string(const Element& e);

inline constexpr std::uint32_t kDefaultLambda2Cap = 4096;

/// S_K(lambda) for lambda = (m + lambda2, lambda2), with its multiplication
/// table computed once. Immutable after construction.
class AlgebraContext {
 public:
  AlgebraContext(std::uint32_t m, std::uint32_t lambda2, std::uint32_t lambda2_cap = kDefaultLambda2Cap);

  std::uint32_t m() const { return m_; }
  std::uint32_t lambda2() const { return lambda2_; }
  std::uint32_t r() const { return m_ + 2 * lambda2_; }
  Partition lambda() const { return {m_ + lambda2_, lambda2_}; }
  std::uint32_t dim() const { return lambda2_ + 1; }

  Element zero() const { return Element(m_, lambda2_); }
  Element one() const { return b(0); }
  /// Basis element b(a); the zero element when a > lambda2.
  Element b(std::uint64_t a) const;

  /// Tabulated b(i) * b(j).
  Element product(std::uint32_t i, std::uint32_t j) const;
  Element multiply(const Element& x, const Element& y) const;

  void require_element(const Element& x) const;

  StructureTable structure_table() const;

 private:
  std::uint32_t m_;
  std::uint32_t lambda2_;
  // Compressed rows: labels of b(i)*b(j) for i <= j, pair index i*(dim)+j.
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint32_t> labels_;
};

AlgebraContext make_context(std::uint32_t m, std::uint32_t lambda2,
                            std::uint32_t lambda2_cap = kDefaultLambda2Cap);

AlgebraContext context_for(const Partition& lambda);

/// b(i)*b(j) evaluated directly from the structure-constant formula
///   sum_{k=0}^{i} C(j+k, i) C(j+k, k) C(m+j+i, i-k) b(j+k)
/// with binomials mod 2 and b(a) = 0 beyond lambda2.
Element basis_product(std::uint32_t i, std::uint32_t j, const AlgebraContext& ctx);

Element multiply(const Element& x, const Element& y, const AlgebraContext& ctx);

/// prod_t b(i_t * 2^t) over the binary digits of i.
Element power_product(std::uint32_t i, const AlgebraContext& ctx);

/// Identity, commutativity, associativity over all basis triples, and the
/// power-of-two factorization of every b(i).
Report verify_algebra(const AlgebraContext& ctx);

/// GF(2)-dimension of the subalgebra generated by b(0) and the b(2^t) <= lambda2.
std::size_t generated_subalgebra_dim(const AlgebraContext& ctx);

}  // namespace yendo
