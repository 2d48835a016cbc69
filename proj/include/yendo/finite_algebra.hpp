#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "yendo/gf2.hpp"

namespace yendo {

/// Finite-dimensional GF(2) algebra given by its structure constants on a
/// fixed basis: product(i, j) is the coordinate vector of basis_i * basis_j.
class StructureTable {
 public:
  StructureTable() = default;
  StructureTable(std::size_t dim, std::vector<BitVec> products);

  std::size_t dim() const { return dim_; }
  const BitVec& product(std::size_t i, std::size_t j) const { return products_[i * dim_ + j]; }
  BitVec multiply(const BitVec& x, const BitVec& y) const;

  BitVec unit_vector(std::size_t i) const;

  bool operator==(const StructureTable&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<BitVec> products_;
};

/// Largest span dimension for which idempotents are counted by enumeration.
inline constexpr std::size_t kMaxEnumerationDim = 22;

/// Number of x in span(basis) with x*x == x, by walking all 2^|basis|
/// combinations in Gray-code order. `square` must return the product of an
/// element with itself. Squaring is additive in a commutative algebra of
/// characteristic 2, so x^2 is updated with one xor per step.
/// The basis must be linearly independent and at most kMaxEnumerationDim long.
template <class Square>
std::uint64_t count_idempotents(std::span<const BitVec> basis, Square&& square) {
  if (basis.size() > kMaxEnumerationDim) return 0;
  std::vector<BitVec> squares;
  squares.reserve(basis.size());
  for (const auto& b : basis) squares.push_back(square(b));
  if (basis.empty()) return 1;
  BitVec x(basis.front().size()), x2(basis.front().size());
  std::uint64_t count = 1;  // zero
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  for (std::uint64_t step = 1; step < total; ++step) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(step));
    x ^= basis[bit];
    x2 ^= squares[bit];
    if (x == x2) ++count;
  }
  return count;
}

}  // namespace yendo
