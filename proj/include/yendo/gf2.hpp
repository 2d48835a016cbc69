#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace yendo {

/// Fixed-length vector over GF(2), packed 64 coordinates per word.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t size() const { return nbits_; }

  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  bool any() const;
  bool none() const { return !any(); }
  std::size_t count() const;

  /// Index of the lowest set coordinate, if any.
  std::optional<std::size_t> lowest() const;
  std::vector<std::size_t> ones() const;

  BitVec& operator^=(const BitVec& other);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  bool operator==(const BitVec&) const = default;

  std::span<const std::uint64_t> words() const { return words_; }

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Incrementally built row-echelon basis of a subspace of GF(2)^n.
class Echelon {
 public:
  /// Reduces v against the stored rows; the result is zero iff v lies in the span.
  BitVec reduce(BitVec v) const;
  bool contains(const BitVec& v) const { return reduce(v).none(); }

  /// Adds v to the basis; returns false if v was already in the span.
  bool insert(const BitVec& v);

  std::size_t rank() const { return rows_.size(); }
  const std::vector<BitVec>& rows() const { return rows_; }

 private:
  std::vector<BitVec> rows_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(std::span<const BitVec> vectors);

/// Basis of { c : sum_i c_i * images[i] = 0 }, each c a vector of length images.size().
std::vector<BitVec> kernel_basis(std::span<const BitVec> images);

}  // namespace yendo
