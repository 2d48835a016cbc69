#include "yendo/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace yendo {

bool BitVec::any() const {
  for (auto w : words_)
    if (w) return true;
  return false;
}

std::size_t BitVec::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::optional<std::size_t> BitVec::lowest() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return std::nullopt;
}

std::vector<std::size_t> BitVec::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto word = words_[w];
    while (word) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

BitVec& BitVec::operator^=(const BitVec& other) {
  if (other.nbits_ != nbits_) throw std::invalid_argument("BitVec length mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

// Row k never has the pivots of rows 0..k-1 set, so a single forward pass
// clears every pivot of v.
BitVec Echelon::reduce(BitVec v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (v.test(pivots_[r])) v ^= rows_[r];
  return v;
}

bool Echelon::insert(const BitVec& v) {
  BitVec red = reduce(v);
  auto p = red.lowest();
  if (!p) return false;
  rows_.push_back(std::move(red));
  pivots_.push_back(*p);
  return true;
}

std::size_t rank(std::span<const BitVec> vectors) {
  Echelon e;
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

std::vector<BitVec> kernel_basis(std::span<const BitVec> images) {
  const std::size_t n = images.size();
  // Each row carries (image, combination); eliminate on the image part only.
  struct Row {
    BitVec image, combo;
    std::size_t pivot;
  };
  std::vector<Row> rows;
  std::vector<BitVec> kernel;
  for (std::size_t i = 0; i < n; ++i) {
    BitVec img = images[i];
    BitVec combo(n);
    combo.set(i);
    for (const auto& r : rows) {
      if (img.test(r.pivot)) {
        img ^= r.image;
        combo ^= r.combo;
      }
    }
    if (auto p = img.lowest())
      rows.push_back({std::move(img), std::move(combo), *p});
    else
      kernel.push_back(std::move(combo));
  }
  return kernel;
}

}  // namespace yendo
