#include "yendo/finite_algebra.hpp"

#include <stdexcept>

namespace yendo {

StructureTable::StructureTable(std::size_t dim, std::vector<BitVec> products)
    : dim_(dim), products_(std::move(products)) {
  if (products_.size() != dim_ * dim_) throw std::invalid_argument("structure table must be dim x dim");
  for (const auto& p : products_)
    if (p.size() != dim_) throw std::invalid_argument("structure constant has wrong length");
}

BitVec StructureTable::multiply(const BitVec& x, const BitVec& y) const {
  BitVec out(dim_);
  const auto xs = x.ones();
  const auto ys = y.ones();
  for (auto i : xs)
    for (auto j : ys) out ^= product(i, j);
  return out;
}

BitVec StructureTable::unit_vector(std::size_t i) const {
  BitVec v(dim_);
  v.set(i);
  return v;
}

}  // namespace yendo
