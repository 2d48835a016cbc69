#include <doctest.h>

#include <random>
#include <stdexcept>

#include "yendo/finite_algebra.hpp"
#include "yendo/gf2.hpp"

using namespace yendo;

namespace {

BitVec from_bits(std::size_t n, std::uint64_t bits) {
  BitVec v(n);
  for (std::size_t i = 0; i < n && i < 64; ++i)
    if ((bits >> i) & 1u) v.set(i);
  return v;
}

}  // namespace

TEST_CASE("bit vectors") {
  BitVec v(130);
  CHECK(v.none());
  v.set(0);
  v.set(129);
  CHECK(v.count() == 2);
  CHECK(v.lowest() == 0u);
  CHECK(v.ones() == std::vector<std::size_t>{0, 129});
  v.flip(0);
  CHECK(v.lowest() == 129u);
  CHECK_THROWS_AS(v ^= BitVec(10), std::invalid_argument);
}

TEST_CASE("echelon rank and kernel") {
  const std::vector<BitVec> vs{from_bits(4, 0b0011), from_bits(4, 0b0110), from_bits(4, 0b0101),
                               from_bits(4, 0b1000)};
  CHECK(rank(vs) == 3);
  const auto ker = kernel_basis(vs);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0].ones() == std::vector<std::size_t>{0, 1, 2});

  // Random matrices: rank + nullity = row count, and kernel vectors annihilate.
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 12;
    std::vector<BitVec> m;
    for (std::size_t r = 0; r < rows; ++r) m.push_back(from_bits(cols, rng()));
    const auto k = kernel_basis(m);
    CHECK(rank(m) + k.size() == rows);
    for (const auto& c : k) {
      BitVec sum(cols);
      for (auto i : c.ones()) sum ^= m[i];
      CHECK(sum.none());
    }
  }
}

TEST_CASE("idempotent count by Gray walk matches direct enumeration") {
  // GF(2)[x]/(x^3) and GF(2) x GF(2) x GF(2).
  auto table_of = [](std::size_t d, auto mul) {
    std::vector<BitVec> products;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) products.push_back(mul(i, j));
    return StructureTable(d, std::move(products));
  };
  const auto truncated = table_of(3, [](std::size_t i, std::size_t j) {
    BitVec v(3);
    if (i + j < 3) v.set(i + j);
    return v;
  });
  const auto split = table_of(3, [](std::size_t i, std::size_t j) {
    BitVec v(3);
    if (i == j) v.set(i);
    return v;
  });
  for (const auto* alg : {&truncated, &split}) {
    std::vector<BitVec> basis{alg->unit_vector(0), alg->unit_vector(1), alg->unit_vector(2)};
    std::uint64_t direct = 0;
    for (std::uint64_t x = 0; x < 8; ++x) {
      const auto v = from_bits(3, x);
      direct += alg->multiply(v, v) == v;
    }
    CHECK(count_idempotents(basis, [&](const BitVec& v) { return alg->multiply(v, v); }) == direct);
  }
  std::vector<BitVec> basis{truncated.unit_vector(0)};
  CHECK(count_idempotents(basis, [&](const BitVec& v) { return truncated.multiply(v, v); }) == 2);
}
