#include <doctest.h>

#include <bit>

#include "yendo/idempotents.hpp"
#include "yendo/oracle.hpp"

using namespace yendo;

namespace {

// psi_i psi_j as full integer matrices on all lambda2-subsets; every entry in
// an intersection class must carry the same coefficient.
std::vector<BitVec> full_matrix_constants(std::uint32_t r, std::uint32_t l2) {
  std::vector<std::uint32_t> subs;
  for (std::uint32_t s = 0; s < (1u << r); ++s)
    if (static_cast<std::uint32_t>(std::popcount(s)) == l2) subs.push_back(s);
  const std::size_t n = subs.size();
  auto psi = [&](std::uint32_t j) {
    std::vector<std::int64_t> mtx(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        mtx[a * n + b] = static_cast<std::uint32_t>(std::popcount(subs[a] & subs[b])) == l2 - j;
    return mtx;
  };
  std::vector<BitVec> out;
  for (std::uint32_t i = 0; i <= l2; ++i) {
    const auto pi = psi(i);
    for (std::uint32_t j = 0; j <= l2; ++j) {
      const auto pj = psi(j);
      std::vector<std::optional<std::int64_t>> coeff(l2 + 1);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          std::int64_t v = 0;
          for (std::size_t c = 0; c < n; ++c) v += pi[a * n + c] * pj[c * n + b];
          const std::uint32_t cls = l2 - static_cast<std::uint32_t>(std::popcount(subs[a] & subs[b]));
          if (!coeff[cls]) coeff[cls] = v;
          REQUIRE(*coeff[cls] == v);
        }
      }
      BitVec vec(l2 + 1);
      for (std::uint32_t c = 0; c <= l2; ++c)
        if (*coeff[c] & 1) vec.set(c);
      out.push_back(vec);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("oracle construction examples") {
  const auto swap = build_oracle(2, 1);
  CHECK(swap.table.dim() == 2);
  CHECK(swap.table.product(1, 1) == swap.table.unit_vector(0));

  const auto o42 = build_oracle(4, 2);
  CHECK(o42.table.dim() == 3);
  CHECK(o42.lambda() == Partition{2, 2});

  for (std::uint32_t r : {1u, 5u, 9u}) {
    const auto o = build_oracle(r, 0);
    CHECK(o.table.dim() == 1);
    CHECK(o.table.product(0, 0) == o.table.unit_vector(0));
  }
  CHECK_THROWS_AS(build_oracle(15, 2), std::length_error);
  CHECK_THROWS_AS(build_oracle(5, 3), std::invalid_argument);
}

TEST_CASE("oracle constants do not depend on the probe") {
  for (std::uint32_t r = 1; r <= 8; ++r) {
    for (std::uint32_t l2 = 0; 2 * l2 <= r; ++l2) {
      const auto o = build_oracle(r, l2);
      const auto full = full_matrix_constants(r, l2);
      for (std::uint32_t i = 0; i <= l2; ++i)
        for (std::uint32_t j = 0; j <= l2; ++j) REQUIRE(o.table.product(i, j) == full[i * (l2 + 1) + j]);
    }
  }
}

TEST_CASE("oracle algebras are unital, commutative and associative") {
  for (std::uint32_t r = 1; r <= 14; ++r)
    for (std::uint32_t l2 = 0; 2 * l2 <= r && l2 <= 7; ++l2) {
      if (r > 12 && l2 > 4) continue;  // keep the run short; the sweep covers r <= 12 in full
      CHECK(check_structure(build_oracle(r, l2).table).passed());
    }
}

TEST_CASE("invariant profiles") {
  const Profile formula = invariant_profile(make_context(0, 2).structure_table());
  CHECK(formula.dimension == 3);
  CHECK(formula.idempotents == 2u);
  CHECK(formula.radical_chain == std::vector<std::size_t>{2, 0});
  CHECK(invariant_profile(build_oracle(4, 2).table) == formula);

  const Profile one = invariant_profile(make_context(5, 0).structure_table());
  CHECK(one.dimension == 1);
  CHECK(one.idempotents == 2u);
  CHECK(one.radical_chain.empty());

  const Profile big = invariant_profile(make_context(0, 22).structure_table());
  CHECK(big.dimension == 23);
  CHECK_FALSE(big.idempotents.has_value());
  CHECK(big.radical_chain.front() == 22);
}

TEST_CASE("compare examples") {
  {
    const auto ctx = make_context(0, 2);
    const auto rep = compare(ctx, build_oracle(4, 2));
    CHECK(rep.passed());
  }
  {
    const auto ctx = make_context(2, 2);
    const auto rep = compare(ctx, build_oracle(6, 2));
    CHECK(rep.passed());
    CHECK(invariant_profile(ctx.structure_table()).idempotents == 4u);
  }
  {
    const auto ctx = make_context(0, 1);
    CHECK(compare(ctx, build_oracle(2, 1)).passed());
    CHECK(invariant_profile(build_oracle(2, 1).table).dimension == 2);
  }
  CHECK_THROWS_AS(compare(make_context(2, 2), build_oracle(4, 2)), std::invalid_argument);
}

TEST_CASE("oracle and formula profiles agree for r <= 10") {
  for (std::uint32_t r = 1; r <= 10; ++r)
    for (std::uint32_t l2 = 0; 2 * l2 <= r; ++l2) {
      INFO("r=" << r << " lambda2=" << l2);
      CHECK(compare(make_context(r - 2 * l2, l2), build_oracle(r, l2)).passed());
    }
}
