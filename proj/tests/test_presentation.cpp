#include <doctest.h>

#include <algorithm>

#include "yendo/presentation.hpp"

using namespace yendo;

namespace {

std::vector<std::uint32_t> masks(const std::vector<Monomial>& xs) {
  std::vector<std::uint32_t> out;
  for (auto x : xs) out.push_back(x.mask);
  return out;
}

Monomial mono(std::initializer_list<std::uint32_t> idx) { return Monomial::from_support(idx); }

}  // namespace

TEST_CASE("presentations for small dimensions") {
  const auto p1 = presentation_for_dimension(1);
  CHECK(p1.k == 0);
  CHECK(masks(p1.quotient_basis) == std::vector<std::uint32_t>{0});
  CHECK(to_text(p1) == "K");

  const auto p2 = presentation_for_dimension(2);
  CHECK(p2.k == 1);
  CHECK(to_text(p2) == "K[x1]/<x1^2>");

  const auto p4 = presentation_for_dimension(4);
  CHECK(p4.k == 2);
  CHECK(p4.killed.empty());
  CHECK(p4.quotient_basis == std::vector<Monomial>{mono({}), mono({1}), mono({2}), mono({1, 2})});

  const auto p5 = presentation_for_dimension(5);
  CHECK(p5.k == 3);
  CHECK(p5.killed == std::vector<Monomial>{mono({1, 3}), mono({2, 3}), mono({1, 2, 3})});
  CHECK(p5.quotient_basis == std::vector<Monomial>{mono({}), mono({1}), mono({2}), mono({1, 2}), mono({3})});
  CHECK(to_text(p5) == "K[x1..x3]/<x1^2, x2^2, x3^2, x1x3, x2x3, x1x2x3>");

  CHECK_THROWS_AS(presentation_for_dimension(0), std::invalid_argument);
  CHECK_THROWS_AS(presentation_for_dimension(kMaxPresentationDim + 1), std::length_error);
}

TEST_CASE("quotient multiplication") {
  const auto p5 = presentation_for_dimension(5);
  CHECK(quotient_multiply(p5, mono({}), mono({1, 2})) == mono({1, 2}));
  CHECK(quotient_multiply(p5, mono({1}), mono({2})) == mono({1, 2}));
  CHECK(quotient_multiply(p5, mono({1}), mono({3})) == std::nullopt);
  CHECK(quotient_multiply(p5, mono({1}), mono({1})) == std::nullopt);
  CHECK_THROWS_AS(quotient_multiply(p5, mono({1, 3}), mono({})), std::invalid_argument);
  CHECK(quotient_multiply(presentation_for_dimension(4), mono({1}), mono({2})) == mono({1, 2}));
}

TEST_CASE("monomials") {
  CHECK(to_string(mono({})) == "1");
  CHECK(to_string(mono({3, 1})) == "x1x3");
  CHECK(mono({1, 3}).phi() == 5);
  CHECK(mono({1, 3}).support() == std::vector<std::uint32_t>{1, 3});
  CHECK_THROWS_AS(mono({2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(mono({0}), std::invalid_argument);
}

TEST_CASE("presentation invariants up to 4096") {
  for (std::uint32_t n = 1; n <= 4096; ++n) {
    const auto p = presentation_for_dimension(n);
    REQUIRE(p.quotient_basis.size() == n);
    REQUIRE(((p.k == 0 && n == 1) || ((1u << (p.k - 1)) < n && n <= (1u << p.k))));
    REQUIRE(killed_by_rank(n) == killed_by_inequality(n));
    // Downward closure: survivors are closed under subsets and under smaller phi.
    bool closed = true;
    for (const auto& x : p.quotient_basis) {
      for (std::uint32_t sub = x.mask; sub; sub = (sub - 1) & x.mask) closed = closed && sub < n;
      closed = closed && x.phi() < n;
    }
    REQUIRE(closed);
    // Every square-free support is either killed or a survivor.
    REQUIRE(p.killed.size() + p.quotient_basis.size() == (std::size_t{1} << p.k));
    REQUIRE(std::is_sorted(p.killed.begin(), p.killed.end()));
  }
}

TEST_CASE("both phi conventions give the same order") {
  // Sum of 2^i against sum of 2^(i-1) over supports in {1..k}.
  for (std::uint32_t k = 1; k <= 10; ++k) {
    std::vector<std::uint32_t> by_shifted, by_phi;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) by_shifted.push_back(mask), by_phi.push_back(mask);
    auto weight_i = [](std::uint32_t mask) {
      std::uint64_t w = 0;
      for (std::uint32_t i = 1; i <= 32; ++i)
        if ((mask >> (i - 1)) & 1u) w += std::uint64_t{1} << i;
      return w;
    };
    std::stable_sort(by_shifted.begin(), by_shifted.end(), [&](auto a, auto b) { return weight_i(a) < weight_i(b); });
    std::stable_sort(by_phi.begin(), by_phi.end(),
                     [](auto a, auto b) { return Monomial{a}.phi() < Monomial{b}.phi(); });
    CHECK(by_shifted == by_phi);
  }
}

TEST_CASE("quotient multiplication is a commutative unital associative product") {
  for (std::uint32_t n = 1; n <= 64; ++n) {
    const auto p = presentation_for_dimension(n);
    const auto& B = p.quotient_basis;
    for (const auto& a : B) {
      REQUIRE(quotient_multiply(p, Monomial{}, a) == a);
      for (const auto& b : B) {
        const auto ab = quotient_multiply(p, a, b);
        REQUIRE(ab == quotient_multiply(p, b, a));
        for (const auto& c : B) {
          const auto left = ab ? quotient_multiply(p, *ab, c) : std::nullopt;
          const auto bc = quotient_multiply(p, b, c);
          const auto right = bc ? quotient_multiply(p, a, *bc) : std::nullopt;
          REQUIRE(left == right);
        }
      }
    }
  }
}
