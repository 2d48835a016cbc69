#include "yendo/presentation.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace yendo {

std::size_t Monomial::degree() const { return static_cast<std::size_t>(std::popcount(mask)); }

std::vector<std::uint32_t> Monomial::support() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < 32; ++i)
    if ((mask >> i) & 1u) out.push_back(i + 1);
  return out;
}

Monomial Monomial::from_support(const std::vector<std::uint32_t>& indices) {
  Monomial x;
  for (auto i : indices) {
    if (i == 0 || i > 32) throw std::invalid_argument("generator index out of range");
    const std::uint32_t bit = 1u << (i - 1);
    if (x.mask & bit) throw std::invalid_argument("repeated generator in square-free monomial");
    x.mask |= bit;
  }
  return x;
}

std::string to_string(const Monomial& x) {
  if (x.mask == 0) return "1";
  std::string out;
  for (auto i : x.support()) out += "x" + std::to_string(i);
  return out;
}

std::uint32_t generator_count(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("dimension must be positive");
  return static_cast<std::uint32_t>(std::bit_width(n - 1));
}

namespace {

void check_dim(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("dimension must be positive");
  if (n > kMaxPresentationDim)
    throw std::length_error("dimension " + std::to_string(n) + " above supported bound " +
                            std::to_string(kMaxPresentationDim));
}

}  // namespace

std::vector<Monomial> killed_by_inequality(std::uint32_t n) {
  check_dim(n);
  const std::uint32_t k = generator_count(n);
  std::vector<Monomial> out;
  if (k == 0) return out;
  const std::uint32_t top = 1u << (k - 1);
  // Masks over x_1..x_{k-1} are the r_i; the x_k factor contributes 2^(k-1).
  for (std::uint32_t rest = 1; rest < top; ++rest) {
    std::uint64_t sum = 0;
    for (std::uint32_t i = 1; i < k; ++i)
      if ((rest >> (i - 1)) & 1u) sum += std::uint64_t{1} << (i - 1);
    if (sum + top > n - 1u) out.push_back({rest | top});
  }
  return out;
}

std::vector<Monomial> killed_by_rank(std::uint32_t n) {
  check_dim(n);
  const std::uint32_t k = generator_count(n);
  std::vector<Monomial> products;
  for (std::uint32_t mask = 0; mask < (std::uint64_t{1} << k); ++mask)
    if (std::popcount(mask) >= 2) products.push_back({mask});
  std::sort(products.begin(), products.end(), [](Monomial a, Monomial b) { return a.phi() < b.phi(); });
  const std::size_t keep = n - (k + 1);
  if (keep > products.size()) throw std::logic_error("more surviving products than exist");
  return {products.begin() + static_cast<std::ptrdiff_t>(keep), products.end()};
}

Presentation presentation_for_dimension(std::uint32_t n) {
  check_dim(n);
  Presentation p;
  p.n = n;
  p.k = generator_count(n);
  p.killed = killed_by_inequality(n);
  if (p.killed != killed_by_rank(n))
    throw std::logic_error("relation rules disagree for n = " + std::to_string(n));
  // Every support with phi <= n-1 survives: the unit, all k generators, and
  // the n-(k+1) smallest products.
  p.quotient_basis.reserve(n);
  for (std::uint32_t mask = 0; mask < n; ++mask) p.quotient_basis.push_back({mask});
  return p;
}

std::optional<Monomial> quotient_multiply(const Presentation& p, Monomial a, Monomial b) {
  if (a.mask >= p.n || b.mask >= p.n)
    throw std::invalid_argument("monomial is not in the quotient basis of dimension " + std::to_string(p.n));
  if (a.mask & b.mask) return std::nullopt;
  const Monomial c{a.mask | b.mask};
  if (c.mask >= p.n) return std::nullopt;
  return c;
}

std::string to_text(const Presentation& p) {
  if (p.k == 0) return "K";
  std::string out = p.k == 1 ? "K[x1]" : "K[x1..x" + std::to_string(p.k) + "]";
  out += "/<";
  for (std::uint32_t i = 1; i <= p.k; ++i) {
    if (i > 1) out += ", ";
    out += "x" + std::to_string(i) + "^2";
  }
  for (const auto& x : p.killed) out += ", " + to_string(x);
  out += ">";
  return out;
}

}  // namespace yendo
