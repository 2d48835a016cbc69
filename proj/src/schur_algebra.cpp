#include "yendo/schur_algebra.hpp"

#include <deque>

#include "yendo/padic.hpp"

namespace yendo {

std::string to_string(const Partition& p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

Element::Element(std::uint32_t m, std::uint32_t lambda2, BitVec coeffs)
    : m_(m), lambda2_(lambda2), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != lambda2_ + 1u) throw std::invalid_argument("coefficient vector must have length lambda2+1");
}

std::vector<std::uint32_t> Element::labels() const {
  std::vector<std::uint32_t> out;
  for (auto i : coeffs_.ones()) out.push_back(static_cast<std::uint32_t>(i));
  return out;
}

void Element::require_same_algebra(const Element& other) const {
  if (m_ != other.m_ || lambda2_ != other.lambda2_)
    throw ContextMismatch("elements belong to different algebras: (m=" + std::to_string(m_) +
                          ", lambda2=" + std::to_string(lambda2_) + ") vs (m=" + std::to_string(other.m_) +
                          ", lambda2=" + std::to_string(other.lambda2_) + ")");
}

Element& Element::operator+=(const Element& other) {
  require_same_algebra(other);
  coeffs_ ^= other.coeffs_;
  return *this;
}

std::string to_string(const Element& e) {
  const auto labels = e.labels();
  if (labels.empty()) return "0";
  std::string out;
  for (auto i : labels) {
    if (!out.empty()) out += " + ";
    out += i == 0 ? std::string("1") : "b(" + std::to_string(i) + ")";
  }
  return out;
}

namespace {

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t dim) {
  // i <= j, row-major upper triangle
  return i * dim - i * (i - 1) / 2 + (j - i);
}

BitVec formula_product(std::uint64_t i, std::uint64_t j, std::uint64_t m, std::uint64_t lambda2) {
  BitVec out(lambda2 + 1);
  for (std::uint64_t k = 0; k <= i && j + k <= lambda2; ++k) {
    const std::uint64_t a = j + k;
    if (binom_mod_p(a, i, 2) && binom_mod_p(a, k, 2) && binom_mod_p(m + j + i, i - k, 2)) out.flip(a);
  }
  return out;
}

}  // namespace

AlgebraContext::AlgebraContext(std::uint32_t m, std::uint32_t lambda2, std::uint32_t lambda2_cap)
    : m_(m), lambda2_(lambda2) {
  if (lambda2 > lambda2_cap)
    throw std::length_error("lambda2 = " + std::to_string(lambda2) + " exceeds the resource cap " +
                            std::to_string(lambda2_cap));
  const std::size_t d = dim();
  offsets_.reserve(d * (d + 1) / 2 + 1);
  offsets_.push_back(0);
  for (std::uint32_t i = 0; i < d; ++i) {
    for (std::uint32_t j = i; j < d; ++j) {
      for (auto a : formula_product(i, j, m_, lambda2_).ones()) labels_.push_back(static_cast<std::uint32_t>(a));
      offsets_.push_back(static_cast<std::uint32_t>(labels_.size()));
    }
  }
}

Element AlgebraContext::b(std::uint64_t a) const {
  Element e = zero();
  if (a <= lambda2_) {
    BitVec v(dim());
    v.set(a);
    e = Element(m_, lambda2_, std::move(v));
  }
  return e;
}

Element AlgebraContext::product(std::uint32_t i, std::uint32_t j) const {
  if (i > lambda2_ || j > lambda2_) throw std::out_of_range("basis label beyond lambda2");
  if (i > j) std::swap(i, j);
  const std::size_t idx = pair_index(i, j, dim());
  BitVec v(dim());
  for (std::size_t p = offsets_[idx]; p < offsets_[idx + 1]; ++p) v.set(labels_[p]);
  return Element(m_, lambda2_, std::move(v));
}

void AlgebraContext::require_element(const Element& x) const {
  if (x.m() != m_ || x.lambda2() != lambda2_)
    throw ContextMismatch("element of (m=" + std::to_string(x.m()) + ", lambda2=" + std::to_string(x.lambda2()) +
                          ") used with algebra (m=" + std::to_string(m_) + ", lambda2=" +
                          std::to_string(lambda2_) + ")");
}

Element AlgebraContext::multiply(const Element& x, const Element& y) const {
  require_element(x);
  require_element(y);
  BitVec acc(dim());
  const auto xs = x.coeffs().ones();
  const auto ys = y.coeffs().ones();
  for (auto i : xs) {
    for (auto j : ys) {
      auto lo = std::min(i, j), hi = std::max(i, j);
      const std::size_t idx = pair_index(lo, hi, dim());
      for (std::size_t p = offsets_[idx]; p < offsets_[idx + 1]; ++p) acc.flip(labels_[p]);
    }
  }
  return Element(m_, lambda2_, std::move(acc));
}

StructureTable AlgebraContext::structure_table() const {
  std::vector<BitVec> products;
  products.reserve(static_cast<std::size_t>(dim()) * dim());
  for (std::uint32_t i = 0; i < dim(); ++i)
    for (std::uint32_t j = 0; j < dim(); ++j) products.push_back(product(i, j).coeffs());
  return StructureTable(dim(), std::move(products));
}

AlgebraContext make_context(std::uint32_t m, std::uint32_t lambda2, std::uint32_t lambda2_cap) {
  return AlgebraContext(m, lambda2, lambda2_cap);
}

AlgebraContext context_for(const Partition& lambda) {
  if (lambda.first < lambda.second) throw std::invalid_argument("partition parts must be non-increasing");
  return AlgebraContext(lambda.first - lambda.second, lambda.second);
}

Element basis_product(std::uint32_t i, std::uint32_t j, const AlgebraContext& ctx) {
  if (i > ctx.lambda2() || j > ctx.lambda2())
    throw std::out_of_range("basis label beyond lambda2 = " + std::to_string(ctx.lambda2()));
  return Element(ctx.m(), ctx.lambda2(), formula_product(i, j, ctx.m(), ctx.lambda2()));
}

Element multiply(const Element& x, const Element& y, const AlgebraContext& ctx) {
  x.require_same_algebra(y);
  return ctx.multiply(x, y);
}

Element power_product(std::uint32_t i, const AlgebraContext& ctx) {
  if (i > ctx.lambda2()) throw std::out_of_range("basis label beyond lambda2");
  Element acc = ctx.one();
  for (std::uint32_t t = 0; (std::uint64_t{1} << t) <= i; ++t)
    if ((i >> t) & 1u) acc = ctx.multiply(acc, ctx.b(std::uint64_t{1} << t));
  return acc;
}

Report verify_algebra(const AlgebraContext& ctx) {
  Report rep;
  rep.subject = "S_K" + to_string(ctx.lambda());
  const std::uint32_t n = ctx.dim();

  std::string bad;
  for (std::uint32_t j = 0; j < n && bad.empty(); ++j) {
    if (basis_product(0, j, ctx) != ctx.b(j)) bad = "b(0)*b(" + std::to_string(j) + ")";
    else if (basis_product(j, 0, ctx) != ctx.b(j)) bad = "b(" + std::to_string(j) + ")*b(0)";
  }
  rep.add("identity", bad.empty(), bad.empty() ? "" : bad + " differs from b(j)");

  bad.clear();
  for (std::uint32_t i = 0; i < n && bad.empty(); ++i)
    for (std::uint32_t j = i + 1; j < n && bad.empty(); ++j)
      if (basis_product(i, j, ctx) != basis_product(j, i, ctx))
        bad = "b(" + std::to_string(i) + ")b(" + std::to_string(j) + ")";
  rep.add("commutativity", bad.empty(), bad.empty() ? "" : bad + " is not symmetric");

  bad.clear();
  std::size_t triples = 0;
  for (std::uint32_t i = 0; i < n && bad.empty(); ++i) {
    for (std::uint32_t j = 0; j < n && bad.empty(); ++j) {
      const Element ij = ctx.product(i, j);
      for (std::uint32_t k = 0; k < n; ++k) {
        ++triples;
        if (ctx.multiply(ij, ctx.b(k)) != ctx.multiply(ctx.b(i), ctx.product(j, k))) {
          bad = "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
          break;
        }
      }
    }
  }
  rep.add("associativity", bad.empty(),
          bad.empty() ? std::to_string(triples) + " triples" : "bracketings differ at " + bad);

  bad.clear();
  for (std::uint32_t i = 0; i < n && bad.empty(); ++i)
    if (power_product(i, ctx) != ctx.b(i)) bad = "b(" + std::to_string(i) + ")";
  rep.add("factorization", bad.empty(), bad.empty() ? "" : bad + " differs from its digit product");
  return rep;
}

std::size_t generated_subalgebra_dim(const AlgebraContext& ctx) {
  std::vector<Element> gens;
  for (std::uint64_t t = 1; t <= ctx.lambda2(); t <<= 1) gens.push_back(ctx.b(t));
  Echelon span;
  std::deque<Element> pending;
  span.insert(ctx.one().coeffs());
  pending.push_back(ctx.one());
  for (const auto& g : gens)
    if (span.insert(g.coeffs())) pending.push_back(g);
  while (!pending.empty()) {
    Element v = std::move(pending.front());
    pending.pop_front();
    for (const auto& g : gens) {
      Element w = ctx.multiply(v, g);
      if (span.insert(w.coeffs())) pending.push_back(std::move(w));
    }
  }
  return span.rank();
}

}  // namespace yendo
