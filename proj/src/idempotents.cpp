#include "yendo/idempotents.hpp"

#include <bit>

#include "yendo/padic.hpp"

namespace yendo {

IJSets ij_sets(std::uint64_t m, std::uint64_t g) {
  IJSets out;
  const std::uint64_t top = m + 2 * g;
  for (std::uint32_t u = 0; u < 64 && (top >> u) != 0; ++u) {
    if (((top >> u) & 1u) == 0) continue;
    if ((g >> u) & 1u)
      out.J.push_back(u);
    else
      out.I.push_back(u);
  }
  return out;
}

namespace {

void check_index(std::uint32_t m, std::uint32_t g, const AlgebraContext& ctx) {
  if (m != ctx.m())
    throw BadIndex("m = " + std::to_string(m) + " does not match the algebra's m = " + std::to_string(ctx.m()));
  if (g > ctx.lambda2())
    throw BadIndex("g = " + std::to_string(g) + " outside 0.." + std::to_string(ctx.lambda2()));
}

// One factor per binary column u <= max_u of C(m+2g, g):
//   (1 choose 1) -> b(2^u), (1 choose 0) -> 1 + b(2^u), (0 choose 0) -> 1, (0 choose 1) -> 0.
// Factors with 2^u > lambda2 are taken literally: b(2^u) is zero there.
Element factor_product(std::uint64_t m, std::uint64_t g, std::uint32_t max_u, const AlgebraContext& ctx) {
  const std::uint64_t top = m + 2 * g;
  for (std::uint32_t u = 0; u < 64 && u <= max_u && (g >> u) != 0; ++u)
    if (((g >> u) & 1u) && !((top >> u) & 1u)) return ctx.zero();
  const IJSets sets = ij_sets(m, g);
  Element acc = ctx.one();
  auto pow2 = [](std::uint32_t u) { return u < 64 ? std::uint64_t{1} << u : ~std::uint64_t{0}; };
  for (auto u : sets.J)
    if (u <= max_u) acc = ctx.multiply(acc, ctx.b(pow2(u)));
  for (auto u : sets.I)
    if (u <= max_u) acc = ctx.multiply(acc, ctx.one() + ctx.b(pow2(u)));
  return acc;
}

}  // namespace

IdempotentRecord idempotent(std::uint32_t m, std::uint32_t g, const AlgebraContext& ctx) {
  check_index(m, g, ctx);
  IdempotentRecord rec{g, {ctx.lambda().first + g, ctx.lambda2() - g}, ij_sets(m, g), ctx.zero(), false};
  rec.element = factor_product(m, g, ~std::uint32_t{0}, ctx);
  rec.vanished = rec.element.is_zero();
  return rec;
}

Element truncated_idempotent(std::uint32_t m, std::uint32_t g, std::uint32_t t, const AlgebraContext& ctx) {
  check_index(m, g, ctx);
  return factor_product(m, g, t, ctx);
}

std::vector<IdempotentRecord> idempotent_family(const AlgebraContext& ctx) {
  std::vector<IdempotentRecord> out;
  out.reserve(ctx.dim());
  for (std::uint32_t g = 0; g <= ctx.lambda2(); ++g) out.push_back(idempotent(ctx.m(), g, ctx));
  return out;
}

std::vector<BitVec> corner_basis(const Element& e, const AlgebraContext& ctx) {
  Echelon span;
  for (std::uint32_t i = 0; i <= ctx.lambda2(); ++i) span.insert(ctx.multiply(e, ctx.b(i)).coeffs());
  return span.rows();
}

std::optional<std::uint64_t> corner_idempotent_count(const Element& e, const AlgebraContext& ctx) {
  const auto basis = corner_basis(e, ctx);
  if (basis.size() > kMaxEnumerationDim) return std::nullopt;
  return count_idempotents(basis, [&](const BitVec& v) {
    Element x(ctx.m(), ctx.lambda2(), v);
    return ctx.multiply(x, x).coeffs();
  });
}

Report verify_family(const AlgebraContext& ctx) {
  Report rep;
  rep.subject = "idempotents of S_K" + to_string(ctx.lambda());
  const auto family = idempotent_family(ctx);

  std::vector<const IdempotentRecord*> live;
  std::string bad;
  for (const auto& rec : family) {
    const bool parity_odd = b_parity(ctx.m(), rec.g) == 1;
    if (rec.vanished == parity_odd && bad.empty()) bad = "g=" + std::to_string(rec.g);
    if (!rec.vanished) live.push_back(&rec);
  }
  rep.add("vanishing criterion", bad.empty(), bad.empty() ? "" : "vanishing disagrees with B(m,g) parity at " + bad);

  for (const auto* rec : live) {
    const bool ok = ctx.multiply(rec->element, rec->element) == rec->element;
    rep.add("idempotent g=" + std::to_string(rec->g), ok, ok ? "" : "e*e != e");
  }

  bad.clear();
  for (std::size_t a = 0; a < live.size() && bad.empty(); ++a)
    for (std::size_t b = a + 1; b < live.size() && bad.empty(); ++b)
      if (!ctx.multiply(live[a]->element, live[b]->element).is_zero())
        bad = "g=" + std::to_string(live[a]->g) + ", g'=" + std::to_string(live[b]->g);
  rep.add("orthogonality", bad.empty(), bad.empty() ? "" : "non-zero product for " + bad);

  Element sum = ctx.zero();
  for (const auto* rec : live) sum += rec->element;
  rep.add("completeness", sum == ctx.one(), "sum = " + to_string(sum));

  std::size_t dim_total = 0;
  for (const auto* rec : live) {
    const auto basis = corner_basis(rec->element, ctx);
    dim_total += basis.size();
    const std::string name = "primitive g=" + std::to_string(rec->g);
    if (basis.size() > kMaxEnumerationDim) {
      rep.skip(name, "corner dimension " + std::to_string(basis.size()) + " above enumeration bound");
      continue;
    }
    const auto count = *corner_idempotent_count(rec->element, ctx);
    rep.add(name, count == 2,
            "corner dimension " + std::to_string(basis.size()) + ", " + std::to_string(count) + " idempotents");
  }
  rep.add("corner dimensions", dim_total == ctx.dim(),
          "sum " + std::to_string(dim_total) + " vs " + std::to_string(ctx.dim()));
  return rep;
}

}  // namespace yendo
