#include "yendo/young_endo.hpp"

#include <bit>

namespace yendo {

namespace {

IdempotentRecord live_record(std::uint32_t m, std::uint32_t g, const AlgebraContext& ctx) {
  auto rec = idempotent(m, g, ctx);
  if (rec.vanished)
    throw NotASummand("e_{" + std::to_string(m) + "," + std::to_string(g) + "} vanishes: Y" + to_string(rec.mu) +
                      " is not a summand of M" + to_string(ctx.lambda()));
  return rec;
}

std::string label_name(std::uint64_t a) { return "b(" + std::to_string(a) + ")"; }

}  // namespace

std::vector<std::uint32_t> admissible_labels(std::uint32_t m, std::uint32_t g, std::uint32_t lambda2) {
  const std::uint64_t used = std::uint64_t{m} + 2 * std::uint64_t{g};
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i <= lambda2; ++i)
    if ((i & used) == 0) out.push_back(i);
  return out;
}

std::vector<Generator> minimal_generators(std::uint32_t m, std::uint32_t g, const AlgebraContext& ctx) {
  const auto rec = live_record(m, g, ctx);
  const std::uint64_t used = std::uint64_t{m} + 2 * std::uint64_t{g};
  std::vector<Generator> out;
  for (std::uint32_t s = 0; (std::uint64_t{1} << s) <= ctx.lambda2(); ++s) {
    if ((used >> s) & 1u) continue;
    Element x = ctx.multiply(rec.element, ctx.b(std::uint64_t{1} << s));
    if (!x.is_zero()) out.push_back({s, std::move(x)});
  }
  return out;
}

YoungEndo endo_basis(std::uint32_t m, std::uint32_t g, const AlgebraContext& ctx) {
  YoungEndo out{live_record(m, g, ctx), {}, {}, {}, 0};
  Echelon span;
  for (auto i : admissible_labels(m, g, ctx.lambda2())) {
    Element x = ctx.multiply(out.record.element, ctx.b(i));
    if (x.is_zero()) continue;
    if (!span.insert(x.coeffs()))
      throw std::logic_error("admissible corner elements are dependent at " + label_name(i));
    out.basis.push_back(std::move(x));
    out.basis_labels.push_back(i);
  }
  out.dimension = out.basis.size();
  out.generators = minimal_generators(m, g, ctx);
  return out;
}

Report check_basis(std::uint32_t m, std::uint32_t g, const AlgebraContext& ctx) {
  Report rep;
  const auto rec = live_record(m, g, ctx);
  rep.subject = "basis of End(Y" + to_string(rec.mu) + ")";
  Echelon admissible;
  std::size_t nonzero = 0;
  bool independent = true;
  for (auto i : admissible_labels(m, g, ctx.lambda2())) {
    Element x = ctx.multiply(rec.element, ctx.b(i));
    if (x.is_zero()) continue;
    ++nonzero;
    independent = admissible.insert(x.coeffs()) && independent;
  }
  rep.add("independent", independent, std::to_string(nonzero) + " non-zero admissible elements");
  const auto corner_dim = corner_basis(rec.element, ctx).size();
  rep.add("spans corner", independent && nonzero == corner_dim,
          "corner rank " + std::to_string(corner_dim) + ", basis size " + std::to_string(nonzero));
  return rep;
}

Report check_involvement(std::uint32_t m, std::uint32_t g, const AlgebraContext& ctx) {
  Report rep;
  const auto rec = live_record(m, g, ctx);
  rep.subject = "involvement for e_{" + std::to_string(m) + "," + std::to_string(g) + "}";
  std::vector<std::uint32_t> involved = rec.sets.I;
  involved.insert(involved.end(), rec.sets.J.begin(), rec.sets.J.end());
  std::size_t tested = 0;
  for (auto u : involved) {
    if (u >= 32 || (std::uint64_t{1} << u) > ctx.lambda2()) continue;
    ++tested;
    const Element x = ctx.multiply(rec.element, ctx.b(std::uint64_t{1} << u));
    const bool is_zero = x.is_zero();
    const bool is_e = x == rec.element;
    rep.add("u=" + std::to_string(u), is_zero || is_e,
            is_zero ? "e*b(2^u) = 0" : (is_e ? "e*b(2^u) = e" : "e*b(2^u) = " + to_string(x)));
  }
  if (tested == 0) rep.add("vacuous", true, "no involved b(2^u) within lambda2");
  return rep;
}

Report check_orthogonality_lemma(std::uint32_t m, std::uint32_t g, const AlgebraContext& ctx) {
  Report rep;
  const auto rec = live_record(m, g, ctx);
  rep.subject = "square-zero generators for e_{" + std::to_string(m) + "," + std::to_string(g) + "}";
  const std::uint64_t used = std::uint64_t{m} + 2 * std::uint64_t{g};
  std::size_t tested = 0;
  for (std::uint32_t s = 0; (std::uint64_t{1} << s) <= ctx.lambda2(); ++s) {
    if ((used >> s) & 1u) continue;
    ++tested;
    const Element bs = ctx.b(std::uint64_t{1} << s);
    const Element x = ctx.multiply(ctx.multiply(rec.element, bs), bs);
    rep.add("s=" + std::to_string(s), x.is_zero(), x.is_zero() ? "" : "e*b(2^s)^2 = " + to_string(x));
  }
  if (tested == 0) rep.add("vacuous", true, "no free position s with 2^s <= lambda2");
  return rep;
}

Report check_downward_closure(std::uint32_t m, std::uint32_t g, const AlgebraContext& ctx) {
  Report rep;
  const auto rec = live_record(m, g, ctx);
  rep.subject = "downward closure for e_{" + std::to_string(m) + "," + std::to_string(g) + "}";
  // Packing the free bit positions preserves order, so phi order on digit
  // supports is the numeric order of the admissible labels.
  std::optional<std::uint32_t> first_zero;
  std::string bad;
  for (auto i : admissible_labels(m, g, ctx.lambda2())) {
    const bool nonzero = !ctx.multiply(rec.element, ctx.b(i)).is_zero();
    if (!nonzero && !first_zero) first_zero = i;
    if (nonzero && first_zero && bad.empty())
      bad = "e*" + label_name(i) + " != 0 but e*" + label_name(*first_zero) + " = 0";
  }
  rep.add("prefix", bad.empty(), bad);
  return rep;
}

Element monomial_image(const YoungEndo& endo, Monomial x, const AlgebraContext& ctx) {
  Element acc = endo.record.element;
  for (auto i : x.support()) {
    if (i > endo.generators.size()) throw std::out_of_range("monomial uses a generator beyond k");
    acc = ctx.multiply(acc, endo.generators[i - 1].element);
  }
  return acc;
}

Report presentation_isomorphism(std::uint32_t m, std::uint32_t g, const AlgebraContext& ctx) {
  Report rep;
  const YoungEndo endo = endo_basis(m, g, ctx);
  rep.subject = "End(Y" + to_string(endo.record.mu) + ") vs canonical presentation";
  const auto n = static_cast<std::uint32_t>(endo.dimension);
  const std::size_t k = endo.k();
  const bool bracket = k == 0 ? n == 1 : ((std::uint64_t{1} << (k - 1)) < n && n <= (std::uint64_t{1} << k));
  rep.add("dimension bracket", bracket, "n=" + std::to_string(n) + ", k=" + std::to_string(k));

  const Presentation p = presentation_for_dimension(n);
  const bool same_k = p.k == k;
  rep.add("generator count", same_k,
          "presentation k=" + std::to_string(p.k) + ", corner k=" + std::to_string(k));
  if (!same_k) return rep;

  std::vector<Element> images;
  images.reserve(p.quotient_basis.size());
  Echelon span;
  bool independent = true;
  for (const auto& x : p.quotient_basis) {
    images.push_back(monomial_image(endo, x, ctx));
    independent = span.insert(images.back().coeffs()) && independent;
  }
  rep.add("basis images independent", independent && span.rank() == n,
          std::to_string(span.rank()) + " of " + std::to_string(n));

  std::string bad;
  for (const auto& gen : endo.generators)
    if (!ctx.multiply(gen.element, gen.element).is_zero() && bad.empty()) bad = "square of e*b(2^" + std::to_string(gen.s) + ")";
  for (const auto& x : p.killed)
    if (!monomial_image(endo, x, ctx).is_zero() && bad.empty()) bad = to_string(x);
  rep.add("relations vanish", bad.empty(), bad.empty() ? "" : bad + " maps to a non-zero element");

  bad.clear();
  for (std::size_t a = 0; a < n && bad.empty(); ++a) {
    for (std::size_t b = a; b < n && bad.empty(); ++b) {
      const auto prod = quotient_multiply(p, p.quotient_basis[a], p.quotient_basis[b]);
      const Element expect = prod ? images[prod->mask] : ctx.zero();
      if (ctx.multiply(images[a], images[b]) != expect)
        bad = to_string(p.quotient_basis[a]) + "*" + to_string(p.quotient_basis[b]);
    }
  }
  rep.add("products agree", bad.empty(), bad.empty() ? "" : "image of " + bad + " disagrees");
  return rep;
}

}  // namespace yendo
