#include "yendo/oracle.hpp"

#include <bit>
#include <stdexcept>

#include "yendo/idempotents.hpp"

namespace yendo {

namespace {

std::vector<std::uint32_t> subsets_of_size(std::uint32_t r, std::uint32_t size) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < (1u << r); ++s)
    if (static_cast<std::uint32_t>(std::popcount(s)) == size) out.push_back(s);
  return out;
}

// Integer coefficients of psi_i(psi_j(probe)) over all subsets, then reduced to
// the structure vector of psi_i psi_j, checking every class is constant.
BitVec structure_vector(const std::vector<std::uint32_t>& subsets, std::uint32_t lambda2, std::uint32_t probe,
                        std::uint32_t i, std::uint32_t j) {
  const std::size_t count = subsets.size();
  auto intersection = [&](std::uint32_t a, std::uint32_t b) {
    return static_cast<std::uint32_t>(std::popcount(a & b));
  };
  std::vector<std::int64_t> inner(count, 0), outer(count, 0);
  for (std::size_t t = 0; t < count; ++t)
    if (intersection(probe, subsets[t]) == lambda2 - j) inner[t] = 1;
  for (std::size_t t = 0; t < count; ++t) {
    if (inner[t] == 0) continue;
    for (std::size_t u = 0; u < count; ++u)
      if (intersection(subsets[t], subsets[u]) == lambda2 - i) outer[u] += inner[t];
  }
  std::vector<std::optional<std::int64_t>> by_class(lambda2 + 1);
  for (std::size_t u = 0; u < count; ++u) {
    const std::uint32_t c = lambda2 - intersection(probe, subsets[u]);
    if (!by_class[c]) by_class[c] = outer[u];
    else if (*by_class[c] != outer[u])
      throw std::logic_error("oracle coefficient is not constant on an intersection class");
  }
  BitVec v(lambda2 + 1);
  for (std::uint32_t c = 0; c <= lambda2; ++c)
    if (by_class[c] && (*by_class[c] & 1)) v.set(c);
  return v;
}

}  // namespace

OracleAlgebra build_oracle(std::uint32_t r, std::uint32_t lambda2) {
  if (r > kMaxOracleDegree)
    throw std::length_error("oracle degree r = " + std::to_string(r) + " above bound " +
                            std::to_string(kMaxOracleDegree));
  if (2 * lambda2 > r) throw std::invalid_argument("oracle requires 2*lambda2 <= r");
  const auto subsets = subsets_of_size(r, lambda2);
  const std::uint32_t probe_a = subsets.front();
  const std::uint32_t probe_b = subsets.back();
  const std::size_t d = lambda2 + 1;
  std::vector<BitVec> products;
  products.reserve(d * d);
  for (std::uint32_t i = 0; i < d; ++i) {
    for (std::uint32_t j = 0; j < d; ++j) {
      BitVec v = structure_vector(subsets, lambda2, probe_a, i, j);
      if (v != structure_vector(subsets, lambda2, probe_b, i, j))
        throw std::logic_error("oracle structure constants depend on the probe subset");
      products.push_back(std::move(v));
    }
  }
  return {r, lambda2, StructureTable(d, std::move(products))};
}

Profile invariant_profile(const StructureTable& alg) {
  Profile prof;
  const std::size_t d = alg.dim();
  prof.dimension = d;

  std::vector<BitVec> basis;
  for (std::size_t i = 0; i < d; ++i) basis.push_back(alg.unit_vector(i));
  if (d <= kMaxEnumerationDim)
    prof.idempotents = count_idempotents(basis, [&](const BitVec& x) { return alg.multiply(x, x); });

  // Nilradical: kernel of x -> x^(2^j) with 2^j >= d. Iterated squaring is
  // linear here, so the kernel is computed from the images of the basis.
  std::vector<BitVec> images = basis;
  for (std::size_t power = 1; power < d; power *= 2)
    for (auto& v : images) v = alg.multiply(v, v);
  const std::vector<BitVec> radical = kernel_basis(images);
  if (radical.empty()) return prof;

  std::vector<BitVec> current = radical;
  while (true) {
    prof.radical_chain.push_back(current.size());
    if (current.empty()) break;
    Echelon next;
    for (const auto& a : current)
      for (const auto& b : radical) next.insert(alg.multiply(a, b));
    current = next.rows();
  }
  return prof;
}

Report check_structure(const StructureTable& alg, std::size_t unit_index) {
  Report rep;
  const std::size_t d = alg.dim();
  bool unit = true, comm = true, assoc = true;
  for (std::size_t i = 0; i < d; ++i) {
    unit = unit && alg.product(unit_index, i) == alg.unit_vector(i) && alg.product(i, unit_index) == alg.unit_vector(i);
    for (std::size_t j = 0; j < d; ++j) {
      comm = comm && alg.product(i, j) == alg.product(j, i);
      for (std::size_t k = 0; k < d && assoc; ++k)
        assoc = alg.multiply(alg.product(i, j), alg.unit_vector(k)) ==
                alg.multiply(alg.unit_vector(i), alg.product(j, k));
    }
  }
  rep.add("unit", unit);
  rep.add("commutativity", comm);
  rep.add("associativity", assoc);
  return rep;
}

Report compare(const AlgebraContext& ctx, const OracleAlgebra& oracle) {
  if (ctx.lambda() != oracle.lambda())
    throw std::invalid_argument("formula algebra " + to_string(ctx.lambda()) + " and oracle " +
                                to_string(oracle.lambda()) + " describe different partitions");
  Report rep;
  rep.subject = "oracle vs formula for lambda=" + to_string(ctx.lambda());
  rep.merge(check_structure(oracle.table), "oracle ");
  const Profile formula = invariant_profile(ctx.structure_table());
  const Profile other = invariant_profile(oracle.table);
  rep.add("profiles agree", formula == other);

  std::size_t f = 0;
  for (const auto& rec : idempotent_family(ctx))
    if (!rec.vanished) ++f;
  const std::uint64_t expected = std::uint64_t{1} << f;
  if (formula.idempotents && other.idempotents)
    rep.add("idempotent count 2^f", *formula.idempotents == expected && *other.idempotents == expected,
            "f=" + std::to_string(f) + ", formula " + std::to_string(*formula.idempotents) + ", oracle " +
                std::to_string(*other.idempotents));
  else
    rep.skip("idempotent count 2^f", "dimension above enumeration bound");
  return rep;
}

}  // namespace yendo
