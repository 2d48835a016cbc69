#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "yendo/idempotents.hpp"
#include "yendo/presentation.hpp"
#include "yendo/report.hpp"
#include "yendo/schur_algebra.hpp"

namespace yendo {

/// Raised when e_{m,g} vanishes, i.e. Y^mu is not a summand of M^lambda.
struct NotASummand : std::domain_error {
  using std::domain_error::domain_error;
};

/// A generator e * b(2^s) of the corner algebra.
struct Generator {
  std::uint32_t s = 0;
  Element element;
};

/// End(Y^mu) realised as the corner e_{m,g} * S_K(lambda).
struct YoungEndo {
  IdempotentRecord record;
  std::vector<Element> basis;
  std::vector<std::uint32_t> basis_labels;
  std::vector<Generator> generators;  // ascending s, all non-zero
  std::size_t dimension = 0;

  std::size_t k() const { return generators.size(); }
};

/// Labels i <= lambda2 whose binary digits avoid the set bits of m+2g.
std::vector<std::uint32_t> admissible_labels(std::uint32_t m, std::uint32_t g, std::uint32_t lambda2);

/// Non-zero e*b(i) over admissible i, in increasing i. Throws NotASummand for a
/// vanished idempotent and std::logic_error if the elements are dependent.
YoungEndo endo_basis(std::uint32_t m, std::uint32_t g, const AlgebraContext& ctx);

/// Non-zero e*b(2^s) for (m+2g)_s = 0 and 2^s <= lambda2, increasing s.
std::vector<Generator> minimal_generators(std::uint32_t m, std::uint32_t g, const AlgebraContext& ctx);

/// Independence of the admissible basis and agreement of its size with the
/// rank of all e*b(i).
Report check_basis(std::uint32_t m, std::uint32_t g, const AlgebraContext& ctx);

/// e*b(2^u) is 0 or e for every u in I u J with 2^u <= lambda2.
Report check_involvement(std::uint32_t m, std::uint32_t g, const AlgebraContext& ctx);

/// e*b(2^s)*b(2^s) = 0 for every s with (m+2g)_s = 0 and 2^s <= lambda2.
Report check_orthogonality_lemma(std::uint32_t m, std::uint32_t g, const AlgebraContext& ctx);

/// Non-vanishing admissible labels form a prefix of the admissible labels in
/// phi order (numeric order of the label).
Report check_downward_closure(std::uint32_t m, std::uint32_t g, const AlgebraContext& ctx);

/// Image of a monomial under x_i -> e*b(2^{a_i}); the unit maps to e.
Element monomial_image(const YoungEndo& endo, Monomial x, const AlgebraContext& ctx);

/// Checks the map from presentation_for_dimension(n) onto the corner: the
/// bracket on k, independence of the basis images, vanishing of every
/// relation, and agreement of all basis products.
Report presentation_isomorphism(std::uint32_t m, std::uint32_t g, const AlgebraContext& ctx);

}  // namespace yendo
