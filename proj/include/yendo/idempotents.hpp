#pragma once

#include <cstdint>
#include <vector>

#include "yendo/report.hpp"
#include "yendo/schur_algebra.hpp"

namespace yendo {

/// Bit positions u with (m+2g)_u = 1, split by the digit g_u:
/// I holds g_u = 0 (factor 1 + b(2^u)), J holds g_u = 1 (factor b(2^u)).
struct IJSets {
  std::vector<std::uint32_t> I;
  std::vector<std::uint32_t> J;

  bool operator==(const IJSets&) const = default;
};

IJSets ij_sets(std::uint64_t m, std::uint64_t g);

struct IdempotentRecord {
  std::uint32_t g = 0;
  Partition mu;  // (lambda1 + g, lambda2 - g)
  IJSets sets;
  Element element;
  bool vanished = false;
};

/// Raised when g lies outside 0..lambda2 or m disagrees with the context.
struct BadIndex : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// e_{m,g} = prod_{u in J} b(2^u) * prod_{u in I} (1 + b(2^u)), evaluated in ctx.
IdempotentRecord idempotent(std::uint32_t m, std::uint32_t g, const AlgebraContext& ctx);

/// The same product restricted to factor positions u <= t.
Element truncated_idempotent(std::uint32_t m, std::uint32_t g, std::uint32_t t, const AlgebraContext& ctx);

/// One record per g = 0..lambda2, in increasing g, vanished ones included.
std::vector<IdempotentRecord> idempotent_family(const AlgebraContext& ctx);

/// Basis (in echelon form) of the corner e * S_K(lambda).
std::vector<BitVec> corner_basis(const Element& e, const AlgebraContext& ctx);

/// Number of idempotents in the corner e * S_K(lambda), or nullopt when its
/// dimension exceeds kMaxEnumerationDim.
std::optional<std::uint64_t> corner_idempotent_count(const Element& e, const AlgebraContext& ctx);

/// Idempotence, orthogonality, completeness and primitivity of the family.
Report verify_family(const AlgebraContext& ctx);

}  // namespace yendo
