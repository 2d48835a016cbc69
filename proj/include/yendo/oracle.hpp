#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "yendo/finite_algebra.hpp"
#include "yendo/report.hpp"
#include "yendo/schur_algebra.hpp"

namespace yendo {

inline constexpr std::uint32_t kMaxOracleDegree = 14;

/// End(M^lambda) on the double-coset basis psi_0..psi_{lambda2}, where psi_j
/// sends a lambda2-subset S of {1..r} to the sum of all T with
/// |S n T| = lambda2 - j. Structure constants are reduced mod 2.
struct OracleAlgebra {
  std::uint32_t r = 0;
  std::uint32_t lambda2 = 0;
  StructureTable table;

  Partition lambda() const { return {r - lambda2, lambda2}; }
};

/// Requires 2*lambda2 <= r <= kMaxOracleDegree. Constants are read off a
/// probe subset and re-derived from a second probe; any disagreement throws
/// std::logic_error.
OracleAlgebra build_oracle(std::uint32_t r, std::uint32_t lambda2);

/// Basis-free isomorphism invariants of a commutative GF(2) algebra.
struct Profile {
  std::size_t dimension = 0;
  std::optional<std::uint64_t> idempotents;  // absent above kMaxEnumerationDim
  std::vector<std::size_t> radical_chain;    // dim N, dim N^2, ..., 0; empty if N = 0

  bool operator==(const Profile&) const = default;
};

Profile invariant_profile(const StructureTable& alg);

/// Unit, commutativity and associativity of a structure table, exhaustively.
Report check_structure(const StructureTable& alg, std::size_t unit_index = 0);

/// Profiles of the formula algebra and the oracle must agree, and the
/// idempotent count must be 2^f for f the number of surviving g.
Report compare(const AlgebraContext& ctx, const OracleAlgebra& oracle);

}  // namespace yendo
