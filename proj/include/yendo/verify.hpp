#pragma once

#include <cstdint>
#include <vector>

#include "yendo/report.hpp"
#include "yendo/schur_algebra.hpp"

namespace yendo {

/// Partitions of r at or below this size are also compared against the oracle.
inline constexpr std::uint32_t kOracleSweepBound = 12;

struct LambdaVerification {
  Partition lambda;
  std::vector<Report> reports;

  bool passed() const;
};

/// Every check for one lambda: algebra axioms, generation, the idempotent
/// family, and for each summand its basis, both lemmas, downward closure and
/// the presentation isomorphism; plus the oracle when r <= kOracleSweepBound.
LambdaVerification verify_lambda(const Partition& lambda);

/// All two-part partitions of 1..max_r, ordered by (r, lambda2).
std::vector<Partition> partitions_up_to(std::uint32_t max_r);

/// Worker count for sweeps: hardware concurrency, capped by YENDO_THREADS if set.
unsigned default_thread_count();

/// verify_lambda over partitions_up_to(max_r); results keep that order
/// however the work is scheduled.
std::vector<LambdaVerification> verify_sweep(std::uint32_t max_r, unsigned threads = default_thread_count());

}  // namespace yendo
