#include "yendo/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

#include "yendo/idempotents.hpp"
#include "yendo/oracle.hpp"
#include "yendo/young_endo.hpp"

namespace yendo {

bool LambdaVerification::passed() const {
  return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.passed(); });
}

LambdaVerification verify_lambda(const Partition& lambda) {
  LambdaVerification out{lambda, {}};
  const AlgebraContext ctx = context_for(lambda);
  out.reports.push_back(verify_algebra(ctx));

  Report gen;
  gen.subject = "generation by b(2^t)";
  const auto gdim = generated_subalgebra_dim(ctx);
  gen.add("generated dimension", gdim == ctx.dim(), std::to_string(gdim) + " of " + std::to_string(ctx.dim()));
  out.reports.push_back(std::move(gen));

  out.reports.push_back(verify_family(ctx));
  for (const auto& rec : idempotent_family(ctx)) {
    if (rec.vanished) continue;
    const std::string tag = "g=" + std::to_string(rec.g) + " ";
    Report corner;
    corner.subject = "End(Y" + to_string(rec.mu) + ")";
    corner.merge(check_basis(ctx.m(), rec.g, ctx), tag + "basis ");
    corner.merge(check_involvement(ctx.m(), rec.g, ctx), tag + "involvement ");
    corner.merge(check_orthogonality_lemma(ctx.m(), rec.g, ctx), tag + "square-zero ");
    corner.merge(check_downward_closure(ctx.m(), rec.g, ctx), tag + "downward closure ");
    corner.merge(presentation_isomorphism(ctx.m(), rec.g, ctx), tag + "presentation ");
    out.reports.push_back(std::move(corner));
  }
  if (lambda.size() <= kOracleSweepBound) out.reports.push_back(compare(ctx, build_oracle(lambda.size(), lambda.second)));
  return out;
}

std::vector<Partition> partitions_up_to(std::uint32_t max_r) {
  std::vector<Partition> out;
  for (std::uint32_t r = 1; r <= max_r; ++r)
    for (std::uint32_t l2 = 0; 2 * l2 <= r; ++l2) out.push_back({r - l2, l2});
  return out;
}

unsigned default_thread_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("YENDO_THREADS")) {
    const long v = std::strtol(cap, nullptr, 10);
    if (v > 0) n = std::min(n, static_cast<unsigned>(v));
  }
  return n;
}

std::vector<LambdaVerification> verify_sweep(std::uint32_t max_r, unsigned threads) {
  const auto parts = partitions_up_to(max_r);
  std::vector<LambdaVerification> results(parts.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < parts.size(); i = next++) {
      try {
        results[i] = verify_lambda(parts[i]);
      } catch (const std::exception& e) {
        Report rep;
        rep.subject = "lambda=" + to_string(parts[i]);
        rep.add("completed", false, e.what());
        results[i] = {parts[i], {std::move(rep)}};
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(parts.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace yendo
