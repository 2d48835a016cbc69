// Acceptance suite: every criterion is checked exhaustively over its stated
// range and reported on one line. Exit status is non-zero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "yendo/idempotents.hpp"
#include "yendo/oracle.hpp"
#include "yendo/padic.hpp"
#include "yendo/presentation.hpp"
#include "yendo/schur_algebra.hpp"
#include "yendo/young_endo.hpp"

using namespace yendo;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
};

// Every (m, lambda2) with 1 <= r = m + 2*lambda2 <= max_r.
std::vector<std::pair<std::uint32_t, std::uint32_t>> lambdas(std::uint32_t max_r) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t r = 1; r <= max_r; ++r)
    for (std::uint32_t l2 = 0; 2 * l2 <= r; ++l2) out.emplace_back(r - 2 * l2, l2);
  return out;
}

std::string where(std::uint32_t m, std::uint32_t l2, std::int64_t g = -1) {
  std::string s = "m=" + std::to_string(m) + " lambda2=" + std::to_string(l2);
  if (g >= 0) s += " g=" + std::to_string(g);
  return s;
}

const Check* find_check(const Report& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return &c;
  return nullptr;
}

constexpr std::uint32_t kMaxR = 40;

Outcome well_formedness() {
  Outcome o;
  std::size_t count = 0;
  for (auto [m, l2] : lambdas(kMaxR)) {
    const auto rep = verify_algebra(make_context(m, l2));
    for (const char* name : {"identity", "commutativity", "associativity"}) {
      const Check* c = find_check(rep, name);
      if (!c || c->status != Status::pass) o.fail(where(m, l2) + ": " + name);
    }
    ++count;
  }
  if (o.ok) o.detail = std::to_string(count) + " algebras, exhaustive triples";
  return o;
}

Outcome factorization() {
  Outcome o;
  std::size_t count = 0;
  for (auto [m, l2] : lambdas(kMaxR)) {
    const auto ctx = make_context(m, l2);
    for (std::uint32_t i = 0; i <= l2; ++i, ++count)
      if (power_product(i, ctx) != ctx.b(i)) o.fail(where(m, l2) + " i=" + std::to_string(i));
  }
  if (o.ok) o.detail = std::to_string(count) + " labels";
  return o;
}

Outcome idempotent_theorem() {
  Outcome o;
  std::size_t primitive = 0;
  for (auto [m, l2] : lambdas(kMaxR)) {
    const auto rep = verify_family(make_context(m, l2));
    for (const auto& c : rep.checks) {
      if (c.status == Status::fail) o.fail(where(m, l2) + ": " + c.name + " " + c.detail);
      if (c.status == Status::skipped) o.fail(where(m, l2) + ": primitivity not enumerated");
      if (c.name.rfind("primitive", 0) == 0 && c.status == Status::pass) ++primitive;
    }
  }
  if (o.ok) o.detail = std::to_string(primitive) + " primitive idempotents enumerated";
  return o;
}

Outcome worked_example() {
  Outcome o;
  for (std::uint32_t t = 1; t <= 20; ++t) {
    const auto ctx = make_context(0, t - 1);
    std::size_t live = 0;
    for (const auto& rec : idempotent_family(ctx)) {
      if (rec.vanished) continue;
      ++live;
      if (rec.g != 0 || rec.element != ctx.one()) o.fail("t=" + std::to_string(t) + ": unexpected idempotent");
    }
    if (live != 1) o.fail("t=" + std::to_string(t) + ": family size " + std::to_string(live));
    if (endo_basis(0, 0, ctx).dimension != t) o.fail("t=" + std::to_string(t) + ": dimension");
  }
  if (o.ok) o.detail = "t = 1..20: family {1}, dim End = t";
  return o;
}

template <class Fn>
void for_each_corner(Fn&& fn) {
  for (auto [m, l2] : lambdas(kMaxR)) {
    const auto ctx = make_context(m, l2);
    for (const auto& rec : idempotent_family(ctx))
      if (!rec.vanished) fn(m, l2, rec, ctx);
  }
}

Outcome basis_theorem() {
  Outcome o;
  std::size_t corners = 0;
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> dims;
  for_each_corner([&](std::uint32_t m, std::uint32_t l2, const IdempotentRecord& rec, const AlgebraContext& ctx) {
    ++corners;
    if (!check_basis(m, rec.g, ctx).passed()) o.fail(where(m, l2, rec.g));
    dims[{m, l2}] += endo_basis(m, rec.g, ctx).dimension;
  });
  for (const auto& [key, total] : dims)
    if (total != key.second + 1) o.fail(where(key.first, key.second) + ": dimensions sum to " + std::to_string(total));
  if (o.ok) o.detail = std::to_string(corners) + " corners";
  return o;
}

Outcome lemmas() {
  Outcome o;
  std::size_t instances = 0;
  for_each_corner([&](std::uint32_t m, std::uint32_t l2, const IdempotentRecord& rec, const AlgebraContext& ctx) {
    const auto orth = check_orthogonality_lemma(m, rec.g, ctx);
    const auto inv = check_involvement(m, rec.g, ctx);
    if (!orth.passed()) o.fail(where(m, l2, rec.g) + ": square-zero");
    if (!inv.passed()) o.fail(where(m, l2, rec.g) + ": involvement");
    instances += orth.checks.size() + inv.checks.size();
  });
  if (o.ok) o.detail = std::to_string(instances) + " instances";
  return o;
}

Outcome dimension_theorem() {
  Outcome o;
  std::map<std::size_t, std::set<std::string>> derived;
  std::size_t corners = 0;
  for_each_corner([&](std::uint32_t m, std::uint32_t l2, const IdempotentRecord& rec, const AlgebraContext& ctx) {
    ++corners;
    const auto iso = presentation_isomorphism(m, rec.g, ctx);
    if (!iso.passed()) o.fail(where(m, l2, rec.g) + ": isomorphism");
    // Read a presentation off the corner itself: generators in increasing s,
    // killed = square-free supports whose image vanishes.
    const auto endo = endo_basis(m, rec.g, ctx);
    const auto k = static_cast<std::uint32_t>(endo.k());
    const std::size_t n = endo.dimension;
    if (!(k == 0 ? n == 1 : ((std::size_t{1} << (k - 1)) < n && n <= (std::size_t{1} << k))))
      o.fail(where(m, l2, rec.g) + ": bracket");
    Presentation p;
    p.n = static_cast<std::uint32_t>(n);
    p.k = k;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      if (monomial_image(endo, Monomial{mask}, ctx).is_zero())
        p.killed.push_back({mask});
      else
        p.quotient_basis.push_back({mask});
    }
    derived[n].insert(to_text(p));
    if (p != presentation_for_dimension(p.n)) o.fail(where(m, l2, rec.g) + ": corner relations differ");
  });
  for (const auto& [n, texts] : derived)
    if (texts.size() != 1) o.fail("n=" + std::to_string(n) + ": " + std::to_string(texts.size()) + " presentations");
  if (o.ok) o.detail = std::to_string(corners) + " corners, " + std::to_string(derived.size()) + " distinct dimensions";
  return o;
}

Outcome presentation_consistency() {
  Outcome o;
  for (std::uint32_t n = 1; n <= 4096; ++n) {
    if (killed_by_rank(n) != killed_by_inequality(n)) o.fail("n=" + std::to_string(n));
    try {
      if (presentation_for_dimension(n).quotient_basis.size() != n) o.fail("n=" + std::to_string(n) + ": basis size");
    } catch (const std::logic_error& e) {
      o.fail(e.what());
    }
  }
  if (o.ok) o.detail = "n = 1..4096";
  return o;
}

Outcome oracle_cross_check() {
  Outcome o;
  std::size_t count = 0;
  for (auto [m, l2] : lambdas(12)) {
    const auto ctx = make_context(m, l2);
    const auto rep = compare(ctx, build_oracle(ctx.r(), l2));
    for (const auto& c : rep.checks)
      if (c.status != Status::pass) o.fail(where(m, l2) + ": " + c.name + " " + c.detail);
    ++count;
  }
  if (o.ok) o.detail = std::to_string(count) + " partitions, r <= 12";
  return o;
}

Outcome arithmetic_kernel() {
  Outcome o;
  std::size_t count = 0;
  for (std::uint64_t m = 0; m <= 4096; ++m) {
    const auto row = binom_row_exact(m);
    for (std::uint64_t n = 0; n <= m; ++n) {
      for (unsigned long p : {2ul, 3ul, 5ul}) {
        ++count;
        if (binom_mod_p(m, n, p) != mpz_fdiv_ui(row[n].get_mpz_t(), p))
          o.fail("C(" + std::to_string(m) + "," + std::to_string(n) + ") mod " + std::to_string(p));
      }
    }
  }
  if (o.ok) o.detail = std::to_string(count) + " residues";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 algebra well-formedness (r <= 40)", well_formedness},
      {"2 power-of-two factorization", factorization},
      {"3 idempotent theorem", idempotent_theorem},
      {"4 lambda = (t-1,t-1) example", worked_example},
      {"5 basis theorem", basis_theorem},
      {"6 orthogonality and involvement lemmas", lemmas},
      {"7 dimension theorem", dimension_theorem},
      {"8 presentation relation rules agree (n <= 4096)", presentation_consistency},
      {"9 oracle cross-check (r <= 12)", oracle_cross_check},
      {"10 Lucas vs exact integers (m <= 4096, p in {2,3,5})", arithmetic_kernel},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s -- %s (%.2fs)\n", o.ok ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), secs);
    failed += o.ok ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
