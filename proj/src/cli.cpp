#include "yendo/cli.hpp"

#include <charconv>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "yendo/documents.hpp"
#include "yendo/young_endo.hpp"

namespace yendo {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::uint32_t parse_uint(const std::string& s, const std::string& what) {
  std::uint32_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end || s.empty()) throw UsageError("invalid " + what + " '" + s + "'");
  return v;
}

Partition parse_partition(const std::string& s, const std::string& what) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) {
    // A one-part partition such as "6".
    return {parse_uint(s, what), 0};
  }
  Partition p{parse_uint(s.substr(0, comma), what), parse_uint(s.substr(comma + 1), what)};
  if (p.first < p.second) throw UsageError(what + " parts must be non-increasing");
  return p;
}

struct RunConfig {
  std::optional<std::string> lambda;
  std::optional<std::uint32_t> m;
  std::optional<std::uint32_t> lambda2;
  std::optional<std::uint32_t> g;
  std::optional<std::string> mu;
  std::optional<std::uint32_t> dim;
  std::optional<std::uint32_t> max_r;
  unsigned threads = 0;
  bool json = false;
  bool verbose = false;

  Partition resolve_lambda() const {
    if (lambda && (m || lambda2)) throw UsageError("give either --lambda or --m/--lambda2, not both");
    if (lambda) return parse_partition(*lambda, "--lambda");
    if (m && lambda2) return {*m + *lambda2, *lambda2};
    throw UsageError("a partition is required: --lambda a,b or --m M --lambda2 L");
  }

  std::uint32_t resolve_g(const Partition& lam) const {
    std::optional<std::uint32_t> from_mu;
    if (mu) {
      const Partition p = parse_partition(*mu, "--mu");
      if (p.size() != lam.size()) throw UsageError("--mu must be a partition of r = " + std::to_string(lam.size()));
      if (p.second > lam.second) throw UsageError("--mu must dominate lambda (mu2 <= lambda2)");
      from_mu = lam.second - p.second;
    }
    if (g && from_mu && *g != *from_mu) throw UsageError("--g and --mu disagree");
    if (g) {
      if (*g > lam.second) throw UsageError("--g must lie in 0..lambda2");
      return *g;
    }
    if (from_mu) return *from_mu;
    throw UsageError("either --g or --mu is required");
  }
};

void add_lambda_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--lambda", cfg.lambda, "partition lambda as 'l1,l2'");
  cmd->add_option("--m", cfg.m, "m = l1 - l2 (with --lambda2)");
  cmd->add_option("--lambda2", cfg.lambda2, "second part of lambda (with --m)");
}

template <class Doc>
int emit(std::ostream& out, const std::string& command, const Doc& d, bool json, bool verbose) {
  if (json)
    out << doc::envelope(command, nlohmann::json(d)).dump(2) << "\n";
  else if constexpr (requires { doc::render_text(d, verbose); })
    out << doc::render_text(d, verbose);
  else
    out << doc::render_text(d);
  if constexpr (requires { doc::passed(d); })
    return doc::passed(d) ? kExitPass : kExitVerificationFailed;
  return kExitPass;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Endomorphism algebras of two-part Young modules in characteristic 2", "yendo"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_flag("--json", cfg.json, "emit a structured JSON document");
  app.add_flag("-v,--verbose", cfg.verbose, "list every check, not only failures");

  auto* mult = app.add_subcommand("mult-table", "structure constants b(i)*b(j) of S_K(lambda)");
  auto* decompose = app.add_subcommand("decompose", "which Y^mu are summands of M^lambda");
  auto* idem = app.add_subcommand("idempotents", "the idempotents e_{m,g} and their verification");
  auto* endo = app.add_subcommand("endo", "basis, generators and presentation of End(Y^mu)");
  auto* pres = app.add_subcommand("presentation", "canonical presentation for a dimension");
  auto* verify = app.add_subcommand("verify", "run every check for one lambda or a sweep");
  auto* oracle = app.add_subcommand("oracle-check", "compare against the double-coset model");

  for (auto* cmd : {mult, decompose, idem, endo, verify, oracle}) add_lambda_options(cmd, cfg);
  for (auto* cmd : {mult, decompose, idem, endo, pres, verify, oracle}) {
    cmd->add_flag("--json", cfg.json, "emit a structured JSON document");
    cmd->add_flag("-v,--verbose", cfg.verbose, "list every check");
  }
  endo->add_option("--g", cfg.g, "g = lambda2 - mu2");
  endo->add_option("--mu", cfg.mu, "partition mu as 'mu1,mu2'");
  pres->add_option("--dim", cfg.dim, "dimension n >= 1")->required();
  verify->add_option("--max-r", cfg.max_r, "sweep every two-part partition with r <= N");
  verify->add_option("--threads", cfg.threads, "worker threads (default: hardware, capped by YENDO_THREADS)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*mult) return emit(out, "mult-table", doc::make_mult_table(context_for(cfg.resolve_lambda())), cfg.json, cfg.verbose);
    if (*decompose)
      return emit(out, "decompose", doc::make_decompose(context_for(cfg.resolve_lambda())), cfg.json, cfg.verbose);
    if (*idem)
      return emit(out, "idempotents", doc::make_idempotents(context_for(cfg.resolve_lambda())), cfg.json, cfg.verbose);
    if (*endo) {
      const Partition lam = cfg.resolve_lambda();
      const AlgebraContext ctx = context_for(lam);
      return emit(out, "endo", doc::make_endo(ctx, cfg.resolve_g(lam)), cfg.json, cfg.verbose);
    }
    if (*pres) {
      if (*cfg.dim == 0) throw UsageError("--dim must be at least 1");
      return emit(out, "presentation", doc::make_presentation_doc(presentation_for_dimension(*cfg.dim)), cfg.json,
                  cfg.verbose);
    }
    if (*verify) {
      if (cfg.max_r) {
        if (cfg.lambda || cfg.m || cfg.lambda2) throw UsageError("give either a partition or --max-r, not both");
        const unsigned threads = cfg.threads ? cfg.threads : default_thread_count();
        return emit(out, "verify", doc::make_verify(*cfg.max_r, verify_sweep(*cfg.max_r, threads)), cfg.json,
                    cfg.verbose);
      }
      const Partition lam = cfg.resolve_lambda();
      return emit(out, "verify", doc::make_verify(0, {verify_lambda(lam)}), cfg.json, cfg.verbose);
    }
    if (*oracle)
      return emit(out, "oracle-check", doc::make_oracle_check(context_for(cfg.resolve_lambda())), cfg.json,
                  cfg.verbose);
  } catch (const NotASummand& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace yendo
