#include "yendo/documents.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "yendo/idempotents.hpp"
#include "yendo/padic.hpp"
#include "yendo/young_endo.hpp"

using nlohmann::json;

namespace yendo {

void to_json(json& j, const Partition& p) { j = json::array({p.first, p.second}); }

void from_json(const json& j, Partition& p) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("partition must be a two-element array");
  p.first = j.at(0).get<std::uint32_t>();
  p.second = j.at(1).get<std::uint32_t>();
}

void to_json(json& j, const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  j = {{"subject", r.subject}, {"passed", r.passed()}, {"checks", std::move(checks)}};
}

void from_json(const json& j, Report& r) {
  r.subject = j.at("subject").get<std::string>();
  r.checks.clear();
  for (const auto& c : j.at("checks"))
    r.checks.push_back({c.at("name").get<std::string>(), status_from_string(c.at("status").get<std::string>()),
                        c.at("detail").get<std::string>()});
}

void to_json(json& j, const Profile& p) {
  j = {{"dimension", p.dimension},
       {"idempotents", p.idempotents ? json(*p.idempotents) : json(nullptr)},
       {"radical_chain", p.radical_chain}};
}

void from_json(const json& j, Profile& p) {
  p.dimension = j.at("dimension").get<std::size_t>();
  const auto& idem = j.at("idempotents");
  p.idempotents = idem.is_null() ? std::nullopt : std::optional<std::uint64_t>(idem.get<std::uint64_t>());
  p.radical_chain = j.at("radical_chain").get<std::vector<std::size_t>>();
}

}  // namespace yendo

namespace yendo::doc {

namespace {

bool all_passed(const std::vector<Report>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const Report& r) { return r.passed(); });
}

Labels support_labels(const Monomial& x) { return x.support(); }

std::string labels_text(const Labels& labels) {
  if (labels.empty()) return "0";
  std::string out;
  for (auto i : labels) {
    if (!out.empty()) out += " + ";
    out += i == 0 ? std::string("1") : "b(" + std::to_string(i) + ")";
  }
  return out;
}

std::string verdict(bool ok) { return ok ? "pass" : "fail"; }

void render_report(std::ostream& os, const Report& r, bool verbose, const std::string& indent = "  ") {
  os << indent << "[" << verdict(r.passed()) << "] " << r.subject << " (" << r.checks.size() << " checks)\n";
  for (const auto& c : r.checks) {
    if (!verbose && c.status != Status::fail) continue;
    os << indent << "  " << to_string(c.status) << ": " << c.name;
    if (!c.detail.empty()) os << " -- " << c.detail;
    os << "\n";
  }
}

}  // namespace

bool passed(const Idempotents& d) { return d.verification.passed(); }
bool passed(const Endo& d) { return all_passed(d.checks); }
bool passed(const Verify& d) {
  return std::all_of(d.results.begin(), d.results.end(), [](const VerifyEntry& e) { return all_passed(e.reports); });
}
bool passed(const OracleCheck& d) { return d.report.passed(); }

Labels labels_of(const Element& e) { return e.labels(); }

PresentationDoc make_presentation_doc(const Presentation& p) {
  PresentationDoc d;
  d.n = p.n;
  d.k = p.k;
  for (const auto& x : p.killed) d.killed.push_back(support_labels(x));
  for (const auto& x : p.quotient_basis) d.quotient_basis.push_back(support_labels(x));
  d.text = to_text(p);
  return d;
}

MultTable make_mult_table(const AlgebraContext& ctx) {
  MultTable d{ctx.lambda(), ctx.m(), ctx.lambda2(), {}};
  for (std::uint32_t i = 0; i <= ctx.lambda2(); ++i) {
    auto& row = d.table.emplace_back();
    for (std::uint32_t j = 0; j <= ctx.lambda2(); ++j) row.push_back(labels_of(ctx.product(i, j)));
  }
  return d;
}

Decompose make_decompose(const AlgebraContext& ctx) {
  Decompose d{ctx.lambda(), ctx.m(), {}};
  for (std::uint32_t g = 0; g <= ctx.lambda2(); ++g) {
    const auto parity = static_cast<std::uint32_t>(b_parity(ctx.m(), g));
    d.rows.push_back({g, {ctx.lambda().first + g, ctx.lambda2() - g}, parity, parity == 1});
  }
  return d;
}

Idempotents make_idempotents(const AlgebraContext& ctx) {
  Idempotents d{ctx.lambda(), ctx.m(), {}, verify_family(ctx)};
  for (const auto& rec : idempotent_family(ctx))
    d.records.push_back({rec.g, rec.mu, rec.sets.I, rec.sets.J, labels_of(rec.element), rec.vanished});
  return d;
}

Endo make_endo(const AlgebraContext& ctx, std::uint32_t g) {
  const YoungEndo endo = endo_basis(ctx.m(), g, ctx);
  Endo d;
  d.lambda = ctx.lambda();
  d.g = g;
  d.mu = endo.record.mu;
  d.idempotent = labels_of(endo.record.element);
  for (std::size_t i = 0; i < endo.basis.size(); ++i)
    d.basis.push_back({endo.basis_labels[i], labels_of(endo.basis[i])});
  for (std::size_t i = 0; i < endo.generators.size(); ++i)
    d.generators.push_back({static_cast<std::uint32_t>(i + 1), endo.generators[i].s,
                            labels_of(endo.generators[i].element)});
  d.dimension = static_cast<std::uint32_t>(endo.dimension);
  d.presentation = make_presentation_doc(presentation_for_dimension(d.dimension));
  d.checks.push_back(check_basis(ctx.m(), g, ctx));
  d.checks.push_back(check_involvement(ctx.m(), g, ctx));
  d.checks.push_back(check_orthogonality_lemma(ctx.m(), g, ctx));
  d.checks.push_back(check_downward_closure(ctx.m(), g, ctx));
  d.checks.push_back(presentation_isomorphism(ctx.m(), g, ctx));
  return d;
}

Verify make_verify(std::uint32_t max_r, const std::vector<LambdaVerification>& results) {
  Verify d{max_r, {}};
  for (const auto& r : results) d.results.push_back({r.lambda, r.reports});
  return d;
}

OracleCheck make_oracle_check(const AlgebraContext& ctx) {
  const OracleAlgebra oracle = build_oracle(ctx.r(), ctx.lambda2());
  return {ctx.lambda(), invariant_profile(ctx.structure_table()), invariant_profile(oracle.table),
          compare(ctx, oracle)};
}

// ---------------------------------------------------------------- JSON

void to_json(json& j, const MultTable& d) {
  j = {{"lambda", d.lambda}, {"m", d.m}, {"lambda2", d.lambda2}, {"table", d.table}};
}
void from_json(const json& j, MultTable& d) {
  d.lambda = j.at("lambda").get<Partition>();
  d.m = j.at("m").get<std::uint32_t>();
  d.lambda2 = j.at("lambda2").get<std::uint32_t>();
  d.table = j.at("table").get<std::vector<std::vector<Labels>>>();
}

void to_json(json& j, const Decompose& d) {
  json rows = json::array();
  for (const auto& r : d.rows)
    rows.push_back({{"g", r.g}, {"mu", r.mu}, {"b_parity", r.b_parity}, {"summand", r.summand}});
  j = {{"lambda", d.lambda}, {"m", d.m}, {"rows", std::move(rows)}};
}
void from_json(const json& j, Decompose& d) {
  d.lambda = j.at("lambda").get<Partition>();
  d.m = j.at("m").get<std::uint32_t>();
  d.rows.clear();
  for (const auto& r : j.at("rows"))
    d.rows.push_back({r.at("g").get<std::uint32_t>(), r.at("mu").get<Partition>(),
                      r.at("b_parity").get<std::uint32_t>(), r.at("summand").get<bool>()});
}

void to_json(json& j, const Idempotents& d) {
  json recs = json::array();
  for (const auto& r : d.records)
    recs.push_back({{"g", r.g}, {"mu", r.mu}, {"I", r.I}, {"J", r.J}, {"element", r.element}, {"vanished", r.vanished}});
  j = {{"lambda", d.lambda}, {"m", d.m}, {"records", std::move(recs)}, {"verification", d.verification},
       {"passed", passed(d)}};
}
void from_json(const json& j, Idempotents& d) {
  d.lambda = j.at("lambda").get<Partition>();
  d.m = j.at("m").get<std::uint32_t>();
  d.records.clear();
  for (const auto& r : j.at("records"))
    d.records.push_back({r.at("g").get<std::uint32_t>(), r.at("mu").get<Partition>(), r.at("I").get<Labels>(),
                         r.at("J").get<Labels>(), r.at("element").get<Labels>(), r.at("vanished").get<bool>()});
  d.verification = j.at("verification").get<Report>();
}

void to_json(json& j, const PresentationDoc& d) {
  j = {{"n", d.n}, {"k", d.k}, {"killed", d.killed}, {"quotient_basis", d.quotient_basis}, {"text", d.text}};
}
void from_json(const json& j, PresentationDoc& d) {
  d.n = j.at("n").get<std::uint32_t>();
  d.k = j.at("k").get<std::uint32_t>();
  d.killed = j.at("killed").get<std::vector<Labels>>();
  d.quotient_basis = j.at("quotient_basis").get<std::vector<Labels>>();
  d.text = j.at("text").get<std::string>();
}

void to_json(json& j, const Endo& d) {
  json basis = json::array(), gens = json::array();
  for (const auto& b : d.basis) basis.push_back({{"label", b.label}, {"element", b.element}});
  for (const auto& g : d.generators) gens.push_back({{"x", g.x}, {"s", g.s}, {"element", g.element}});
  j = {{"lambda", d.lambda},       {"g", d.g},
       {"mu", d.mu},               {"idempotent", d.idempotent},
       {"basis", std::move(basis)}, {"generators", std::move(gens)},
       {"dimension", d.dimension}, {"presentation", d.presentation},
       {"checks", d.checks},       {"passed", passed(d)}};
}
void from_json(const json& j, Endo& d) {
  d.lambda = j.at("lambda").get<Partition>();
  d.g = j.at("g").get<std::uint32_t>();
  d.mu = j.at("mu").get<Partition>();
  d.idempotent = j.at("idempotent").get<Labels>();
  d.basis.clear();
  for (const auto& b : j.at("basis")) d.basis.push_back({b.at("label").get<std::uint32_t>(), b.at("element").get<Labels>()});
  d.generators.clear();
  for (const auto& g : j.at("generators"))
    d.generators.push_back({g.at("x").get<std::uint32_t>(), g.at("s").get<std::uint32_t>(), g.at("element").get<Labels>()});
  d.dimension = j.at("dimension").get<std::uint32_t>();
  d.presentation = j.at("presentation").get<PresentationDoc>();
  d.checks = j.at("checks").get<std::vector<Report>>();
}

void to_json(json& j, const Verify& d) {
  json results = json::array();
  std::size_t failed = 0;
  for (const auto& e : d.results) {
    const bool ok = all_passed(e.reports);
    failed += ok ? 0 : 1;
    results.push_back({{"lambda", e.lambda}, {"passed", ok}, {"reports", e.reports}});
  }
  j = {{"max_r", d.max_r},
       {"summary", {{"checked", d.results.size()}, {"failed", failed}}},
       {"results", std::move(results)},
       {"passed", passed(d)}};
}
void from_json(const json& j, Verify& d) {
  d.max_r = j.at("max_r").get<std::uint32_t>();
  d.results.clear();
  for (const auto& e : j.at("results"))
    d.results.push_back({e.at("lambda").get<Partition>(), e.at("reports").get<std::vector<Report>>()});
}

void to_json(json& j, const OracleCheck& d) {
  j = {{"lambda", d.lambda}, {"formula_profile", d.formula}, {"oracle_profile", d.oracle},
       {"report", d.report}, {"passed", passed(d)}};
}
void from_json(const json& j, OracleCheck& d) {
  d.lambda = j.at("lambda").get<Partition>();
  d.formula = j.at("formula_profile").get<Profile>();
  d.oracle = j.at("oracle_profile").get<Profile>();
  d.report = j.at("report").get<Report>();
}

json envelope(const std::string& command, json body) {
  json out = {{"format_version", kFormatVersion}, {"command", command}};
  for (auto it = body.begin(); it != body.end(); ++it) out[it.key()] = it.value();
  return out;
}

json from_envelope(const json& doc, const std::string& command) {
  if (doc.value("format_version", -1) != kFormatVersion)
    throw std::invalid_argument("unsupported format_version");
  if (doc.value("command", std::string{}) != command)
    throw std::invalid_argument("document is not a '" + command + "' result");
  json body = doc;
  body.erase("format_version");
  body.erase("command");
  return body;
}

// ---------------------------------------------------------------- text

std::string render_text(const MultTable& d) {
  std::ostringstream os;
  os << "S_K" << to_string(d.lambda) << ": m=" << d.m << ", lambda2=" << d.lambda2
     << ", r=" << d.lambda.size() << "\n";
  for (std::size_t i = 0; i < d.table.size(); ++i)
    for (std::size_t j = 0; j < d.table[i].size(); ++j)
      os << "b(" << i << ")*b(" << j << ") = " << labels_text(d.table[i][j]) << "\n";
  return os.str();
}

std::string render_text(const Decompose& d) {
  std::ostringstream os;
  os << "M" << to_string(d.lambda) << ": m=" << d.m << ", r=" << d.lambda.size() << "\n";
  os << "g\tmu\tB(m,g) mod 2\tsummand\n";
  for (const auto& r : d.rows)
    os << r.g << "\t" << to_string(r.mu) << "\t" << r.b_parity << "\t" << (r.summand ? "yes" : "no") << "\n";
  return os.str();
}

std::string render_text(const Idempotents& d, bool verbose) {
  std::ostringstream os;
  os << "idempotents of S_K" << to_string(d.lambda) << " (m=" << d.m << ")\n";
  auto set_text = [](const Labels& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
  };
  for (const auto& r : d.records) {
    os << "g=" << r.g << " mu=" << to_string(r.mu) << " I=" << set_text(r.I) << " J=" << set_text(r.J) << ": ";
    os << (r.vanished ? "vanished" : "e = " + labels_text(r.element)) << "\n";
  }
  render_report(os, d.verification, verbose);
  os << "result: " << verdict(passed(d)) << "\n";
  return os.str();
}

std::string render_text(const PresentationDoc& d) {
  std::ostringstream os;
  os << "dimension n=" << d.n << ", generators k=" << d.k << "\n";
  os << "presentation: " << d.text << "\n";
  os << "quotient basis:";
  for (const auto& x : d.quotient_basis) os << " " << to_string(Monomial::from_support(x));
  os << "\n";
  return os.str();
}

std::string render_text(const Endo& d, bool verbose) {
  std::ostringstream os;
  os << "End(Y" << to_string(d.mu) << ") inside S_K" << to_string(d.lambda) << ", g=" << d.g << "\n";
  os << "idempotent e = " << labels_text(d.idempotent) << "\n";
  os << "dimension n=" << d.dimension << ", generators k=" << d.generators.size() << "\n";
  os << "basis:\n";
  for (const auto& b : d.basis) os << "  e*b(" << b.label << ") = " << labels_text(b.element) << "\n";
  os << "generators:\n";
  for (const auto& g : d.generators)
    os << "  x" << g.x << " -> e*b(2^" << g.s << ") = " << labels_text(g.element) << "\n";
  os << "presentation: " << d.presentation.text << "\n";
  for (const auto& r : d.checks) render_report(os, r, verbose);
  os << "result: " << verdict(passed(d)) << "\n";
  return os.str();
}

std::string render_text(const Verify& d, bool verbose) {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& e : d.results) {
    const bool ok = all_passed(e.reports);
    failed += ok ? 0 : 1;
    os << "lambda=" << to_string(e.lambda) << ": " << verdict(ok) << "\n";
    if (verbose || !ok)
      for (const auto& r : e.reports) render_report(os, r, verbose);
  }
  os << "checked " << d.results.size() << " partitions, " << failed << " failed\n";
  os << "result: " << verdict(passed(d)) << "\n";
  return os.str();
}

std::string render_text(const OracleCheck& d, bool verbose) {
  std::ostringstream os;
  auto profile_text = [](const Profile& p) {
    std::string out = "dim " + std::to_string(p.dimension) + ", idempotents " +
                      (p.idempotents ? std::to_string(*p.idempotents) : std::string("n/a")) + ", radical chain [";
    for (std::size_t i = 0; i < p.radical_chain.size(); ++i)
      out += (i ? "," : "") + std::to_string(p.radical_chain[i]);
    return out + "]";
  };
  os << "lambda=" << to_string(d.lambda) << "\n";
  os << "formula: " << profile_text(d.formula) << "\n";
  os << "oracle:  " << profile_text(d.oracle) << "\n";
  render_report(os, d.report, verbose);
  os << "result: " << verdict(passed(d)) << "\n";
  return os.str();
}

}  // namespace yendo::doc
