#pragma once

// Output documents for the command-line front end. Each command fills one
// document; the text and JSON renderings are both produced from it, so the
// two modes cannot disagree on a verdict. JSON layout: docs/output-format.md.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "yendo/oracle.hpp"
#include "yendo/presentation.hpp"
#include "yendo/report.hpp"
#include "yendo/schur_algebra.hpp"
#include "yendo/verify.hpp"

namespace yendo::doc {

inline constexpr int kFormatVersion = 1;

using Labels = std::vector<std::uint32_t>;

struct MultTable {
  Partition lambda;
  std::uint32_t m = 0;
  std::uint32_t lambda2 = 0;
  std::vector<std::vector<Labels>> table;  // table[i][j] = b(i) * b(j)
  bool operator==(const MultTable&) const = default;
};

struct DecomposeRow {
  std::uint32_t g = 0;
  Partition mu;
  std::uint32_t b_parity = 0;
  bool summand = false;
  bool operator==(const DecomposeRow&) const = default;
};

struct Decompose {
  Partition lambda;
  std::uint32_t m = 0;
  std::vector<DecomposeRow> rows;
  bool operator==(const Decompose&) const = default;
};

struct IdempotentRow {
  std::uint32_t g = 0;
  Partition mu;
  Labels I;
  Labels J;
  Labels element;
  bool vanished = false;
  bool operator==(const IdempotentRow&) const = default;
};

struct Idempotents {
  Partition lambda;
  std::uint32_t m = 0;
  std::vector<IdempotentRow> records;
  Report verification;
  bool operator==(const Idempotents&) const = default;
};

struct PresentationDoc {
  std::uint32_t n = 1;
  std::uint32_t k = 0;
  std::vector<Labels> killed;          // supports, phi order
  std::vector<Labels> quotient_basis;  // supports, phi order
  std::string text;
  bool operator==(const PresentationDoc&) const = default;
};

struct BasisEntry {
  std::uint32_t label = 0;
  Labels element;
  bool operator==(const BasisEntry&) const = default;
};

struct GeneratorEntry {
  std::uint32_t x = 0;  // presentation index, 1-based
  std::uint32_t s = 0;  // maps to e * b(2^s)
  Labels element;
  bool operator==(const GeneratorEntry&) const = default;
};

struct Endo {
  Partition lambda;
  std::uint32_t g = 0;
  Partition mu;
  Labels idempotent;
  std::vector<BasisEntry> basis;
  std::vector<GeneratorEntry> generators;
  std::uint32_t dimension = 0;
  PresentationDoc presentation;
  std::vector<Report> checks;
  bool operator==(const Endo&) const = default;
};

struct VerifyEntry {
  Partition lambda;
  std::vector<Report> reports;
  bool operator==(const VerifyEntry&) const = default;
};

struct Verify {
  std::uint32_t max_r = 0;  // 0 for a single-lambda run
  std::vector<VerifyEntry> results;
  bool operator==(const Verify&) const = default;
};

struct OracleCheck {
  Partition lambda;
  Profile formula;
  Profile oracle;
  Report report;
  bool operator==(const OracleCheck&) const = default;
};

bool passed(const Idempotents& d);
bool passed(const Endo& d);
bool passed(const Verify& d);
bool passed(const OracleCheck& d);

Labels labels_of(const Element& e);
PresentationDoc make_presentation_doc(const Presentation& p);

MultTable make_mult_table(const AlgebraContext& ctx);
Decompose make_decompose(const AlgebraContext& ctx);
Idempotents make_idempotents(const AlgebraContext& ctx);
Endo make_endo(const AlgebraContext& ctx, std::uint32_t g);
Verify make_verify(std::uint32_t max_r, const std::vector<LambdaVerification>& results);
OracleCheck make_oracle_check(const AlgebraContext& ctx);

// JSON: each to_json produces the command body; envelope() adds the version
// and command fields, and from_envelope() validates them.
void to_json(nlohmann::json& j, const MultTable& d);
void from_json(const nlohmann::json& j, MultTable& d);
void to_json(nlohmann::json& j, const Decompose& d);
void from_json(const nlohmann::json& j, Decompose& d);
void to_json(nlohmann::json& j, const Idempotents& d);
void from_json(const nlohmann::json& j, Idempotents& d);
void to_json(nlohmann::json& j, const PresentationDoc& d);
void from_json(const nlohmann::json& j, PresentationDoc& d);
void to_json(nlohmann::json& j, const Endo& d);
void from_json(const nlohmann::json& j, Endo& d);
void to_json(nlohmann::json& j, const Verify& d);
void from_json(const nlohmann::json& j, Verify& d);
void to_json(nlohmann::json& j, const OracleCheck& d);
void from_json(const nlohmann::json& j, OracleCheck& d);

nlohmann::json envelope(const std::string& command, nlohmann::json body);
/// Returns the body; throws std::invalid_argument on a version or command mismatch.
nlohmann::json from_envelope(const nlohmann::json& doc, const std::string& command);

std::string render_text(const MultTable& d);
std::string render_text(const Decompose& d);
std::string render_text(const Idempotents& d, bool verbose);
std::string render_text(const PresentationDoc& d);
std::string render_text(const Endo& d, bool verbose);
std::string render_text(const Verify& d, bool verbose);
std::string render_text(const OracleCheck& d, bool verbose);

}  // namespace yendo::doc

namespace yendo {
void to_json(nlohmann::json& j, const Partition& p);
void from_json(const nlohmann::json& j, Partition& p);
void to_json(nlohmann::json& j, const Report& r);
void from_json(const nlohmann::json& j, Report& r);
void to_json(nlohmann::json& j, const Profile& p);
void from_json(const nlohmann::json& j, Profile& p);
}  // namespace yendo
