#pragma once

// Structured command output: JSON (round-trippable) and CSV. Rationals are
// always strings ("P/Q" or "P"), never floats.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "quadfib/identities.hpp"
#include "quadfib/oeis.hpp"

namespace quadfib {

struct GFRow {
  std::string series;  // "f", "g", "f1", "g1"
  Rational x;
  std::int64_t truncation = 0;
  Rational closed;
  Rational truncated;
  std::string abs_diff;  // decimal, 30 digits

  friend bool operator==(const GFRow&, const GFRow&) = default;
};

struct KFibInfo {
  std::int64_t k = 0;
  std::int64_t r = 0;

  friend bool operator==(const KFibInfo&, const KFibInfo&) = default;
};

using ReportEntry = std::variant<IdentityReport, MatchReport, GFRow, KFibInfo>;

struct Document {
  std::string command;
  std::optional<SquarefreeD> d;
  std::optional<QuadElement> unit;
  std::optional<int> delta;
  std::optional<std::int64_t> discriminant;
  std::vector<SeqTerm> terms;
  std::vector<ReportEntry> reports;

  friend bool operator==(const Document&, const Document&) = default;
};

nlohmann::ordered_json to_json(const Document& doc);
// Throws ParseError on schema violations.
Document document_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const SeqTerm& t);
nlohmann::ordered_json to_json(const IdentityReport& r);
nlohmann::ordered_json to_json(const MatchReport& r);
SeqTerm seq_term_from_json(const nlohmann::json& j);
IdentityReport identity_report_from_json(const nlohmann::json& j);
MatchReport match_report_from_json(const nlohmann::json& j);

// Header row then one row per item; the header depends on the command
// ("n,fib,lucas" for term listings).
std::string to_csv(const Document& doc);

}  // namespace quadfib
