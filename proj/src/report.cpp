#include "quadfib/report.hpp"

#include <sstream>

#include "quadfib/errors.hpp"

namespace quadfib {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json element_json(const QuadElement& e) {
  return {{"x", to_string(e.x())}, {"y", to_string(e.y())}};
}

QuadElement element_from_json(const json& j, SquarefreeD d) {
  return {d, parse_rational(j.at("x").get<std::string>()),
          parse_rational(j.at("y").get<std::string>())};
}

ordered_json value_json(const IdentityValue& v) {
  if (const auto* q = std::get_if<Rational>(&v)) return to_string(*q);
  return element_json(std::get<QuadElement>(v));
}

IdentityValue value_from_json(const json& j, SquarefreeD d) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  return element_from_json(j, d);
}

SquarefreeD field_from_json(const json& j) { return validate_d(j.get<std::int64_t>()); }

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("report JSON: ") + e.what());
  }
}

ordered_json gf_json(const GFRow& row) {
  return {{"kind", "gf"},
          {"series", row.series},
          {"x", to_string(row.x)},
          {"terms", row.truncation},
          {"closed", to_string(row.closed)},
          {"truncated", to_string(row.truncated)},
          {"abs_diff", row.abs_diff}};
}

GFRow gf_from_json(const json& j) {
  return {j.at("series").get<std::string>(),
          parse_rational(j.at("x").get<std::string>()),
          j.at("terms").get<std::int64_t>(),
          parse_rational(j.at("closed").get<std::string>()),
          parse_rational(j.at("truncated").get<std::string>()),
          j.at("abs_diff").get<std::string>()};
}

}  // namespace

ordered_json to_json(const SeqTerm& t) {
  return {{"n", t.n}, {"fib", to_string(t.fib)}, {"lucas", to_string(t.lucas)}};
}

SeqTerm seq_term_from_json(const json& j) {
  return guarded([&] {
    return SeqTerm{j.at("n").get<std::int64_t>(), parse_integer(j.at("fib").get<std::string>()),
                   parse_rational(j.at("lucas").get<std::string>())};
  });
}

ordered_json to_json(const IdentityReport& r) {
  ordered_json cex = ordered_json::array();
  for (const auto& c : r.counterexamples) {
    cex.push_back({{"indices", c.indices}, {"lhs", value_json(c.lhs)}, {"rhs", value_json(c.rhs)}});
  }
  return {{"kind", "identity"},
          {"identity", tag(r.identity)},
          {"d", r.d.value()},
          {"delta", r.delta},
          {"range", {{"from", r.range.from}, {"to", r.range.to}}},
          {"passed", r.passed},
          {"checked", r.checked},
          {"skipped", r.skipped},
          {"counterexamples", std::move(cex)}};
}

IdentityReport identity_report_from_json(const json& j) {
  return guarded([&] {
    const SquarefreeD d = field_from_json(j.at("d"));
    IdentityReport r{parse_identity(j.at("identity").get<std::string>()),
                     d,
                     j.at("delta").get<int>(),
                     {j.at("range").at("from").get<std::int64_t>(),
                      j.at("range").at("to").get<std::int64_t>()},
                     j.at("passed").get<bool>(),
                     j.at("checked").get<std::size_t>(),
                     j.at("skipped").get<std::size_t>(),
                     {}};
    for (const auto& c : j.at("counterexamples")) {
      r.counterexamples.push_back({c.at("indices").get<std::vector<std::int64_t>>(),
                                   value_from_json(c.at("lhs"), d),
                                   value_from_json(c.at("rhs"), d)});
    }
    return r;
  });
}

ordered_json to_json(const MatchReport& r) {
  return {{"kind", "oeis"},
          {"d", r.d.value()},
          {"which", to_string(r.which)},
          {"a_number", r.a_number},
          {"shift", r.shift},
          {"scale", to_string(r.scale)},
          {"matched_terms", r.matched_terms},
          {"verdict", to_string(r.verdict)}};
}

MatchReport match_report_from_json(const json& j) {
  return guarded([&] {
    return MatchReport{field_from_json(j.at("d")),
                       parse_seq_kind(j.at("which").get<std::string>()),
                       j.at("a_number").get<std::string>(),
                       j.at("shift").get<std::int64_t>(),
                       parse_integer(j.at("scale").get<std::string>()),
                       j.at("matched_terms").get<std::size_t>(),
                       parse_verdict(j.at("verdict").get<std::string>())};
  });
}

ordered_json to_json(const Document& doc) {
  ordered_json j;
  j["command"] = doc.command;
  if (doc.d) j["d"] = doc.d->value();
  if (doc.unit) j["unit"] = element_json(*doc.unit);
  if (doc.delta) j["delta"] = *doc.delta;
  if (doc.discriminant) j["discriminant"] = *doc.discriminant;
  j["terms"] = ordered_json::array();
  for (const auto& t : doc.terms) j["terms"].push_back(to_json(t));
  j["reports"] = ordered_json::array();
  for (const auto& entry : doc.reports) {
    std::visit(
        [&](const auto& r) {
          using T = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<T, GFRow>) {
            j["reports"].push_back(gf_json(r));
          } else if constexpr (std::is_same_v<T, KFibInfo>) {
            j["reports"].push_back({{"kind", "kfib"}, {"k", r.k}, {"r", r.r}});
          } else {
            j["reports"].push_back(to_json(r));
          }
        },
        entry);
  }
  return j;
}

Document document_from_json(const json& j) {
  return guarded([&] {
    Document doc;
    doc.command = j.at("command").get<std::string>();
    if (j.contains("d")) doc.d = field_from_json(j.at("d"));
    if (j.contains("unit")) {
      if (!doc.d) throw Error(ErrorCode::ParseError, "report JSON: unit without d");
      doc.unit = element_from_json(j.at("unit"), *doc.d);
    }
    if (j.contains("delta")) doc.delta = j.at("delta").get<int>();
    if (j.contains("discriminant")) doc.discriminant = j.at("discriminant").get<std::int64_t>();
    for (const auto& t : j.at("terms")) doc.terms.push_back(seq_term_from_json(t));
    for (const auto& r : j.at("reports")) {
      const auto kind = r.at("kind").get<std::string>();
      if (kind == "identity") {
        doc.reports.emplace_back(identity_report_from_json(r));
      } else if (kind == "oeis") {
        doc.reports.emplace_back(match_report_from_json(r));
      } else if (kind == "gf") {
        doc.reports.emplace_back(gf_from_json(r));
      } else if (kind == "kfib") {
        doc.reports.emplace_back(KFibInfo{r.at("k").get<std::int64_t>(), r.at("r").get<std::int64_t>()});
      } else {
        throw Error(ErrorCode::ParseError, "report JSON: unknown kind '" + kind + "'");
      }
    }
    return doc;
  });
}

std::string to_csv(const Document& doc) {
  std::ostringstream out;
  if (doc.command == "unit") {
    out << "d,discriminant,x,y,delta\n";
    if (doc.d && doc.unit && doc.delta && doc.discriminant) {
      out << doc.d->value() << ',' << *doc.discriminant << ',' << to_string(doc.unit->x()) << ','
          << to_string(doc.unit->y()) << ',' << *doc.delta << '\n';
    }
    return out.str();
  }
  if (!doc.terms.empty() || doc.reports.empty()) {
    out << "n,fib,lucas\n";
    for (const auto& t : doc.terms) {
      out << t.n << ',' << to_string(t.fib) << ',' << to_string(t.lucas) << '\n';
    }
    return out.str();
  }
  std::visit(
      [&](const auto& first) {
        using T = std::decay_t<decltype(first)>;
        if constexpr (std::is_same_v<T, IdentityReport>) {
          out << "identity,d,delta,from,to,passed,checked,skipped,counterexamples\n";
        } else if constexpr (std::is_same_v<T, MatchReport>) {
          out << "d,which,a_number,shift,scale,matched_terms,verdict\n";
        } else if constexpr (std::is_same_v<T, GFRow>) {
          out << "series,x,terms,closed,truncated,abs_diff\n";
        } else {
          out << "k,r\n";
        }
      },
      doc.reports.front());
  for (const auto& entry : doc.reports) {
    std::visit(
        [&](const auto& r) {
          using T = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<T, IdentityReport>) {
            out << tag(r.identity) << ',' << r.d.value() << ',' << r.delta << ',' << r.range.from
                << ',' << r.range.to << ',' << (r.passed ? "true" : "false") << ',' << r.checked
                << ',' << r.skipped << ',' << r.counterexamples.size() << '\n';
          } else if constexpr (std::is_same_v<T, MatchReport>) {
            out << r.d.value() << ',' << to_string(r.which) << ',' << r.a_number << ',' << r.shift
                << ',' << to_string(r.scale) << ',' << r.matched_terms << ','
                << to_string(r.verdict) << '\n';
          } else if constexpr (std::is_same_v<T, GFRow>) {
            out << r.series << ',' << to_string(r.x) << ',' << r.truncation << ','
                << to_string(r.closed) << ',' << to_string(r.truncated) << ',' << r.abs_diff
                << '\n';
          } else {
            out << r.k << ',' << r.r << '\n';
          }
        },
        entry);
  }
  return out.str();
}

}  // namespace quadfib
