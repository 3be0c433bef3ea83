#include "quadfib/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "quadfib/errors.hpp"
#include "quadfib/genfun.hpp"
#include "quadfib/report.hpp"

namespace quadfib {

namespace {

enum class Format { plain, json, csv };

struct GlobalFlags {
  std::string format = "plain";
  std::string out_file;
  std::string cache_dir;
};

struct SeqArgs {
  std::int64_t d = 0;
  std::int64_t from = 1;
  std::int64_t to = 10;
  std::int64_t unit_power = 1;
  std::string unit_sign = "+";
};

struct Args {
  GlobalFlags global;
  SeqArgs seq;
  std::int64_t d = 0;
  std::int64_t k = 0;
  std::int64_t kfib_terms = 10;
  std::string identity = "all";
  std::string range = "-20..20";
  std::string x;
  std::int64_t gf_terms = 50;
  std::string a_number;
  std::string which;
  bool offline = false;
};

// Value-taking options are rewritten to --opt=value so that values such as
// "-20..20" or "-3" are never mistaken for flags.
std::vector<std::string> normalize(const std::vector<std::string>& args) {
  static const std::vector<std::string> valued = {
      "--from", "--to", "--unit-power", "--unit-sign", "--range", "--x", "--terms",
      "--identity", "--a", "--which", "--format", "--out", "--cache-dir"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const auto& a = args[i];
    const bool takes_value = std::find(valued.begin(), valued.end(), a) != valued.end();
    if (takes_value && i + 1 < args.size()) {
      out.push_back(a + "=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(a);
    }
  }
  return out;
}

IndexRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    throw Error(ErrorCode::InvalidArgument, "range must look like A..B, got '" + text + "'");
  }
  const Integer from = parse_integer(text.substr(0, dots));
  const Integer to = parse_integer(text.substr(dots + 2));
  if (!from.fits_slong_p() || !to.fits_slong_p()) {
    throw Error(ErrorCode::InvalidArgument, "range bounds out of range");
  }
  return {from.get_si(), to.get_si()};
}

std::string join_terms(const std::vector<SeqTerm>& terms, bool lucas_values) {
  std::string line;
  for (const auto& t : terms) {
    if (!line.empty()) line += ' ';
    line += lucas_values ? to_string(t.lucas) : to_string(t.fib);
  }
  return line;
}

std::string fixed(const Rational& value, unsigned digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  Integer scaled;
  const Integer num = value.get_num() * scale;
  mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), value.get_den_mpz_t());
  return FixedPointDecimal{scaled, digits, 1}.to_string();
}

Document base_document(const std::string& command, const SeqContext& ctx) {
  Document doc;
  doc.command = command;
  doc.d = ctx.field();
  doc.unit = ctx.unit().element;
  doc.delta = ctx.delta();
  return doc;
}

class Runner {
 public:
  Runner(const Args& args, std::ostream& out) : args_(args), out_(out) {}

  int unit() {
    const SquarefreeD d = validate_d(args_.d);
    const SeqContext ctx = context(d);
    Document doc = base_document("unit", ctx);
    doc.discriminant = d.discriminant();
    std::ostringstream plain;
    plain << "d=" << d.value() << " unit=" << to_string(ctx.unit().element)
          << " norm=" << ctx.delta() << " discriminant=" << d.discriminant() << '\n';
    return emit(doc, plain.str(), kExitOk);
  }

  int sequence(bool lucas_values) {
    const SquarefreeD d = validate_d(args_.seq.d);
    int sign = 1;
    if (args_.seq.unit_sign == "-") {
      sign = -1;
    } else if (args_.seq.unit_sign != "+") {
      throw Error(ErrorCode::InvalidArgument, "--unit-sign must be + or -");
    }
    const bool fundamental = sign == 1 && args_.seq.unit_power == 1;
    const SeqContext ctx =
        fundamental ? context(d) : context_with_unit(d, sign, args_.seq.unit_power);
    Document doc = base_document(lucas_values ? "lucas" : "fib", ctx);
    doc.terms = slice(ctx, args_.seq.from, args_.seq.to);
    return emit(doc, join_terms(doc.terms, lucas_values) + '\n', kExitOk);
  }

  int kfib() {
    const KFibMapping m = kfib_map(args_.k);
    const SeqContext ctx(m.unit);
    Document doc = base_document("kfib", ctx);
    doc.terms = slice(ctx, 1, std::max<std::int64_t>(1, args_.kfib_terms));
    doc.reports.emplace_back(KFibInfo{m.k, m.r});
    std::ostringstream plain;
    plain << "d=" << m.d.value() << " r=" << m.r << " unit=" << to_string(m.unit.element)
          << " norm=" << m.unit.delta << '\n'
          << join_terms(doc.terms, false) << '\n';
    return emit(doc, plain.str(), kExitOk);
  }

  int verify() {
    const SquarefreeD d = validate_d(args_.d);
    const SeqContext ctx = context(d);
    const IndexRange range = parse_range(args_.range);
    std::vector<IdentityReport> reports;
    if (args_.identity == "all") {
      reports = verify_all(ctx, range);
    } else {
      reports.push_back(quadfib::verify(ctx, parse_identity(args_.identity), range));
    }
    Document doc = base_document("verify", ctx);
    bool all_passed = true;
    std::ostringstream plain;
    for (auto& r : reports) {
      all_passed = all_passed && r.passed;
      plain << tag(r.identity) << " d=" << d.value() << " range=" << range.from << ".."
            << range.to << " checked=" << r.checked << " skipped=" << r.skipped << ' '
            << (r.passed ? "PASS" : "FAIL") << '\n';
      constexpr std::size_t kShown = 3;
      for (std::size_t i = 0; i < r.counterexamples.size() && i < kShown; ++i) {
        const auto& c = r.counterexamples[i];
        plain << "  at";
        for (auto idx : c.indices) plain << ' ' << idx;
        plain << ": lhs=" << value_text(c.lhs) << " rhs=" << value_text(c.rhs) << '\n';
      }
      if (r.counterexamples.size() > kShown) {
        plain << "  ... " << r.counterexamples.size() - kShown << " more\n";
      }
      doc.reports.emplace_back(std::move(r));
    }
    return emit(doc, plain.str(), all_passed ? kExitOk : kExitMismatch);
  }

  int gf() {
    const SquarefreeD d = validate_d(args_.d);
    const SeqContext ctx = context(d);
    const Rational x = parse_rational(args_.x);
    const auto n = args_.gf_terms;
    const AltGF alt = gf_alt_closed(ctx, x);
    const std::vector<std::pair<std::string, std::pair<Rational, Series>>> rows = {
        {"f", {gf_fib_closed(ctx, x), Series::fib}},
        {"g", {gf_lucas_closed(ctx, x), Series::lucas}},
        {"f1", {alt.f1, Series::alt_fib}},
        {"g1", {alt.g1, Series::alt_lucas}},
    };
    Document doc = base_document("gf", ctx);
    std::ostringstream plain;
    constexpr unsigned kDigits = 30;
    for (const auto& [name, entry] : rows) {
      const Rational truncated = gf_truncated({ctx, x, n}, entry.second);
      Rational diff = truncated - entry.first;
      if (diff < 0) diff = -diff;
      GFRow row{name, x, n, entry.first, truncated, fixed(diff, kDigits)};
      plain << name << " closed=" << to_string(row.closed)
            << " truncated~" << fixed(truncated, kDigits) << " |diff|~" << row.abs_diff << '\n';
      doc.reports.emplace_back(std::move(row));
    }
    return emit(doc, plain.str(), kExitOk);
  }

  int oeis_check() {
    const SquarefreeD d = validate_d(args_.d);
    const SeqContext ctx = context(d);
    OeisClientOptions options;
    options.cache_dir = resolve_cache_dir(
        args_.global.cache_dir.empty() ? std::nullopt : std::optional(args_.global.cache_dir));
    options.offline = args_.offline;

    std::vector<std::pair<SeqKind, std::string>> checks;
    if (!args_.a_number.empty()) {
      const SeqKind kind = args_.which.empty() ? SeqKind::fib : parse_seq_kind(args_.which);
      checks.emplace_back(kind, args_.a_number);
    } else {
      const auto cited = citation_for(d.value());
      if (!cited) {
        throw Error(ErrorCode::InvalidArgument,
                    "no A-number on record for d=" + std::to_string(d.value()) + "; pass --a");
      }
      const bool want_fib = args_.which.empty() || args_.which == "fib";
      const bool want_lucas = args_.which.empty() || args_.which == "lucas";
      if (!args_.which.empty()) parse_seq_kind(args_.which);
      if (want_fib && cited->fib) checks.emplace_back(SeqKind::fib, *cited->fib);
      if (want_lucas && cited->lucas) checks.emplace_back(SeqKind::lucas, *cited->lucas);
      if (checks.empty()) {
        throw Error(ErrorCode::InvalidArgument, "no A-number on record for that sequence; pass --a");
      }
    }

    Document doc = base_document("oeis-check", ctx);
    std::ostringstream plain;
    bool all_match = true;
    for (const auto& [kind, a_number] : checks) {
      const OeisRef ref = oeis_fetch(a_number, options);
      MatchReport r = oeis_match(ctx, kind, ref);
      all_match = all_match && r.verdict == Verdict::match;
      plain << "d=" << d.value() << ' ' << to_string(kind) << ' ' << a_number
            << " shift=" << r.shift << " scale=" << to_string(r.scale)
            << " matched=" << r.matched_terms << ' ' << to_string(r.verdict) << '\n';
      doc.reports.emplace_back(std::move(r));
    }
    return emit(doc, plain.str(), all_match ? kExitOk : kExitMismatch);
  }

 private:
  static std::string value_text(const IdentityValue& v) {
    if (const auto* q = std::get_if<Rational>(&v)) return to_string(*q);
    return to_string(std::get<QuadElement>(v));
  }

  int emit(const Document& doc, const std::string& plain, int code) {
    std::string text;
    if (args_.global.format == "json") {
      text = to_json(doc).dump(2) + '\n';
    } else if (args_.global.format == "csv") {
      text = to_csv(doc);
    } else {
      text = plain;
    }
    if (args_.global.out_file.empty()) {
      out_ << text;
    } else {
      std::ofstream file(args_.global.out_file, std::ios::binary | std::ios::trunc);
      file << text;
      if (!file) throw Error(ErrorCode::IoError, "cannot write " + args_.global.out_file);
    }
    return code;
  }

  const Args& args_;
  std::ostream& out_;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NetworkError:
    case ErrorCode::CacheMiss:
    case ErrorCode::IoError:
    case ErrorCode::ParseError:
      return kExitIo;
    default:
      return kExitUsage;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fibonacci and Lucas sequences of real quadratic fields"};
  app.require_subcommand(1);
  Args args;
  app.add_option("--format", args.global.format, "plain|json|csv")
      ->check(CLI::IsMember({"plain", "json", "csv"}));
  app.add_option("--out", args.global.out_file, "write output to FILE");
  app.add_option("--cache-dir", args.global.cache_dir, "OEIS b-file cache directory");
  app.fallthrough();

  auto* unit = app.add_subcommand("unit", "fundamental unit, norm and discriminant");
  unit->add_option("d", args.d)->required();

  auto add_seq = [&](const std::string& name, const std::string& desc) {
    auto* sub = app.add_subcommand(name, desc);
    sub->add_option("d", args.seq.d)->required();
    sub->add_option("--from", args.seq.from);
    sub->add_option("--to", args.seq.to);
    sub->add_option("--unit-power", args.seq.unit_power, "use sign * eps^L as the unit");
    sub->add_option("--unit-sign", args.seq.unit_sign, "+ or -");
    return sub;
  };
  auto* fib_cmd = add_seq("fib", "Fibonacci terms of degree d");
  auto* lucas_cmd = add_seq("lucas", "Lucas terms of degree d");

  auto* kfib_cmd = app.add_subcommand("kfib", "field and unit of the k-Fibonacci sequence");
  kfib_cmd->add_option("k", args.k)->required();
  kfib_cmd->add_option("--terms", args.kfib_terms);

  auto* verify_cmd = app.add_subcommand("verify", "check identities over an index range");
  verify_cmd->add_option("d", args.d)->required();
  verify_cmd->add_option("--identity", args.identity, "tag or 'all'");
  verify_cmd->add_option("--range", args.range, "A..B");

  auto* gf_cmd = app.add_subcommand("gf", "generating functions: closed form vs partial sums");
  gf_cmd->add_option("d", args.d)->required();
  gf_cmd->add_option("--x", args.x, "P/Q")->required();
  gf_cmd->add_option("--terms", args.gf_terms);

  auto* oeis_cmd = app.add_subcommand("oeis-check", "compare with OEIS b-files");
  oeis_cmd->add_option("d", args.d)->required();
  oeis_cmd->add_option("--a", args.a_number, "A-number, e.g. A000129");
  oeis_cmd->add_option("--which", args.which, "fib|lucas");
  oeis_cmd->add_flag("--offline", args.offline, "never touch the network");

  std::vector<std::string> argv = normalize(raw_args);
  std::reverse(argv.begin(), argv.end());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "quadfib: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    Runner runner(args, out);
    if (*unit) return runner.unit();
    if (*fib_cmd) return runner.sequence(false);
    if (*lucas_cmd) return runner.sequence(true);
    if (*kfib_cmd) return runner.kfib();
    if (*verify_cmd) return runner.verify();
    if (*gf_cmd) return runner.gf();
    if (*oeis_cmd) return runner.oeis_check();
  } catch (const Error& e) {
    err << "quadfib: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "quadfib: internal error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}

int cli_main(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace quadfib
