#include "quadfib/oeis.hpp"

#include <httplib.h>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "quadfib/errors.hpp"

namespace quadfib {

bool is_valid_a_number(std::string_view a) {
  if (a.size() != 7 || a[0] != 'A') return false;
  return std::all_of(a.begin() + 1, a.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

std::string bfile_name(std::string_view a_number) {
  return "b" + std::string(a_number.substr(1)) + ".txt";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

void require_a_number(std::string_view a_number) {
  if (!is_valid_a_number(a_number)) {
    throw Error(ErrorCode::InvalidArgument, "malformed A-number '" + std::string(a_number) + "'");
  }
}

}  // namespace

OeisRef parse_bfile(std::string_view a_number, std::string_view text) {
  require_a_number(a_number);
  OeisRef ref{std::string(a_number), {}, 0};
  std::size_t line_no = 0;
  std::optional<std::int64_t> expected;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    const auto fail = [&](const std::string& why) {
      return Error(ErrorCode::ParseError, a_number.data() + std::string(" line ") +
                                              std::to_string(line_no) + ": " + why);
    };
    const auto gap = line.find_first_of(" \t");
    if (gap == std::string_view::npos) throw fail("expected 'n a(n)', got '" + std::string(line) + "'");
    const std::string_view index_text = line.substr(0, gap);
    const std::string_view value_text = trim(line.substr(gap));
    if (value_text.find_first_of(" \t") != std::string_view::npos) throw fail("trailing fields");
    Integer index;
    Integer value;
    try {
      index = parse_integer(index_text);
      value = parse_integer(value_text);
    } catch (const Error&) {
      throw fail("non-numeric field in '" + std::string(line) + "'");
    }
    if (!index.fits_slong_p()) throw fail("index out of range");
    const std::int64_t n = index.get_si();
    if (!expected) {
      ref.offset = n;
    } else if (n != *expected) {
      throw fail("index " + std::to_string(n) + " where " + std::to_string(*expected) +
                 " was expected");
    }
    expected = n + 1;
    ref.terms.push_back(std::move(value));
  }
  if (ref.terms.empty()) throw Error(ErrorCode::ParseError, std::string(a_number) + ": no terms");
  return ref;
}

std::filesystem::path resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv("QUADFIB_CACHE_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return ".oeis-cache";
}

namespace {

std::optional<std::string> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::IoError, "cannot read " + path.string());
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create " + path.parent_path().string());
  const auto tmp = path.string() + ".part";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << bytes;
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + tmp);
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot move " + tmp + " into place");
}

// Live requests are spaced at least min_interval apart, process-wide.
void throttle(std::chrono::milliseconds min_interval) {
  static std::mutex mutex;
  static std::optional<std::chrono::steady_clock::time_point> last;
  std::lock_guard lock(mutex);
  if (last) {
    const auto ready = *last + min_interval;
    const auto now = std::chrono::steady_clock::now();
    if (now < ready) std::this_thread::sleep_for(ready - now);
  }
  last = std::chrono::steady_clock::now();
}

std::string download(std::string_view a_number, const OeisClientOptions& options) {
  const std::string path = "/" + std::string(a_number) + "/" + bfile_name(a_number);
  std::string last_error = "no attempt";
  for (int attempt = 0; attempt <= options.retries; ++attempt) {
    throttle(options.min_interval);
    httplib::Client client(options.base_url);
    client.set_connection_timeout(options.timeout);
    client.set_read_timeout(options.timeout);
    client.set_follow_location(true);
    auto res = client.Get(path);
    if (!res) {
      last_error = httplib::to_string(res.error());
      continue;
    }
    if (res->status == 200) return res->body;
    last_error = "HTTP " + std::to_string(res->status);
    if (res->status == 404) break;
  }
  throw Error(ErrorCode::NetworkError,
              "fetching " + options.base_url + path + " failed: " + last_error);
}

}  // namespace

OeisRef oeis_fetch(std::string_view a_number, const OeisClientOptions& options) {
  require_a_number(a_number);
  const auto cached = options.cache_dir / bfile_name(a_number);
  if (auto bytes = read_file(cached)) return parse_bfile(a_number, *bytes);
  if (options.offline) {
    throw Error(ErrorCode::CacheMiss, std::string(a_number) + " not in " + options.cache_dir.string());
  }
  const std::string bytes = download(a_number, options);
  OeisRef ref = parse_bfile(a_number, bytes);
  write_file(cached, bytes);
  return ref;
}

OeisRef oeis_fetch(std::string_view a_number, const std::filesystem::path& cache_dir,
                   bool offline) {
  OeisClientOptions options;
  options.cache_dir = cache_dir;
  options.offline = offline;
  return oeis_fetch(a_number, options);
}

std::string_view to_string(SeqKind kind) { return kind == SeqKind::fib ? "fib" : "lucas"; }

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::match: return "match";
    case Verdict::mismatch: return "mismatch";
    case Verdict::insufficient_data: return "insufficient_data";
  }
  return "?";
}

SeqKind parse_seq_kind(std::string_view text) {
  if (text == "fib") return SeqKind::fib;
  if (text == "lucas") return SeqKind::lucas;
  throw Error(ErrorCode::ParseError, "expected fib or lucas, got '" + std::string(text) + "'");
}

Verdict parse_verdict(std::string_view text) {
  for (Verdict v : {Verdict::match, Verdict::mismatch, Verdict::insufficient_data}) {
    if (to_string(v) == text) return v;
  }
  throw Error(ErrorCode::ParseError, "unknown verdict '" + std::string(text) + "'");
}

MatchReport oeis_match(const SeqContext& ctx, SeqKind which, const OeisRef& ref,
                       std::int64_t max_shift) {
  MatchReport best{ctx.field(), which, ref.a_number, 0, 1, 0, Verdict::insufficient_data};
  if (ref.terms.size() < kMinMatchedTerms) return best;

  // Enough of our terms to cover every reference term under any shift.
  const std::int64_t last_index = ref.offset + static_cast<std::int64_t>(ref.terms.size()) - 1;
  const std::int64_t count = std::max<std::int64_t>(1, last_index + max_shift);
  const auto ours = slice(ctx, 1, count);

  const Rational& coord = which == SeqKind::fib ? ctx.b() : ctx.a();
  Integer coord_num = coord.get_num();
  if (coord_num < 0) coord_num = -coord_num;
  std::vector<Integer> scales{1};
  if (coord_num != 1) scales.push_back(coord_num);

  bool have_clean = false;
  for (const Integer& scale : scales) {
    for (std::int64_t shift = -max_shift; shift <= max_shift; ++shift) {
      std::size_t agreed = 0;
      bool clean = true;
      for (const SeqTerm& t : ours) {
        const std::int64_t pos = t.n + shift - ref.offset;
        if (pos < 0) continue;
        if (pos >= static_cast<std::int64_t>(ref.terms.size())) break;
        const Rational value =
            which == SeqKind::fib ? Rational(t.fib * scale) : Rational(scale) * t.lucas;
        if (value != Rational(ref.terms[static_cast<std::size_t>(pos)])) {
          clean = false;
          break;
        }
        ++agreed;
      }
      // Prefer clean alignments, then longer runs; ties keep the earlier
      // (smaller |shift| is not implied by order, so compare it explicitly).
      const bool better =
          (clean && !have_clean) ||
          (clean == have_clean &&
           (agreed > best.matched_terms ||
            (agreed == best.matched_terms && std::llabs(shift) < std::llabs(best.shift))));
      if (better) {
        have_clean = clean;
        best.shift = shift;
        best.scale = scale;
        best.matched_terms = agreed;
      }
    }
  }
  if (have_clean && best.matched_terms >= kMinMatchedTerms) {
    best.verdict = Verdict::match;
  } else if (have_clean) {
    best.verdict = Verdict::insufficient_data;
  } else {
    best.verdict = Verdict::mismatch;
  }
  return best;
}

const std::vector<OeisCitation>& known_citations() {
  static const std::vector<OeisCitation> table = {
      {2, "A000129", "A001333"},  {3, "A001353", "A001075"},  {5, "A000045", "A000032"},
      {6, "A004189", "A001079"},  {7, "A077412", "A001081"},  {10, "A005668", "A005667"},
      {11, "A075843", "A001085"}, {13, "A006190", "A006497"}, {37, "A041061", std::nullopt},
      {42, "A097309", std::nullopt},
  };
  return table;
}

std::optional<OeisCitation> citation_for(std::int64_t d) {
  for (const auto& c : known_citations()) {
    if (c.d == d) return c;
  }
  return std::nullopt;
}

}  // namespace quadfib
