#pragma once

// OEIS b-file client (cache first, optional network) and sequence matcher.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quadfib/sequences.hpp"

namespace quadfib {

struct OeisRef {
  std::string a_number;  // "A" + 6 digits
  std::vector<Integer> terms;
  std::int64_t offset = 0;  // index of terms[0]

  friend bool operator==(const OeisRef&, const OeisRef&) = default;
};

bool is_valid_a_number(std::string_view a_number);
// "A000129" -> "b000129.txt"
std::string bfile_name(std::string_view a_number);

// "n a(n)" per line, '#' comments and blank lines ignored, indices
// consecutive. Throws ParseError.
OeisRef parse_bfile(std::string_view a_number, std::string_view text);

struct OeisClientOptions {
  std::filesystem::path cache_dir = ".oeis-cache";
  bool offline = false;
  std::string base_url = "https://oeis.org";
  std::chrono::seconds timeout{10};
  int retries = 1;
  std::chrono::milliseconds min_interval{1000};
};

// Flag beats QUADFIB_CACHE_DIR beats "./.oeis-cache".
std::filesystem::path resolve_cache_dir(const std::optional<std::string>& flag);

// Served from the cache when present; otherwise downloaded (unless offline)
// and stored verbatim. Throws CacheMiss, NetworkError, ParseError, IoError,
// InvalidArgument (malformed A-number).
OeisRef oeis_fetch(std::string_view a_number, const OeisClientOptions& options);
OeisRef oeis_fetch(std::string_view a_number, const std::filesystem::path& cache_dir,
                   bool offline);

enum class SeqKind { fib, lucas };
enum class Verdict { match, mismatch, insufficient_data };

std::string_view to_string(SeqKind kind);
std::string_view to_string(Verdict verdict);
SeqKind parse_seq_kind(std::string_view text);
Verdict parse_verdict(std::string_view text);

struct MatchReport {
  SquarefreeD d;
  SeqKind which;
  std::string a_number;
  std::int64_t shift = 0;  // our term n compared with reference index n + shift
  Integer scale = 1;       // integer multiplier applied to our terms
  std::size_t matched_terms = 0;
  Verdict verdict = Verdict::insufficient_data;

  friend bool operator==(const MatchReport&, const MatchReport&) = default;
};

inline constexpr std::size_t kMinMatchedTerms = 8;

// Our terms n = 1, 2, ... are compared with ref terms at index n + shift,
// for every shift in [-max_shift, max_shift] and for the integer forms
// OEIS lists: F_n or num(b) F_n, and L_n or num(a) L_n. A match needs at
// least kMinMatchedTerms agreements and no disagreement.
MatchReport oeis_match(const SeqContext& ctx, SeqKind which, const OeisRef& ref,
                       std::int64_t max_shift = 2);

struct OeisCitation {
  std::int64_t d;
  std::optional<std::string> fib;
  std::optional<std::string> lucas;
};

// A-numbers cited for the sequences of the tabulated fields.
const std::vector<OeisCitation>& known_citations();
std::optional<OeisCitation> citation_for(std::int64_t d);

}  // namespace quadfib
