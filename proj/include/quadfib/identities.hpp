#pragma once

// Catalog of closed-form identities satisfied by the Fibonacci and Lucas
// sequences of degree d, evaluated exactly over index ranges.

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "quadfib/sequences.hpp"

namespace quadfib {

enum class IdentityId {
  T7_i,        // F_{n+1} = a (L_n + F_n)
  T7_ii,       // L_{n+1} = a L_n + (b^2 d / a) F_n
  T7_iii,      // F_n = (a / delta) (F_{n+1} - L_{n+1})
  T7_iv,       // L_n = (1 / delta) (a L_{n+1} - (b^2 d / a) F_{n+1})
  T7_v,        // F_{n+1} - a^n F_1 = sum_{t<n} a^{t+1} L_{n-t}           (n >= 1)
  T7_vi,       // L_{n+1} - a^n L_1 = b^2 d sum_{t<n} a^{t-1} F_{n-t}     (n >= 1)
  T7_vii,      // F_{m+n} = a (F_m L_n + F_n L_m)
  T7_viii,     // L_{m+n} = (b^2 d / a) F_m F_n + a L_m L_n
  T7_ix,       // b^2 d F_n^2 - a^2 L_n^2 = -delta^n
  T8,          // F_{n+2} = -delta F_n + 2a F_{n+1}
  T13,         // L_{n+2} = -delta L_n + 2a L_{n+1}
  T21,         // u^n = F_n u - F_{n-1} delta, as field elements
  T25_i,       // F_n^2 - F_{n+m} F_{n-m} = delta^{n-m} F_m^2
  T25_ii,      // F_n^2 - F_{n-1} F_{n+1} = delta^{n-1}
  T25_iii,     // L_n^2 - L_{n+r} L_{n-r} = delta^n / (2a^2) - (delta^{n-r} / 2a) L_{2r}
  T25_iv,      // F_m F_{n+1} - F_n F_{m+1} = delta^n F_{m-n}
  T25_v,       // F_{m-1} F_n + F_m F_{n+1} = F_{m+n}                            (delta = -1)
               //                           = a/(2 b^2 d) (2a L_{m+n} - L_{m-n-1}) (delta = +1)
  T25_vi,      // L_n L_{n+r} = L_{2n+r} / (2a) + (delta^n / 2a) L_r
  C17_i,       // L_{2k-1} is an integer                                      (k >= 1)
  C17_ii_iii,  // a0 L_{2k} is an integer coprime to a0, a = a0 or a0/2       (k >= 1)
  T26,         // F_{1/u, n} = F_{-n} (delta = -1), = F_n (delta = +1)
};

inline constexpr std::array<IdentityId, 21> kAllIdentities = {
    IdentityId::T7_i,   IdentityId::T7_ii,   IdentityId::T7_iii,    IdentityId::T7_iv,
    IdentityId::T7_v,   IdentityId::T7_vi,   IdentityId::T7_vii,    IdentityId::T7_viii,
    IdentityId::T7_ix,  IdentityId::T8,      IdentityId::T13,       IdentityId::T21,
    IdentityId::T25_i,  IdentityId::T25_ii,  IdentityId::T25_iii,   IdentityId::T25_iv,
    IdentityId::T25_v,  IdentityId::T25_vi,  IdentityId::C17_i,     IdentityId::C17_ii_iii,
    IdentityId::T26,
};

std::string_view tag(IdentityId id);
// Throws UnknownIdentity.
IdentityId parse_identity(std::string_view tag);
// 1 or 2 free index variables.
int arity(IdentityId id);

struct IndexRange {
  std::int64_t from;
  std::int64_t to;

  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

using IdentityValue = std::variant<Rational, QuadElement>;

struct Counterexample {
  std::vector<std::int64_t> indices;  // (n) or (n, m)
  IdentityValue lhs;
  IdentityValue rhs;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct IdentityReport {
  IdentityId identity;
  SquarefreeD d;
  int delta;
  IndexRange range;  // applies to every free variable
  bool passed;
  std::size_t checked;
  // Index tuples outside the identity's domain (e.g. n < 1 for a finite sum).
  std::size_t skipped;
  std::vector<Counterexample> counterexamples;

  friend bool operator==(const IdentityReport&, const IdentityReport&) = default;
};

// Throws InvalidRange when range.from > range.to.
IdentityReport verify(const SeqContext& ctx, IdentityId id, IndexRange range);

// Whole catalog in kAllIdentities order.
std::vector<IdentityReport> verify_all(const SeqContext& ctx, IndexRange range);

// Fundamental-unit contexts for each d, verified on up to `threads` workers.
// Reports come back sorted by catalog tag, then d.
std::vector<IdentityReport> verify_fields(std::span<const SquarefreeD> fields,
                                          std::span<const IdentityId> ids, IndexRange range,
                                          unsigned threads = 0);

}  // namespace quadfib
