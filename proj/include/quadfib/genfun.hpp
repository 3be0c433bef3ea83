#pragma once

// Generating functions of the degree-d sequences, their radius of
// convergence, the characteristic (golden ratio) equation, and numeric
// convergence of consecutive-term ratios.

#include <cstdint>
#include <string>

#include "quadfib/sequences.hpp"

namespace quadfib {

// value = scaled / 10^digits, known to within error_ulps units of the last
// place.
struct FixedPointDecimal {
  Integer scaled;
  unsigned digits = 0;
  unsigned error_ulps = 0;

  Rational to_rational() const;
  // Guaranteed bounds on the true value.
  Rational lower() const;
  Rational upper() const;
  // Truncated decimal expansion, e.g. "1.41421".
  std::string to_string() const;
};

// Equal within 10^(-digits + 2), the tolerance at which fixed-point values
// of this type are compared.
bool approx_equal(const FixedPointDecimal& x, const FixedPointDecimal& y);
// Certainly x < y, error bounds included.
bool certainly_less(const FixedPointDecimal& x, const FixedPointDecimal& y);

// floor(sqrt(d) * 10^digits) / 10^digits, exact to the last digit (error 1 ulp).
// d need not be squarefree. digits must lie in [1, 10000].
FixedPointDecimal approx_sqrt(std::int64_t d, unsigned digits);
// a + b sqrt(d) for the context unit.
FixedPointDecimal approx_unit(const SeqContext& ctx, unsigned digits);
// Any element x + y sqrt(d).
FixedPointDecimal approx_element(const QuadElement& e, unsigned digits);

// f(x) = sum F_n x^{n-1} and g(x) = sum L_n x^{n-1}, n >= 1.
// x must satisfy |x| * rho < 1 - 1e-10, rho the larger of |u| and |conj u|
// (OutsideRadius), and the denominator must not vanish (PoleHit).
Rational gf_fib_closed(const SeqContext& ctx, const Rational& x);
Rational gf_lucas_closed(const SeqContext& ctx, const Rational& x);

struct AltGF {
  Rational f1;  // sum delta^n F_{n+1} x^n
  Rational g1;  // sum delta^n L_{n+1} x^n

  friend bool operator==(const AltGF&, const AltGF&) = default;
};
AltGF gf_alt_closed(const SeqContext& ctx, const Rational& x);

enum class Series { fib, lucas, alt_fib, alt_lucas };

struct GFQuery {
  const SeqContext& ctx;
  Rational x;
  std::int64_t truncation;  // number of terms, >= 1
};

// Exact partial sum of the first `truncation` terms. No radius check.
Rational gf_truncated(const GFQuery& q, Series which);

// Throws OutsideRadius unless |x| * rho <= 1 - 1e-10 by a 50-digit check.
void check_radius(const SeqContext& ctx, const Rational& x);

enum class RatioOf { fib, lucas };

// |F_{n+1}/F_n - u| (or the Lucas ratio) to `digits` decimal places.
// Requires n >= 1.
FixedPointDecimal ratio_error(const SeqContext& ctx, std::int64_t n, unsigned digits,
                              RatioOf which = RatioOf::fib);

// u^2 - 2a u + delta == 0 exactly.
bool characteristic_check(const SeqContext& ctx);

}  // namespace quadfib
