#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace quadfib {

// GMP keeps mpq_class canonical after every arithmetic operation; the only
// way to obtain a non-canonical value is raw construction, which
// make_rational guards.
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

// "P/Q" or "P" (when Q == 1). Never a decimal.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "P", "-P", "P/Q". Throws Error{ParseError} on malformed input
// and Error{DivisionByZero} on Q == 0.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

bool is_integer(const Rational& q);

// Throws std::logic_error if q is not an integer. For values whose
// integrality is a theorem, so a failure is a bug, never bad input.
Integer to_integer_checked(const Rational& q, std::string_view what);

Integer isqrt(const Integer& n);
bool is_perfect_square(const Integer& n);

Rational pow(const Rational& base, std::int64_t exponent);
Integer binomial(unsigned long n, unsigned long k);

}  // namespace quadfib
