#include "quadfib/genfun.hpp"

#include <algorithm>

#include "quadfib/errors.hpp"

namespace quadfib {

namespace {

Integer pow10(unsigned k) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
  return r;
}

Integer floor_div(const Integer& num, const Integer& den) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

void check_digits(unsigned digits) {
  if (digits < 1 || digits > 10000) {
    throw Error(ErrorCode::InvalidArgument, "digits must be in [1, 10000]");
  }
}

// floor(y * sqrt(t)) for integers y and t >= 0.
Integer floor_scaled_root(const Integer& y, const Integer& t) {
  const Integer radicand = y * y * t;
  const Integer s = isqrt(radicand);
  if (y >= 0) return s;
  return s * s == radicand ? Integer(-s) : Integer(-s - 1);
}

constexpr unsigned kRadiusDigits = 50;

}  // namespace

Rational FixedPointDecimal::to_rational() const { return Rational(scaled, pow10(digits)); }

Rational FixedPointDecimal::lower() const { return to_rational(); }

Rational FixedPointDecimal::upper() const {
  return Rational(scaled + error_ulps, pow10(digits));
}

std::string FixedPointDecimal::to_string() const {
  Integer mag = scaled < 0 ? Integer(-scaled) : scaled;
  std::string s = mag.get_str(10);
  if (s.size() <= digits) s.insert(0, digits - s.size() + 1, '0');
  s.insert(s.size() - digits, ".");
  return (scaled < 0 ? "-" : "") + s;
}

bool approx_equal(const FixedPointDecimal& x, const FixedPointDecimal& y) {
  const unsigned digits = std::min(x.digits, y.digits);
  Rational diff = x.to_rational() - y.to_rational();
  if (diff < 0) diff = -diff;
  const Rational tol = digits >= 2 ? Rational(1, pow10(digits - 2)) : Rational(pow10(2 - digits));
  return diff <= tol;
}

bool certainly_less(const FixedPointDecimal& x, const FixedPointDecimal& y) {
  return x.upper() < y.lower();
}

FixedPointDecimal approx_sqrt(std::int64_t d, unsigned digits) {
  check_digits(digits);
  if (d < 0) throw Error(ErrorCode::InvalidArgument, "square root of a negative number");
  const Integer scale = pow10(digits);
  return {isqrt(Integer(static_cast<long>(d)) * scale * scale), digits, 1};
}

FixedPointDecimal approx_element(const QuadElement& e, unsigned digits) {
  check_digits(digits);
  Integer den;
  mpz_lcm(den.get_mpz_t(), e.x().get_den_mpz_t(), e.y().get_den_mpz_t());
  const Integer X = Integer(e.x() * den);
  const Integer Y = Integer(e.y() * den);
  const Integer scale = pow10(digits);
  const Integer d = static_cast<long>(e.field().value());
  const Integer root_part = floor_scaled_root(Y * scale, d);
  return {floor_div(X * scale + root_part, den), digits, 1};
}

FixedPointDecimal approx_unit(const SeqContext& ctx, unsigned digits) {
  return approx_element(ctx.unit().element, digits);
}

void check_radius(const SeqContext& ctx, const Rational& x) {
  const QuadElement& u = ctx.unit().element;
  // rho = max(|u|, |conj u|); |u| * |conj u| = 1, so rho >= 1.
  Rational rho_upper = 0;
  for (const QuadElement& v : {u, conj(u)}) {
    const FixedPointDecimal approx = approx_element(sign(v) < 0 ? -v : v, kRadiusDigits);
    rho_upper = std::max(rho_upper, approx.upper());
  }
  const Rational abs_x = x < 0 ? Rational(-x) : x;
  const Rational limit = 1 - Rational(1, pow10(10));
  if (abs_x * rho_upper >= limit) {
    throw Error(ErrorCode::OutsideRadius,
                "|x| = " + quadfib::to_string(abs_x) + " is not inside the radius of convergence");
  }
}

namespace {

Rational nonzero(Rational v, const char* what) {
  if (v == 0) throw Error(ErrorCode::PoleHit, std::string(what) + " vanishes at x");
  return v;
}

}  // namespace

Rational gf_fib_closed(const SeqContext& ctx, const Rational& x) {
  check_radius(ctx, x);
  const Rational D = ctx.delta();
  return 1 / nonzero(D * x * x - 2 * ctx.a() * x + 1, "delta x^2 - 2a x + 1");
}

Rational gf_lucas_closed(const SeqContext& ctx, const Rational& x) {
  check_radius(ctx, x);
  const Rational D = ctx.delta();
  const Rational& a = ctx.a();
  return (a - D * x) / (a * nonzero(D * x * x - 2 * a * x + 1, "delta x^2 - 2a x + 1"));
}

AltGF gf_alt_closed(const SeqContext& ctx, const Rational& x) {
  check_radius(ctx, x);
  const Rational D = ctx.delta();
  const Rational& a = ctx.a();
  const Rational q = nonzero(x * x - 2 * a * x + D, "x^2 - 2a x + delta");
  return {D / q, D * (a - x) / (a * q)};
}

Rational gf_truncated(const GFQuery& q, Series which) {
  if (q.truncation < 1) throw Error(ErrorCode::InvalidArgument, "truncation must be >= 1");
  const auto terms = slice(q.ctx, 1, q.truncation);
  const bool alternating = which == Series::alt_fib || which == Series::alt_lucas;
  const bool use_fib = which == Series::fib || which == Series::alt_fib;
  // Term index j = 0..N-1 carries x^j and coefficient F_{j+1} (or L_{j+1}),
  // times delta^j for the alternate series. Horner from the top.
  const Rational step = alternating ? Rational(q.ctx.delta()) * q.x : q.x;
  Rational acc = 0;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    acc = acc * step + (use_fib ? Rational(it->fib) : it->lucas);
  }
  return acc;
}

FixedPointDecimal ratio_error(const SeqContext& ctx, std::int64_t n, unsigned digits,
                              RatioOf which) {
  if (n < 1) throw Error(ErrorCode::NonPositiveIndex, "ratio needs n >= 1");
  Rational ratio;
  if (which == RatioOf::fib) {
    const Integer fn = fib(ctx, n);
    if (fn == 0) throw Error(ErrorCode::DivisionByZero, "F_n = 0");
    ratio = Rational(fib(ctx, n + 1), fn);
    ratio.canonicalize();
  } else {
    const Rational ln = lucas(ctx, n);
    if (ln == 0) throw Error(ErrorCode::DivisionByZero, "L_n = 0");
    ratio = lucas(ctx, n + 1) / ln;
  }
  const QuadElement& u = ctx.unit().element;
  QuadElement diff(u.field(), ratio - u.x(), -u.y());
  if (sign(diff) < 0) diff = -diff;
  return approx_element(diff, digits);
}

bool characteristic_check(const SeqContext& ctx) {
  const QuadElement& u = ctx.unit().element;
  const QuadElement lhs = u * u - Rational(ctx.two_a()) * u + QuadElement(u.field(), ctx.delta());
  return lhs.is_zero();
}

}  // namespace quadfib
