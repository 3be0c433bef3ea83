#include "quadfib/sequences.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "quadfib/errors.hpp"

namespace quadfib {

SeqContext::SeqContext(Unit unit) : unit_(std::move(unit)) {
  if (unit_.element.y() == 0) {
    throw Error(ErrorCode::ZeroIrrationalPart, "unit " + to_string(unit_.element) +
                                                   " has no sqrt(d) part");
  }
  // a = 0 would make L_n = a_n / a undefined; impossible for a unit when d
  // is not a square, checked anyway.
  if (unit_.element.x() == 0) {
    throw Error(ErrorCode::ZeroIrrationalPart, "unit with zero rational part");
  }
  two_a_ = to_integer_checked(2 * a(), "2a");
  two_b_ = to_integer_checked(2 * b(), "2b");
  if (a() * a() - b2d() != unit_.delta) throw std::logic_error("delta != a^2 - b^2 d");
}

Rational SeqContext::b2d() const {
  return b() * b() * Rational(static_cast<long>(field().value()));
}

SeqContext context(SquarefreeD d, const UnitOptions& options) {
  return SeqContext(fundamental_unit(d, options));
}

SeqContext context_with_unit(SquarefreeD d, int sign, std::int64_t exponent,
                             const UnitOptions& options) {
  if (exponent == 0) throw Error(ErrorCode::ZeroIrrationalPart, "±eps^0 = ±1");
  return SeqContext(unit_from_power(d, sign, exponent, options));
}

namespace {

// delta^m for delta = ±1.
int delta_pow(int delta, std::int64_t m) { return (delta == -1 && (m % 2 != 0)) ? -1 : 1; }

std::int64_t checked_abs(std::int64_t n) {
  if (n == std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::InvalidRange, "index out of range");
  }
  return n < 0 ? -n : n;
}

Integer fib_forward(const SeqContext& ctx, std::int64_t n) {
  const Integer minus_delta = -ctx.delta();
  Integer prev = 1;           // F_1
  Integer cur = ctx.two_a();  // F_2
  if (n == 1) return prev;
  for (std::int64_t k = 2; k < n; ++k) {
    Integer next = minus_delta * prev + ctx.two_a() * cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Rational lucas_forward(const SeqContext& ctx, std::int64_t n) {
  const Rational minus_delta = -ctx.delta();
  const Rational two_a = ctx.two_a();
  Rational prev = 1;                                   // L_1
  Rational cur = two_a - Rational(ctx.delta()) / ctx.a();  // L_2
  if (n == 1) return prev;
  for (std::int64_t k = 2; k < n; ++k) {
    Rational next = minus_delta * prev + two_a * cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace

Integer fib(const SeqContext& ctx, std::int64_t n) {
  if (n == 0) return 0;
  if (n > 0) return fib_forward(ctx, n);
  const std::int64_t m = checked_abs(n);
  return -delta_pow(ctx.delta(), m) * fib_forward(ctx, m);
}

Rational lucas(const SeqContext& ctx, std::int64_t n) {
  if (n == 0) return 1 / ctx.a();
  if (n > 0) return lucas_forward(ctx, n);
  const std::int64_t m = checked_abs(n);
  return delta_pow(ctx.delta(), m) * lucas_forward(ctx, m);
}

Integer fib_binet(const SeqContext& ctx, std::int64_t n) {
  const QuadElement p = pow(ctx.unit().element, n);
  return to_integer_checked(p.y() / ctx.b(), "F_" + std::to_string(n));
}

Rational lucas_binet(const SeqContext& ctx, std::int64_t n) {
  const QuadElement p = pow(ctx.unit().element, n);
  return p.x() / ctx.a();
}

namespace {

struct PowerTables {
  std::vector<Rational> a, b, d;
};

PowerTables power_tables(const SeqContext& ctx, std::int64_t n) {
  PowerTables t;
  const Rational d = static_cast<long>(ctx.field().value());
  const auto fill = [n](std::vector<Rational>& v, const Rational& base) {
    v.reserve(static_cast<std::size_t>(n) + 1);
    v.emplace_back(1);
    for (std::int64_t i = 1; i <= n; ++i) v.push_back(v.back() * base);
  };
  fill(t.a, ctx.a());
  fill(t.b, ctx.b());
  fill(t.d, d);
  return t;
}

void require_positive(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::NonPositiveIndex, "binomial sums need n >= 1");
}

}  // namespace

Integer fib_binomial(const SeqContext& ctx, std::int64_t n) {
  require_positive(n);
  const PowerTables p = power_tables(ctx, n);
  const auto un = static_cast<unsigned long>(n);
  const auto at = [](const std::vector<Rational>& v, std::int64_t i) -> const Rational& {
    return v[static_cast<std::size_t>(i)];
  };
  Rational sum = 0;
  if (n % 2 == 0) {
    for (std::int64_t t = 0; t <= (n - 2) / 2; ++t) {
      sum += Rational(binomial(un, 2 * t + 1)) * at(p.a, 2 * t + 1) * at(p.b, n - 2 * t - 2) *
             at(p.d, (n - 2) / 2 - t);
    }
  } else {
    for (std::int64_t t = 0; t <= (n - 1) / 2; ++t) {
      sum += Rational(binomial(un, 2 * t)) * at(p.a, 2 * t) * at(p.b, n - 2 * t - 1) *
             at(p.d, (n - 1) / 2 - t);
    }
  }
  return to_integer_checked(sum, "F_" + std::to_string(n));
}

Rational lucas_binomial(const SeqContext& ctx, std::int64_t n) {
  require_positive(n);
  const PowerTables p = power_tables(ctx, n);
  const auto un = static_cast<unsigned long>(n);
  const auto at = [](const std::vector<Rational>& v, std::int64_t i) -> const Rational& {
    return v[static_cast<std::size_t>(i)];
  };
  Rational sum = 0;
  if (n % 2 == 0) {
    const Rational inv_a = 1 / ctx.a();
    for (std::int64_t t = 0; t <= n / 2; ++t) {
      // a^(2t-1): the t = 0 term carries 1/a.
      const Rational a_pow = t == 0 ? inv_a : Rational(at(p.a, 2 * t - 1));
      sum += Rational(binomial(un, 2 * t)) * a_pow * at(p.b, n - 2 * t) * at(p.d, n / 2 - t);
    }
  } else {
    for (std::int64_t t = 0; t <= (n - 1) / 2; ++t) {
      sum += Rational(binomial(un, 2 * t + 1)) * at(p.a, 2 * t) * at(p.b, n - 2 * t - 1) *
             at(p.d, (n - 1) / 2 - t);
    }
  }
  return sum;
}

std::vector<SeqTerm> slice(const SeqContext& ctx, std::int64_t from, std::int64_t to) {
  if (from > to) {
    throw Error(ErrorCode::InvalidRange,
                "empty range " + std::to_string(from) + ".." + std::to_string(to));
  }
  const std::int64_t lo = std::min<std::int64_t>(from, 0);
  const std::int64_t hi = std::max<std::int64_t>(to, 1);
  const auto size = static_cast<std::size_t>(hi - lo + 1);
  std::vector<Integer> F(size);
  std::vector<Rational> L(size);
  const auto idx = [lo](std::int64_t n) { return static_cast<std::size_t>(n - lo); };

  const Integer minus_delta = -ctx.delta();
  const Rational two_a_q = ctx.two_a();
  F[idx(0)] = 0;
  F[idx(1)] = 1;
  L[idx(0)] = 1 / ctx.a();
  L[idx(1)] = 1;
  for (std::int64_t n = 2; n <= hi; ++n) {
    F[idx(n)] = minus_delta * F[idx(n - 2)] + ctx.two_a() * F[idx(n - 1)];
    L[idx(n)] = Rational(minus_delta) * L[idx(n - 2)] + two_a_q * L[idx(n - 1)];
  }
  for (std::int64_t n = -1; n >= lo; --n) {
    F[idx(n)] = minus_delta * (F[idx(n + 2)] - ctx.two_a() * F[idx(n + 1)]);
    L[idx(n)] = Rational(minus_delta) * (L[idx(n + 2)] - two_a_q * L[idx(n + 1)]);
  }

  std::vector<SeqTerm> out;
  out.reserve(static_cast<std::size_t>(to - from + 1));
  for (std::int64_t n = from; n <= to; ++n) out.push_back({n, F[idx(n)], L[idx(n)]});
  return out;
}

KFibMapping kfib_map(std::int64_t k) {
  if (k < 1 || k > 1'000'000'000) {
    throw Error(ErrorCode::InvalidArgument, "k must be in [1, 1e9], got " + std::to_string(k));
  }
  std::int64_t rest = k * k + 4;
  std::int64_t d = 1;
  std::int64_t r = 1;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) r *= p;
    if (e % 2 != 0) d *= p;
  }
  d *= rest;
  const SquarefreeD field = validate_d(d);
  const QuadElement u(field, make_rational(static_cast<long>(k), 2),
                      make_rational(static_cast<long>(r), 2));
  return KFibMapping{k, field, r, make_unit(u)};
}

std::optional<Integer> as_k_fibonacci(const SeqContext& ctx) {
  if (ctx.delta() == -1 && ctx.two_a() >= 1) return ctx.two_a();
  return std::nullopt;
}

}  // namespace quadfib
