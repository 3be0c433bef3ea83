#pragma once

// Fibonacci and Lucas sequences of degree d attached to a unit u = a + b sqrt(d):
//   u^n = a_n + b_n sqrt(d),  F_n = b_n / b,  L_n = a_n / a.
// Four routes are provided (recurrence, unit powers, binomial sums, slices)
// so each can serve as an oracle for the others.

#include <cstdint>
#include <optional>
#include <vector>

#include "quadfib/quadfield.hpp"
#include "quadfib/unitfinder.hpp"

namespace quadfib {

class SeqContext {
 public:
  // Throws ZeroIrrationalPart when the unit is ±1.
  explicit SeqContext(Unit unit);

  SquarefreeD field() const noexcept { return unit_.element.field(); }
  const Unit& unit() const noexcept { return unit_; }
  const Rational& a() const noexcept { return unit_.element.x(); }
  const Rational& b() const noexcept { return unit_.element.y(); }
  int delta() const noexcept { return unit_.delta; }
  const Integer& two_a() const noexcept { return two_a_; }
  const Integer& two_b() const noexcept { return two_b_; }
  // b^2 d, which appears throughout the identity catalog.
  Rational b2d() const;

 private:
  Unit unit_;
  Integer two_a_;
  Integer two_b_;
};

SeqContext context(SquarefreeD d, const UnitOptions& options = {});
SeqContext context_with_unit(SquarefreeD d, int sign, std::int64_t exponent,
                             const UnitOptions& options = {});

struct SeqTerm {
  std::int64_t n;
  Integer fib;
  Rational lucas;

  friend bool operator==(const SeqTerm&, const SeqTerm&) = default;
};

// Forward recurrence for n >= 1, reflection F_{-n} = -delta^n F_n for n <= -1,
// F_0 = 0.
Integer fib(const SeqContext& ctx, std::int64_t n);
// Forward recurrence for n >= 1, reflection L_{-n} = delta^n L_n, L_0 = 1/a.
Rational lucas(const SeqContext& ctx, std::int64_t n);

// b_n / b and a_n / a from pow(u, n).
Integer fib_binet(const SeqContext& ctx, std::int64_t n);
Rational lucas_binet(const SeqContext& ctx, std::int64_t n);

// Even/odd binomial sums; n >= 1 or NonPositiveIndex.
Integer fib_binomial(const SeqContext& ctx, std::int64_t n);
Rational lucas_binomial(const SeqContext& ctx, std::int64_t n);

// Terms from..to in one pass of the recurrence, forward from (F_0, F_1)
// and backward through F_n = -delta (F_{n+2} - 2a F_{n+1}).
// Throws InvalidRange when from > to.
std::vector<SeqTerm> slice(const SeqContext& ctx, std::int64_t from, std::int64_t to);

struct KFibMapping {
  std::int64_t k;
  SquarefreeD d;
  std::int64_t r;
  Unit unit;  // (k + r sqrt d) / 2, norm -1
};

// k^2 + 4 = r^2 d with d squarefree. Throws InvalidArgument for k < 1.
KFibMapping kfib_map(std::int64_t k);

// 2a when delta = -1 and 2a >= 1: the sequence is then the k-Fibonacci
// sequence F_{n+2} = k F_{n+1} + F_n.
std::optional<Integer> as_k_fibonacci(const SeqContext& ctx);

}  // namespace quadfib
