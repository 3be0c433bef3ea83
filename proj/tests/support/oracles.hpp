#pragma once

// Independent reference computations for tests. Nothing here calls into the
// library's arithmetic beyond the GMP types themselves.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

using Z = mpz_class;
using Q = mpq_class;

inline bool squarefree(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

inline std::vector<std::int64_t> squarefree_in(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (auto d = lo; d <= hi; ++d) {
    if (squarefree(d)) out.push_back(d);
  }
  return out;
}

// Pair arithmetic for x + y sqrt(d), written out longhand.
struct Pair {
  Q x, y;
};

inline Pair times(const Pair& p, const Pair& q, std::int64_t d) {
  return {p.x * q.x + p.y * q.y * d, p.x * q.y + p.y * q.x};
}

// u^n by n-1 plain multiplications, n >= 1.
inline Pair power_naive(const Pair& u, std::int64_t n, std::int64_t d) {
  Pair acc = u;
  for (std::int64_t i = 1; i < n; ++i) acc = times(acc, u, d);
  return acc;
}

// Smallest y > 0 with x^2 - d y^2 = +-4 (d = 1 mod 4) or +-1, by direct
// search on y. Returns the unit as (x/2, y/2) or (x, y). Gives up after
// y_limit.
inline std::optional<Pair> unit_by_search(std::int64_t d, std::int64_t y_limit) {
  const bool half = d % 4 == 1;
  const std::int64_t target = half ? 4 : 1;
  for (std::int64_t y = 1; y <= y_limit; ++y) {
    for (std::int64_t s : {-1, 1}) {
      Z x2 = Z(d) * y * y + s * target;
      if (x2 <= 0) continue;
      Z x = sqrt(x2);
      if (x * x != x2) continue;
      if (half) {
        Pair p{Q(x, 2), Q(y, 2)};
        p.x.canonicalize();
        p.y.canonicalize();
        return p;
      }
      return Pair{Q(x), Q(y)};
    }
  }
  return std::nullopt;
}

// Integer k-Fibonacci sequence F_1..F_count.
inline std::vector<Z> k_fibonacci(std::int64_t k, std::size_t count) {
  std::vector<Z> out{1, k};
  while (out.size() < count) out.push_back(k * out[out.size() - 1] + out[out.size() - 2]);
  out.resize(count);
  return out;
}

// floor(sqrt(n) * 10^digits) by bisection.
inline Z sqrt_scaled(std::int64_t n, unsigned digits) {
  Z scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, 2 * digits);
  const Z target = Z(n) * scale;
  Z lo = 0, hi = target + 1;
  while (hi - lo > 1) {
    Z mid = (lo + hi) / 2;
    if (mid * mid <= target) lo = mid; else hi = mid;
  }
  return lo;
}

inline Q ten_to(int e) {
  Z p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Q(Z(1), p) : Q(p);
}

inline Q abs_q(const Q& q) { return q < 0 ? Q(-q) : q; }

}  // namespace oracle
