#include "quadfib/identities.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <thread>

#include "quadfib/errors.hpp"

namespace quadfib {

namespace {

struct TagEntry {
  IdentityId id;
  std::string_view tag;
  int arity;
};

constexpr std::array<TagEntry, 21> kTags = {{
    {IdentityId::T7_i, "T7.i", 1},         {IdentityId::T7_ii, "T7.ii", 1},
    {IdentityId::T7_iii, "T7.iii", 1},     {IdentityId::T7_iv, "T7.iv", 1},
    {IdentityId::T7_v, "T7.v", 1},         {IdentityId::T7_vi, "T7.vi", 1},
    {IdentityId::T7_vii, "T7.vii", 2},     {IdentityId::T7_viii, "T7.viii", 2},
    {IdentityId::T7_ix, "T7.ix", 1},       {IdentityId::T8, "T8", 1},
    {IdentityId::T13, "T13", 1},           {IdentityId::T21, "T21", 1},
    {IdentityId::T25_i, "T25.i", 2},       {IdentityId::T25_ii, "T25.ii", 1},
    {IdentityId::T25_iii, "T25.iii", 2},   {IdentityId::T25_iv, "T25.iv", 2},
    {IdentityId::T25_v, "T25.v", 2},       {IdentityId::T25_vi, "T25.vi", 2},
    {IdentityId::C17_i, "C17.i", 1},       {IdentityId::C17_ii_iii, "C17.ii_iii", 1},
    {IdentityId::T26, "T26", 1},
}};

const TagEntry& entry(IdentityId id) {
  for (const auto& e : kTags) {
    if (e.id == id) return e;
  }
  throw std::logic_error("identity missing from tag table");
}

std::size_t catalog_position(IdentityId id) {
  return static_cast<std::size_t>(
      std::find(kAllIdentities.begin(), kAllIdentities.end(), id) - kAllIdentities.begin());
}

Rational delta_pow(int delta, std::int64_t m) {
  return (delta == -1 && (m % 2 != 0)) ? Rational(-1) : Rational(1);
}

// F and L over a window wide enough for every index the catalog touches.
class TermTable {
 public:
  TermTable(const SeqContext& ctx, std::int64_t lo, std::int64_t hi) : lo_(lo) {
    for (auto& t : slice(ctx, lo, hi)) {
      f_.emplace_back(t.fib);
      l_.push_back(std::move(t.lucas));
    }
  }
  const Rational& F(std::int64_t n) const { return f_.at(static_cast<std::size_t>(n - lo_)); }
  const Rational& L(std::int64_t n) const { return l_.at(static_cast<std::size_t>(n - lo_)); }

 private:
  std::int64_t lo_;
  std::vector<Rational> f_;
  std::vector<Rational> l_;
};

struct Sides {
  IdentityValue lhs;
  IdentityValue rhs;
};

// Evaluates one index tuple; nullopt means the tuple lies outside the
// identity's domain.
using Evaluator = std::function<std::optional<Sides>(std::int64_t n, std::int64_t m)>;

Evaluator make_evaluator(const SeqContext& ctx, IdentityId id, const TermTable& T) {
  const Rational a = ctx.a();
  const Rational b2d = ctx.b2d();
  const int delta = ctx.delta();
  const Rational D = delta;
  const auto F = [&T](std::int64_t n) -> const Rational& { return T.F(n); };
  const auto L = [&T](std::int64_t n) -> const Rational& { return T.L(n); };
  using R = std::optional<Sides>;

  switch (id) {
    case IdentityId::T7_i:
      return [=](std::int64_t n, std::int64_t) -> R {
        return Sides{F(n + 1), a * (L(n) + F(n))};
      };
    case IdentityId::T7_ii:
      return [=](std::int64_t n, std::int64_t) -> R {
        return Sides{L(n + 1), a * L(n) + b2d / a * F(n)};
      };
    case IdentityId::T7_iii:
      return [=](std::int64_t n, std::int64_t) -> R {
        return Sides{F(n), a / D * (F(n + 1) - L(n + 1))};
      };
    case IdentityId::T7_iv:
      return [=](std::int64_t n, std::int64_t) -> R {
        return Sides{L(n), (a * L(n + 1) - b2d / a * F(n + 1)) / D};
      };
    case IdentityId::T7_v:
      return [=](std::int64_t n, std::int64_t) -> R {
        if (n < 1) return std::nullopt;
        Rational sum = 0;
        for (std::int64_t t = 0; t <= n - 1; ++t) sum += pow(a, t + 1) * L(n - t);
        return Sides{F(n + 1) - pow(a, n) * F(1), sum};
      };
    case IdentityId::T7_vi:
      return [=](std::int64_t n, std::int64_t) -> R {
        if (n < 1) return std::nullopt;
        Rational sum = 0;
        for (std::int64_t t = 0; t <= n - 1; ++t) sum += pow(a, t - 1) * F(n - t);
        return Sides{L(n + 1) - pow(a, n) * L(1), b2d * sum};
      };
    case IdentityId::T7_vii:
      return [=](std::int64_t n, std::int64_t m) -> R {
        return Sides{F(m + n), a * (F(m) * L(n) + F(n) * L(m))};
      };
    case IdentityId::T7_viii:
      return [=](std::int64_t n, std::int64_t m) -> R {
        return Sides{L(m + n), b2d / a * F(m) * F(n) + a * L(m) * L(n)};
      };
    case IdentityId::T7_ix:
      return [=](std::int64_t n, std::int64_t) -> R {
        return Sides{b2d * F(n) * F(n) - a * a * L(n) * L(n), -delta_pow(delta, n)};
      };
    case IdentityId::T8:
      return [=](std::int64_t n, std::int64_t) -> R {
        return Sides{F(n + 2), -D * F(n) + 2 * a * F(n + 1)};
      };
    case IdentityId::T13:
      return [=](std::int64_t n, std::int64_t) -> R {
        return Sides{L(n + 2), -D * L(n) + 2 * a * L(n + 1)};
      };
    case IdentityId::T21: {
      const QuadElement u = ctx.unit().element;
      return [=](std::int64_t n, std::int64_t) -> R {
        QuadElement lhs = pow(u, n);
        QuadElement rhs = F(n) * u - QuadElement(u.field(), F(n - 1) * D);
        return Sides{std::move(lhs), std::move(rhs)};
      };
    }
    case IdentityId::T25_i:
      return [=](std::int64_t n, std::int64_t m) -> R {
        return Sides{F(n) * F(n) - F(n + m) * F(n - m), delta_pow(delta, n - m) * F(m) * F(m)};
      };
    case IdentityId::T25_ii:
      return [=](std::int64_t n, std::int64_t) -> R {
        return Sides{F(n) * F(n) - F(n - 1) * F(n + 1), delta_pow(delta, n - 1)};
      };
    case IdentityId::T25_iii:
      return [=](std::int64_t n, std::int64_t r) -> R {
        return Sides{L(n) * L(n) - L(n + r) * L(n - r),
                     delta_pow(delta, n) / (2 * a * a) - delta_pow(delta, n - r) / (2 * a) * L(2 * r)};
      };
    case IdentityId::T25_iv:
      return [=](std::int64_t n, std::int64_t m) -> R {
        return Sides{F(m) * F(n + 1) - F(n) * F(m + 1), delta_pow(delta, n) * F(m - n)};
      };
    case IdentityId::T25_v:
      return [=](std::int64_t n, std::int64_t m) -> R {
        Rational lhs = F(m - 1) * F(n) + F(m) * F(n + 1);
        if (delta == -1) return Sides{std::move(lhs), F(m + n)};
        return Sides{std::move(lhs), a / (2 * b2d) * (2 * a * L(m + n) - L(m - n - 1))};
      };
    case IdentityId::T25_vi:
      return [=](std::int64_t n, std::int64_t r) -> R {
        return Sides{L(n) * L(n + r), L(2 * n + r) / (2 * a) + delta_pow(delta, n) / (2 * a) * L(r)};
      };
    case IdentityId::C17_i:
      return [=](std::int64_t k, std::int64_t) -> R {
        if (k < 1) return std::nullopt;
        const Rational& v = L(2 * k - 1);
        // rhs: the integer the value would have to equal.
        return Sides{v, Rational(Integer(v))};
      };
    case IdentityId::C17_ii_iii: {
      // a = a0 (integer) or a0/2 with a0 odd.
      Integer a0 = a.get_num();
      if (a0 < 0) a0 = -a0;
      return [=](std::int64_t k, std::int64_t) -> R {
        if (k < 1) return std::nullopt;
        const Rational scaled = Rational(a0) * L(2 * k);
        if (!is_integer(scaled)) return Sides{scaled, Rational(Integer(scaled))};
        Integer g;
        mpz_gcd(g.get_mpz_t(), a0.get_mpz_t(), scaled.get_num_mpz_t());
        // lhs: gcd(a0, a0 L_2k); rhs: 1.
        return Sides{Rational(g), Rational(1)};
      };
    }
    case IdentityId::T26: {
      const SeqContext inv_ctx(make_unit(inverse(ctx.unit().element)));
      return [=](std::int64_t n, std::int64_t) -> R {
        Rational lhs = fib(inv_ctx, n);
        return Sides{std::move(lhs), delta == -1 ? F(-n) : F(n)};
      };
    }
  }
  throw std::logic_error("unhandled identity");
}

}  // namespace

std::string_view tag(IdentityId id) { return entry(id).tag; }

int arity(IdentityId id) { return entry(id).arity; }

IdentityId parse_identity(std::string_view text) {
  for (const auto& e : kTags) {
    if (e.tag == text) return e.id;
  }
  throw Error(ErrorCode::UnknownIdentity, "no identity tagged '" + std::string(text) + "'");
}

IdentityReport verify(const SeqContext& ctx, IdentityId id, IndexRange range) {
  if (range.from > range.to) {
    throw Error(ErrorCode::InvalidRange,
                std::to_string(range.from) + ".." + std::to_string(range.to));
  }
  const std::int64_t reach = std::max(std::abs(range.from), std::abs(range.to));
  const TermTable table(ctx, -3 * reach - 3, 3 * reach + 3);
  const Evaluator eval = make_evaluator(ctx, id, table);

  IdentityReport report{id, ctx.field(), ctx.delta(), range, true, 0, 0, {}};
  const auto check = [&](std::vector<std::int64_t> indices, std::int64_t n, std::int64_t m) {
    auto sides = eval(n, m);
    if (!sides) {
      ++report.skipped;
      return;
    }
    ++report.checked;
    if (sides->lhs != sides->rhs) {
      report.counterexamples.push_back(
          {std::move(indices), std::move(sides->lhs), std::move(sides->rhs)});
    }
  };
  for (std::int64_t n = range.from; n <= range.to; ++n) {
    if (arity(id) == 1) {
      check({n}, n, 0);
      continue;
    }
    for (std::int64_t m = range.from; m <= range.to; ++m) check({n, m}, n, m);
  }
  report.passed = report.counterexamples.empty();
  return report;
}

std::vector<IdentityReport> verify_all(const SeqContext& ctx, IndexRange range) {
  std::vector<IdentityReport> out;
  out.reserve(kAllIdentities.size());
  for (IdentityId id : kAllIdentities) out.push_back(verify(ctx, id, range));
  return out;
}

std::vector<IdentityReport> verify_fields(std::span<const SquarefreeD> fields,
                                          std::span<const IdentityId> ids, IndexRange range,
                                          unsigned threads) {
  if (range.from > range.to) {
    throw Error(ErrorCode::InvalidRange,
                std::to_string(range.from) + ".." + std::to_string(range.to));
  }
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, fields.size())));

  std::vector<std::vector<IdentityReport>> per_field(fields.size());
  std::vector<std::exception_ptr> errors(fields.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < fields.size(); i = next++) {
      try {
        const SeqContext ctx = context(fields[i]);
        for (IdentityId id : ids) per_field[i].push_back(verify(ctx, id, range));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<IdentityReport> merged;
  for (auto& reports : per_field) {
    for (auto& r : reports) merged.push_back(std::move(r));
  }
  std::stable_sort(merged.begin(), merged.end(), [](const auto& x, const auto& y) {
    const auto px = catalog_position(x.identity);
    const auto py = catalog_position(y.identity);
    if (px != py) return px < py;
    return x.d.value() < y.d.value();
  });
  return merged;
}

}  // namespace quadfib
