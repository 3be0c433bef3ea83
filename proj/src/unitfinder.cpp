#include "quadfib/unitfinder.hpp"

#include <map>
#include <utility>

#include "quadfib/errors.hpp"

namespace quadfib {

namespace {

struct PqaState {
  Integer p;
  Integer q;
};

// floor((P + sqrt d) / Q) for Q != 0, using floor(P + sqrt d) = P + isqrt(d)
// (sqrt d is irrational) and floor(y / m) = floor(floor(y) / m) for m > 0.
Integer partial_quotient(const PqaState& s, const Integer& root_floor) {
  Integer num = s.p + root_floor;
  Integer out;
  if (s.q > 0) {
    mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), s.q.get_mpz_t());
    return out;
  }
  // (P + sqrt d)/Q = -(P + sqrt d)/|Q|; floor(-y) = -floor(y) - 1 for y
  // irrational.
  const Integer abs_q = -s.q;
  mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), abs_q.get_mpz_t());
  return -out - 1;
}

PqaState advance(const PqaState& s, const Integer& a, const Integer& d) {
  Integer p = a * s.q - s.p;
  Integer q = (d - p * p) / s.q;
  return {std::move(p), std::move(q)};
}

PqaState seed_state(SquarefreeD d, CFSeed seed) {
  if (seed == CFSeed::sqrt_d) return {0, 1};
  if (!d.one_mod_four()) {
    throw Error(ErrorCode::InvalidArgument,
                "(1+√d)/2 expansion needs d = 1 mod 4, got d = " + std::to_string(d.value()));
  }
  return {1, 2};
}

Integer as_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }

}  // namespace

std::vector<Integer> expand_pqa(SquarefreeD d, Integer p, Integer q, std::size_t count) {
  const Integer dd = as_integer(d.value());
  const Integer root = isqrt(dd);
  std::vector<Integer> out;
  out.reserve(count);
  PqaState s{std::move(p), std::move(q)};
  for (std::size_t i = 0; i < count; ++i) {
    Integer a = partial_quotient(s, root);
    s = advance(s, a, dd);
    out.push_back(std::move(a));
  }
  return out;
}

CFExpansion continued_fraction(SquarefreeD d, CFSeed seed, const UnitOptions& options) {
  const Integer dd = as_integer(d.value());
  const Integer root = isqrt(dd);

  PqaState s = seed_state(d, seed);
  Integer a0 = partial_quotient(s, root);
  s = advance(s, a0, dd);

  CFExpansion cf{d, seed, a0, {}, 0, s.p, s.q};
  // States are keyed from index 1 on; the first repeat closes the period.
  std::map<std::pair<Integer, Integer>, std::size_t> seen;
  std::vector<Integer> quotients;
  while (true) {
    auto [it, inserted] = seen.emplace(std::make_pair(s.p, s.q), quotients.size());
    if (!inserted) {
      const std::size_t start = it->second;
      if (start != 0) {
        // Not reachable for sqrt(d) or (1+sqrt(d))/2, whose tails are
        // purely periodic; kept as a hard check on that property.
        throw Error(ErrorCode::ResourceLimit, "pre-period longer than one quotient");
      }
      break;
    }
    if (quotients.size() >= options.max_period) {
      throw Error(ErrorCode::ResourceLimit,
                  "continued fraction period exceeds " + std::to_string(options.max_period));
    }
    Integer a = partial_quotient(s, root);
    s = advance(s, a, dd);
    quotients.push_back(std::move(a));
  }
  cf.period_length = quotients.size();
  cf.periodic_quotients = std::move(quotients);
  return cf;
}

Unit make_unit(const QuadElement& element) {
  if (!is_integral(element)) throw Error(ErrorCode::NotAUnit, to_string(element) + " is not integral");
  const Rational n = norm(element);
  if (n != 1 && n != -1) {
    throw Error(ErrorCode::NotAUnit, to_string(element) + " has norm " + to_string(n));
  }
  return Unit{element, n == 1 ? 1 : -1};
}

Unit fundamental_unit(SquarefreeD d, const UnitOptions& options) {
  const CFSeed seed = d.one_mod_four() ? CFSeed::half_one_plus_sqrt_d : CFSeed::sqrt_d;
  const CFExpansion cf = continued_fraction(d, seed, options);

  // Convergents h/k of omega. For sqrt(d) the candidate is h + k sqrt(d).
  // For omega = (1+sqrt d)/2 it is h - k*conj(omega) = (2h - k)/2 + (k/2) sqrt(d),
  // whose norm is h^2 - hk - k^2 (d-1)/4. The first candidate of norm ±1 is
  // the fundamental unit; it appears no later than the end of the first
  // period, so two periods bound the walk.
  Integer h_prev = 1, h_prev2 = 0;
  Integer k_prev = 0, k_prev2 = 1;
  const std::size_t limit = 1 + 2 * cf.period_length;
  for (std::size_t i = 0; i < limit; ++i) {
    const Integer& a =
        i == 0 ? cf.initial_quotient : cf.periodic_quotients[(i - 1) % cf.period_length];
    Integer h = a * h_prev + h_prev2;
    Integer k = a * k_prev + k_prev2;
    QuadElement candidate =
        seed == CFSeed::sqrt_d
            ? QuadElement(d, Rational(h), Rational(k))
            : QuadElement(d, make_rational(2 * h - k, 2), make_rational(k, 2));
    const Rational n = norm(candidate);
    if (n == 1 || n == -1) return make_unit(candidate);
    h_prev2 = std::move(h_prev);
    h_prev = std::move(h);
    k_prev2 = std::move(k_prev);
    k_prev = std::move(k);
  }
  throw Error(ErrorCode::ResourceLimit,
              "no unit among convergents for d = " + std::to_string(d.value()));
}

Unit unit_from_power(SquarefreeD d, int sign, std::int64_t exponent, const UnitOptions& options) {
  if (exponent == 0) throw Error(ErrorCode::ZeroExponent, "±eps^0 has no sqrt(d) part");
  if (sign != 1 && sign != -1) throw Error(ErrorCode::InvalidArgument, "sign must be +1 or -1");
  const Unit eps = fundamental_unit(d, options);
  QuadElement u = pow(eps.element, exponent);
  if (sign < 0) u = -u;
  return make_unit(u);
}

}  // namespace quadfib
