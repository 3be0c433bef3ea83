#pragma once

// Fundamental unit of Q(sqrt d) by the PQa continued-fraction method, and
// navigation of the unit group {±1} x <eps>.

#include <cstdint>
#include <vector>

#include "quadfib/quadfield.hpp"

namespace quadfib {

enum class CFSeed {
  sqrt_d,               // omega = sqrt(d)
  half_one_plus_sqrt_d  // omega = (1 + sqrt(d)) / 2, needs d = 1 (mod 4)
};

// omega = [initial_quotient; periodic_quotients repeated]. The tail from
// the first partial quotient on is purely periodic for both seeds.
struct CFExpansion {
  SquarefreeD d;
  CFSeed seed;
  Integer initial_quotient;
  std::vector<Integer> periodic_quotients;
  std::size_t period_length = 0;
  // PQa state (P, Q) at the start of the period; expanding from here
  // reproduces periodic_quotients.
  Integer period_start_p;
  Integer period_start_q;
};

struct UnitOptions {
  std::size_t max_period = 1'000'000;
};

// Throws ResourceLimit when the period exceeds options.max_period, and
// InvalidArgument for the half seed when d != 1 (mod 4).
CFExpansion continued_fraction(SquarefreeD d, CFSeed seed, const UnitOptions& options = {});

// Expands (P + sqrt d)/Q for `count` steps, returning the partial quotients.
std::vector<Integer> expand_pqa(SquarefreeD d, Integer p, Integer q, std::size_t count);

struct Unit {
  QuadElement element;
  int delta;  // norm(element), always +1 or -1
};

// Smallest unit > 1 of the ring of integers.
Unit fundamental_unit(SquarefreeD d, const UnitOptions& options = {});

// sign * eps^exponent. Throws ZeroExponent for exponent == 0.
Unit unit_from_power(SquarefreeD d, int sign, std::int64_t exponent,
                     const UnitOptions& options = {});

// Throws NotAUnit unless element is integral with norm ±1.
Unit make_unit(const QuadElement& element);

}  // namespace quadfib
