#include "quadfib/quadfield.hpp"

#include <numeric>

#include "quadfib/errors.hpp"

namespace quadfib {

SquarefreeD validate_d(std::int64_t n) {
  if (n <= 1) throw Error(ErrorCode::NotPositive, "d must be >= 2, got " + std::to_string(n));
  if (is_perfect_square(Integer(static_cast<long>(n)))) {
    throw Error(ErrorCode::PerfectSquare, std::to_string(n) + " is a perfect square");
  }
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) {
      throw Error(ErrorCode::NotSquarefree,
                  std::to_string(n) + " is divisible by " + std::to_string(p * p));
    }
  }
  return SquarefreeD(n);
}

namespace {

void require_same_field(const QuadElement& e, const QuadElement& f) {
  if (e.field() != f.field()) {
    throw Error(ErrorCode::MixedFields, "Q(√" + std::to_string(e.field().value()) +
                                            ") vs Q(√" + std::to_string(f.field().value()) + ")");
  }
}

Rational d_of(const QuadElement& e) { return Rational(static_cast<long>(e.field().value())); }

}  // namespace

QuadElement operator+(const QuadElement& e, const QuadElement& f) {
  require_same_field(e, f);
  return {e.field(), e.x() + f.x(), e.y() + f.y()};
}

QuadElement operator-(const QuadElement& e, const QuadElement& f) {
  require_same_field(e, f);
  return {e.field(), e.x() - f.x(), e.y() - f.y()};
}

QuadElement operator-(const QuadElement& e) { return {e.field(), -e.x(), -e.y()}; }

QuadElement operator*(const QuadElement& e, const QuadElement& f) {
  require_same_field(e, f);
  const Rational d = d_of(e);
  Rational x = e.x() * f.x() + e.y() * f.y() * d;
  Rational y = e.x() * f.y() + e.y() * f.x();
  return {e.field(), std::move(x), std::move(y)};
}

QuadElement operator*(const Rational& s, const QuadElement& e) {
  return {e.field(), s * e.x(), s * e.y()};
}

QuadElement operator/(const QuadElement& e, const QuadElement& f) { return e * inverse(f); }

QuadElement add(const QuadElement& e, const QuadElement& f) { return e + f; }
QuadElement sub(const QuadElement& e, const QuadElement& f) { return e - f; }
QuadElement mul(const QuadElement& e, const QuadElement& f) { return e * f; }

QuadElement conj(const QuadElement& e) { return {e.field(), e.x(), -e.y()}; }

QuadElement inverse(const QuadElement& e) {
  if (e.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  const Rational n = norm(e);
  return {e.field(), e.x() / n, -e.y() / n};
}

Rational norm(const QuadElement& e) { return e.x() * e.x() - d_of(e) * e.y() * e.y(); }

Rational trace(const QuadElement& e) { return 2 * e.x(); }

QuadElement pow(const QuadElement& e, std::int64_t n) {
  if (n < 0) {
    if (e.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero to a negative power");
    // -(n) would overflow for INT64_MIN; peel one factor first.
    return inverse(e) * pow(inverse(e), -(n + 1));
  }
  QuadElement result = QuadElement::one(e.field());
  QuadElement base = e;
  auto k = static_cast<std::uint64_t>(n);
  while (k != 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k != 0) base = base * base;
  }
  return result;
}

bool is_integral(const QuadElement& e) {
  if (!e.field().one_mod_four()) return is_integer(e.x()) && is_integer(e.y());
  const Rational two_x = 2 * e.x();
  const Rational two_y = 2 * e.y();
  if (!is_integer(two_x) || !is_integer(two_y)) return false;
  const Integer px = two_x.get_num();
  const Integer py = two_y.get_num();
  return mpz_even_p(px.get_mpz_t()) == mpz_even_p(py.get_mpz_t());
}

int sign(const QuadElement& e) {
  const int sx = sgn(e.x());
  const int sy = sgn(e.y());
  if (sx == 0) return sy;
  if (sy == 0 || sx == sy) return sx;
  // Opposite signs: the larger of x^2 and d*y^2 wins.
  const int cmp_sq = cmp(e.x() * e.x(), d_of(e) * e.y() * e.y());
  return cmp_sq > 0 ? sx : sy;
}

std::string to_string(const QuadElement& e) {
  Integer den;
  mpz_lcm(den.get_mpz_t(), e.x().get_den_mpz_t(), e.y().get_den_mpz_t());
  const Integer X = Integer(e.x() * den);
  const Integer Y = Integer(e.y() * den);
  const std::string root = "√" + std::to_string(e.field().value());

  std::string body;
  if (Y == 0) {
    body = to_string(X);
  } else {
    std::string ypart;
    if (Y == 1) {
      ypart = root;
    } else if (Y == -1) {
      ypart = "-" + root;
    } else {
      ypart = to_string(Y) + root;
    }
    if (X == 0) {
      body = ypart;
    } else {
      body = to_string(X) + (Y > 0 ? "+" : "") + ypart;
    }
  }
  if (den == 1) return body;
  return "(" + body + ")/" + to_string(den);
}

MatrixRep::MatrixRep(const QuadElement& e)
    : d_(e.field()),
      m_{{{e.x(), e.y() * Rational(static_cast<long>(e.field().value()))}, {e.y(), e.x()}}} {}

Rational MatrixRep::determinant() const { return m_[0][0] * m_[1][1] - m_[0][1] * m_[1][0]; }

QuadElement MatrixRep::to_element() const { return {d_, m_[0][0], m_[1][0]}; }

MatrixRep operator*(const MatrixRep& lhs, const MatrixRep& rhs) {
  if (lhs.d_ != rhs.d_) throw Error(ErrorCode::MixedFields, "matrix representations differ in d");
  MatrixRep::Entries out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out[i][j] = lhs.m_[i][0] * rhs.m_[0][j] + lhs.m_[i][1] * rhs.m_[1][j];
    }
  }
  return MatrixRep(lhs.d_, std::move(out));
}

MatrixRep matrix_rep(const QuadElement& e) { return MatrixRep(e); }

std::pair<Rational, Rational> power_coeffs_closed(const QuadElement& e, std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::NonPositiveIndex, "power sums need n >= 1");
  const Rational& a = e.x();
  const Rational& b = e.y();
  const Rational d = d_of(e);
  const auto un = static_cast<unsigned long>(n);
  Rational an = 0;
  Rational bn = 0;
  if (n % 2 == 0) {
    for (std::int64_t t = 0; 2 * t <= n; ++t) {
      an += Rational(binomial(un, 2 * t)) * pow(a, 2 * t) * pow(b, n - 2 * t) * pow(d, n / 2 - t);
    }
    for (std::int64_t t = 0; 2 * t <= n - 2; ++t) {
      bn += Rational(binomial(un, 2 * t + 1)) * pow(a, 2 * t + 1) * pow(b, n - 2 * t - 1) *
            pow(d, (n - 2) / 2 - t);
    }
  } else {
    for (std::int64_t t = 0; 2 * t <= n - 1; ++t) {
      an += Rational(binomial(un, 2 * t + 1)) * pow(a, 2 * t + 1) * pow(b, n - 2 * t - 1) *
            pow(d, (n - 1) / 2 - t);
      bn += Rational(binomial(un, 2 * t)) * pow(a, 2 * t) * pow(b, n - 2 * t) *
            pow(d, (n - 1) / 2 - t);
    }
  }
  return {an, bn};
}

}  // namespace quadfib
