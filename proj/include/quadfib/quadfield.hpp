#pragma once

// Exact arithmetic in a real quadratic field Q(sqrt d) and its 2x2 matrix
// model [[x, y*d], [y, x]].

#include <array>
#include <cstdint>
#include <string>
#include <utility>

#include "quadfib/rational.hpp"

namespace quadfib {

// A squarefree d >= 2. Only validate_d constructs one.
class SquarefreeD {
 public:
  std::int64_t value() const noexcept { return d_; }
  // d when d = 1 (mod 4), 4d otherwise.
  std::int64_t discriminant() const noexcept { return d_ % 4 == 1 ? d_ : 4 * d_; }
  bool one_mod_four() const noexcept { return d_ % 4 == 1; }

  friend bool operator==(const SquarefreeD&, const SquarefreeD&) = default;

 private:
  friend SquarefreeD validate_d(std::int64_t n);
  explicit SquarefreeD(std::int64_t d) : d_(d) {}
  std::int64_t d_;
};

// Throws NotPositive (n <= 1), PerfectSquare, NotSquarefree.
SquarefreeD validate_d(std::int64_t n);

// x + y*sqrt(d) with rational coordinates.
class QuadElement {
 public:
  QuadElement(SquarefreeD d, Rational x, Rational y = 0)
      : d_(d), x_(std::move(x)), y_(std::move(y)) {}

  static QuadElement one(SquarefreeD d) { return {d, 1, 0}; }

  SquarefreeD field() const noexcept { return d_; }
  const Rational& x() const noexcept { return x_; }
  const Rational& y() const noexcept { return y_; }
  bool is_zero() const { return x_ == 0 && y_ == 0; }

  // Coordinates determine the element because sqrt(d) is irrational.
  friend bool operator==(const QuadElement&, const QuadElement&) = default;

 private:
  SquarefreeD d_;
  Rational x_;
  Rational y_;
};

// Binary operations throw MixedFields when the operands live in different
// fields.
QuadElement operator+(const QuadElement& e, const QuadElement& f);
QuadElement operator-(const QuadElement& e, const QuadElement& f);
QuadElement operator-(const QuadElement& e);
QuadElement operator*(const QuadElement& e, const QuadElement& f);
QuadElement operator*(const Rational& s, const QuadElement& e);
QuadElement operator/(const QuadElement& e, const QuadElement& f);

QuadElement add(const QuadElement& e, const QuadElement& f);
QuadElement sub(const QuadElement& e, const QuadElement& f);
QuadElement mul(const QuadElement& e, const QuadElement& f);
QuadElement conj(const QuadElement& e);
// conj(e) / norm(e); throws DivisionByZero for e == 0.
QuadElement inverse(const QuadElement& e);

Rational norm(const QuadElement& e);
Rational trace(const QuadElement& e);

// O(log |n|) multiplications; negative n goes through inverse.
QuadElement pow(const QuadElement& e, std::int64_t n);

// Membership in the ring of integers: integer coordinates, or for
// d = 1 (mod 4) half-integer coordinates of equal parity.
bool is_integral(const QuadElement& e);

// Sign of x + y*sqrt(d) decided exactly.
int sign(const QuadElement& e);

// "1+√2", "(3+√13)/2", "5+2√6", "-1".
std::string to_string(const QuadElement& e);

class MatrixRep {
 public:
  using Entries = std::array<std::array<Rational, 2>, 2>;

  explicit MatrixRep(const QuadElement& e);

  SquarefreeD field() const noexcept { return d_; }
  const Entries& entries() const noexcept { return m_; }
  Rational determinant() const;
  QuadElement to_element() const;

  friend MatrixRep operator*(const MatrixRep& lhs, const MatrixRep& rhs);
  friend bool operator==(const MatrixRep&, const MatrixRep&) = default;

 private:
  MatrixRep(SquarefreeD d, Entries m) : d_(d), m_(std::move(m)) {}

  SquarefreeD d_;
  Entries m_;
};

MatrixRep matrix_rep(const QuadElement& e);

// Coordinates (a_n, b_n) of e^n from the even/odd binomial sums. Kept as
// an independent oracle for pow; requires n >= 1.
std::pair<Rational, Rational> power_coeffs_closed(const QuadElement& e, std::int64_t n);

}  // namespace quadfib
