// Elements of Q(q): fractions of polynomials kept in a canonical form so
// that structural equality is exact field equality.
//
// Canonical form: numerator and denominator are coprime in Q[q]; the
// denominator has integer coefficients, content 1 and positive leading
// coefficient (the numerator may carry rational coefficients).  The zero
// element is 0/1.
#pragma once

#include <optional>
#include <string>

#include "qdeform/poly.hpp"

namespace qdeform {

class scalar {
 public:
  scalar() : num_(), den_(1L) {}
  scalar(long n) : num_(n), den_(1L) {}
  scalar(const rat& r) : num_(r), den_(1L) {}
  scalar(const qpoly& num, const qpoly& den);

  static scalar q() { return scalar(qpoly::variable(), qpoly(1L)); }
  static scalar q_pow(long e);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_unit() const { return !is_zero(); }
  const qpoly& num() const { return num_; }
  const qpoly& den() const { return den_; }

  scalar& operator+=(const scalar& o);
  scalar& operator-=(const scalar& o);
  scalar& operator*=(const scalar& o);
  scalar& operator/=(const scalar& o);  // std::domain_error on division by zero
  friend scalar operator+(scalar a, const scalar& b) { return a += b; }
  friend scalar operator-(scalar a, const scalar& b) { return a -= b; }
  friend scalar operator*(scalar a, const scalar& b) { return a *= b; }
  friend scalar operator/(scalar a, const scalar& b) { return a /= b; }
  scalar operator-() const;
  friend bool operator==(const scalar& a, const scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const scalar& a, const scalar& b) { return !(a == b); }

  scalar inverse() const;  // std::domain_error on zero
  scalar pow(long e) const;

  // Evaluation at a rational point; std::domain_error if q0 is a pole.
  rat specialize(const rat& q0) const;

  // True when the value lies in Q; fills *out when given.
  bool is_constant(rat* out = nullptr) const;

  // Serialization: integer-coefficient fraction such as "(q^2-1)/(q)";
  // plain polynomial when the denominator is 1.  parse(str(x)) == x.
  std::string str() const;
  // Accepts +,-,*,/,^, parentheses, integers and the variable q, including
  // negative exponents ("q^-1") and implicit multiplication ("2q").
  // Throws std::invalid_argument on malformed input.
  static scalar parse(const std::string& text);

  size_t hash() const;

 private:
  void canon();
  qpoly num_, den_;
};

// (l)_t = 1 + t + ... + t^(l-1); l must be >= 0.
scalar q_integer(long l, const scalar& t);

// Symmetric bracket [m]_t = (t^m - t^-m)/(t - t^-1); t must be a unit with
// t^2 != 1 (otherwise std::domain_error).
scalar q_bracket(long m, const scalar& t);

// Gauss binomial built from brackets: [m r]_t = [m][m-1]...[m-r+1] / [r]!,
// with [m 0] = 1.  Requires 0 <= r <= m (std::invalid_argument otherwise).
scalar gauss_binomial(long m, long r, const scalar& t);

// Exact d-th root in Q(q)^x when one exists (via square-free decomposition).
std::optional<scalar> nth_root(const scalar& f, unsigned d);
bool is_square(const scalar& f);

}  // namespace qdeform
