// Dense univariate polynomials over Q in the deformation variable q.
// Values are kept with no trailing zero coefficients, so the zero polynomial
// is the empty coefficient vector and structural equality is exact equality.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "qdeform/rat.hpp"

namespace qdeform {

class qpoly {
 public:
  qpoly() = default;
  qpoly(long n);                 // constant
  qpoly(const rat& r);           // constant
  explicit qpoly(std::vector<rat> coeffs);  // coeffs[i] multiplies q^i

  static qpoly variable();  // q
  static qpoly monomial(const rat& c, unsigned deg);

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1 by convention.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  rat coeff(unsigned i) const;
  const rat& leading() const;  // throws std::domain_error on zero

  qpoly& operator+=(const qpoly& o);
  qpoly& operator-=(const qpoly& o);
  qpoly& operator*=(const qpoly& o);
  friend qpoly operator+(qpoly a, const qpoly& b) { return a += b; }
  friend qpoly operator-(qpoly a, const qpoly& b) { return a -= b; }
  friend qpoly operator*(qpoly a, const qpoly& b) { return a *= b; }
  qpoly operator-() const;
  friend bool operator==(const qpoly& a, const qpoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const qpoly& a, const qpoly& b) { return !(a == b); }

  rat eval(const rat& x) const;
  qpoly derivative() const;
  qpoly pow(unsigned e) const;

  // Euclidean division a = quo*b + rem with deg rem < deg b; b must be nonzero.
  static void divmod(const qpoly& a, const qpoly& b, qpoly& quo, qpoly& rem);
  // Monic gcd (zero if both inputs are zero).
  static qpoly gcd(qpoly a, qpoly b);

  // Writes *this = factor * P with P an integer-coefficient polynomial of
  // content 1 and positive leading coefficient; returns factor (0 for zero).
  rat int_normalize(qpoly& primitive_out) const;

  // Square-free (Yun) decomposition of a nonzero polynomial:
  // *this = lead * prod_k parts[k]^k with each parts[k] monic square-free,
  // pairwise coprime (parts[k] may be 1).  Returns lead.
  rat squarefree_decompose(std::vector<qpoly>& parts) const;

  // "q^2-1", "2*q^3+q-5" style; "0" for zero.  Coefficients print as
  // rationals when they are not integers.
  std::string str() const;

  size_t hash() const;

 private:
  void trim();
  std::vector<rat> c_;
};

}  // namespace qdeform
