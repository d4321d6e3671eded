// The square-zero ring extension k (+) M of the scalar field by a finite
// dimensional vector space M, together with the additive cocycle calculus
// that mirrors the multiplicative one: a unit 1 + s of k (+) M with s
// bilinear is a multiplicative 2-cocycle precisely because M * M = 0.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qdeform/abgroup.hpp"
#include "qdeform/scalar.hpp"

namespace qdeform {

// An element of the coefficient space M.  Coordinates are scalars; trailing
// zeros are trimmed so vectors of different nominal dimension compare equal
// when they agree as elements of the colimit.
class mvec {
 public:
  mvec() = default;
  explicit mvec(std::vector<scalar> coords);
  static mvec unit(size_t i);  // i-th coordinate vector

  bool is_zero() const { return c_.empty(); }
  size_t dim() const { return c_.size(); }  // index of last nonzero + 1
  scalar coord(size_t i) const;

  mvec& operator+=(const mvec& o);
  mvec& operator-=(const mvec& o);
  mvec& operator*=(const scalar& a);
  mvec operator+(const mvec& o) const { mvec r = *this; r += o; return r; }
  mvec operator-(const mvec& o) const { mvec r = *this; r -= o; return r; }
  mvec operator*(const scalar& a) const { mvec r = *this; r *= a; return r; }
  mvec operator-() const;
  bool operator==(const mvec& o) const { return c_ == o.c_; }
  bool operator!=(const mvec& o) const { return !(*this == o); }

  std::string str() const;
  size_t hash() const;

 private:
  void trim();
  std::vector<scalar> c_;
};

inline mvec operator*(const scalar& a, const mvec& u) { return u * a; }

// An element a (+) u of the square-zero extension k (+) M, with product
// (a, u)(b, v) = (ab, av + bu).  Units are the elements with nonzero body.
class km {
 public:
  km() = default;
  km(long n) : body_(n) {}
  km(const rat& r) : body_(r) {}
  km(const scalar& a) : body_(a) {}
  km(scalar body, mvec soul) : body_(std::move(body)), soul_(std::move(soul)) {}
  static km eps(size_t i) { return km(scalar(0L), mvec::unit(i)); }  // 0 (+) e_i

  const scalar& body() const { return body_; }
  const mvec& soul() const { return soul_; }

  bool is_zero() const { return body_.is_zero() && soul_.is_zero(); }
  bool is_one() const { return body_.is_one() && soul_.is_zero(); }
  bool is_unit() const { return !body_.is_zero(); }

  km& operator+=(const km& o);
  km& operator-=(const km& o);
  km& operator*=(const km& o);
  km& operator/=(const km& o);
  km operator+(const km& o) const { km r = *this; r += o; return r; }
  km operator-(const km& o) const { km r = *this; r -= o; return r; }
  km operator*(const km& o) const { km r = *this; r *= o; return r; }
  km operator/(const km& o) const { km r = *this; r /= o; return r; }
  km operator-() const { return km(-body_, -soul_); }
  bool operator==(const km& o) const { return body_ == o.body_ && soul_ == o.soul_; }
  bool operator!=(const km& o) const { return !(*this == o); }

  km inverse() const;  // (a^-1, -a^-2 u); throws for non-units
  km pow(long e) const;

  std::string str() const;
  size_t hash() const { return body_.hash() * 31 + soul_.hash(); }

 private:
  scalar body_;
  mvec soul_;
};

// An additive M-valued bilinear form on Z^m:
//   s(a, b) = sum_{r,s} a_r b_s entry(r,s).
class add_bilinear {
 public:
  add_bilinear() = default;
  explicit add_bilinear(size_t m) : s_(m, std::vector<mvec>(m)) {}
  explicit add_bilinear(std::vector<std::vector<mvec>> entries);

  size_t rank() const { return s_.size(); }
  const mvec& entry(size_t i, size_t j) const { return s_.at(i).at(j); }
  mvec& entry(size_t i, size_t j) { return s_.at(i).at(j); }

  mvec eval(const grp& a, const grp& b) const;
  mvec skew(size_t i, size_t j) const { return entry(j, i) - entry(i, j); }
  bool is_symmetric() const;
  bool is_zero() const;

  add_bilinear operator+(const add_bilinear& o) const;
  add_bilinear operator-(const add_bilinear& o) const;
  add_bilinear operator-() const;
  bool operator==(const add_bilinear& o) const { return s_ == o.s_; }
  bool operator!=(const add_bilinear& o) const { return !(*this == o); }

  // The corresponding unit-valued multiplicative cocycle 1 + s over k (+) M.
  bilinear_form<km> one_plus() const;

 private:
  std::vector<std::vector<mvec>> s_;
};

// The additive mirror of the quadratic 1-cochain:
//   t(a) = sum_i a_i w_i + sum_{i<j} a_i a_j S_ij + sum_i a_i(a_i-1)/2 S_ii,
// with coboundary t(a) + t(b) - t(a+b) bilinear with entries -S_ij.
class add_cochain {
 public:
  add_cochain() = default;
  add_cochain(std::vector<mvec> w, std::vector<std::vector<mvec>> s);

  size_t rank() const { return w_.size(); }
  const mvec& linear(size_t i) const { return w_.at(i); }
  mvec eval(const grp& a) const;
  add_bilinear coboundary() const;

 private:
  std::vector<mvec> w_;
  std::vector<std::vector<mvec>> s_;  // symmetric
};

// Additive analogue of cohomologous(): a witness t with s2 = s + dt exists
// exactly when s2 - s is symmetric.
std::optional<add_cochain> add_cohomologous(const add_bilinear& s, const add_bilinear& s2);

}  // namespace qdeform
