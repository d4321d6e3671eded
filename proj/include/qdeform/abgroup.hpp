// Free abelian groups Z^m, their characters, and bilinear 2-cocycles with
// values in the multiplicative group of the scalar field, together with the
// cochain/coboundary calculus used for equivalence testing, and exact integer
// lattice solvers (Smith normal form, multiplicative power systems).
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qdeform/scalar.hpp"

namespace qdeform {

// An element of Z^m, written additively.
using grp = std::vector<long>;

grp grp_zero(size_t m);
grp grp_add(const grp& a, const grp& b);
grp grp_neg(const grp& a);
grp grp_sub(const grp& a, const grp& b);
grp grp_unit(size_t m, size_t i);  // i-th standard generator
bool grp_is_zero(const grp& a);
std::string grp_str(const grp& a);
size_t grp_hash(const grp& a);

// A character of Z^m with unit values, given by its values on the standard
// generators.
class character {
 public:
  character() = default;
  explicit character(std::vector<scalar> gen_values);

  size_t rank() const { return v_.size(); }
  const scalar& value(size_t i) const { return v_.at(i); }
  scalar eval(const grp& a) const;
  bool is_trivial() const;

  character operator*(const character& o) const;
  character inverse() const;
  bool operator==(const character& o) const { return v_ == o.v_; }
  bool operator!=(const character& o) const { return !(*this == o); }

 private:
  std::vector<scalar> v_;
};

// A bilinear 2-cocycle on Z^m with values in the unit group of R:
//   sigma(a, b) = prod_{r,s} entry(r,s)^{a_r b_s}.
// Every entry must be a unit.  Bilinearity makes the cocycle identity and the
// normalization sigma(0,a) = sigma(a,0) = 1 automatic.
template <class R>
class bilinear_form {
 public:
  bilinear_form() = default;
  explicit bilinear_form(size_t m) : b_(m, std::vector<R>(m, R(1L))) {}
  explicit bilinear_form(std::vector<std::vector<R>> entries) : b_(std::move(entries)) {
    for (const auto& row : b_)
      if (row.size() != b_.size()) throw std::invalid_argument("bilinear_form: matrix not square");
  }

  // Cocycle with entry(j, i) = u[i][j] for i < j and all other entries 1, so
  // that skew(i, j) = u[i][j].  Only the strictly upper triangle of u is read.
  static bilinear_form from_skew(const std::vector<std::vector<R>>& u) {
    bilinear_form s(u.size());
    for (size_t i = 0; i < u.size(); ++i) {
      if (u[i].size() != u.size()) throw std::invalid_argument("from_skew: matrix not square");
      for (size_t j = i + 1; j < u.size(); ++j) s.b_[j][i] = u[i][j];
    }
    return s;
  }

  size_t rank() const { return b_.size(); }
  const R& entry(size_t i, size_t j) const { return b_.at(i).at(j); }
  R& entry(size_t i, size_t j) { return b_.at(i).at(j); }

  R eval(const grp& a, const grp& b) const {
    if (a.size() != b_.size() || b.size() != b_.size())
      throw std::invalid_argument("bilinear_form::eval: rank mismatch");
    R acc(1L);
    for (size_t r = 0; r < a.size(); ++r) {
      if (a[r] == 0) continue;
      for (size_t s = 0; s < b.size(); ++s) {
        if (b[s] == 0) continue;
        acc *= b_[r][s].pow(a[r] * b[s]);
      }
    }
    return acc;
  }

  // The complete equivalence invariant: skew(i, j) = entry(j, i) / entry(i, j).
  R skew(size_t i, size_t j) const { return entry(j, i) / entry(i, j); }

  bool is_symmetric() const {
    for (size_t i = 0; i < rank(); ++i)
      for (size_t j = i + 1; j < rank(); ++j)
        if (!(b_[i][j] == b_[j][i])) return false;
    return true;
  }

  bilinear_form operator*(const bilinear_form& o) const {
    if (rank() != o.rank()) throw std::invalid_argument("bilinear_form: rank mismatch");
    bilinear_form r = *this;
    for (size_t i = 0; i < rank(); ++i)
      for (size_t j = 0; j < rank(); ++j) r.b_[i][j] *= o.b_[i][j];
    return r;
  }

  bilinear_form inverse() const {
    bilinear_form r = *this;
    for (auto& row : r.b_)
      for (auto& e : row) e = e.inverse();
    return r;
  }

  bool operator==(const bilinear_form& o) const { return b_ == o.b_; }
  bool operator!=(const bilinear_form& o) const { return !(*this == o); }

 private:
  std::vector<std::vector<R>> b_;
};

using bilinear_cocycle = bilinear_form<scalar>;

// A normalized 1-cochain of "quadratic" shape with unit values:
//   eta(a) = prod_i w_i^{a_i} * prod_{i<j} S_ij^{a_i a_j}
//          * prod_i S_ii^{a_i (a_i - 1) / 2}.
// Its coboundary eta(a) eta(b) eta(a+b)^{-1} is the symmetric bilinear
// cocycle with entries S_ij^{-1}; the linear part w drops out.
class one_cochain {
 public:
  one_cochain() = default;
  one_cochain(std::vector<scalar> w, std::vector<std::vector<scalar>> s);

  size_t rank() const { return w_.size(); }
  scalar eval(const grp& a) const;
  bilinear_cocycle coboundary() const;

 private:
  std::vector<scalar> w_;
  std::vector<std::vector<scalar>> s_;  // symmetric
};

// If sigma2 = sigma * d(eta) for some quadratic cochain eta, return such an
// eta; otherwise nullopt.  Two bilinear cocycles are related this way exactly
// when their skew invariants agree.
std::optional<one_cochain> cohomologous(const bilinear_cocycle& sigma,
                                        const bilinear_cocycle& sigma2);

// ---------------------------------------------------------------------------
// Integer matrices and lattice solving.

using imat = std::vector<std::vector<bigint>>;

imat imat_identity(size_t n);
imat imat_mul(const imat& a, const imat& b);

// Smith normal form: fills u (n x n), v (m x m) unimodular and d (n x m)
// diagonal with d = u * a * v and d[0][0] | d[1][1] | ..., diagonal entries
// non-negative.
void smith_normal_form(const imat& a, imat& u, imat& v, imat& d);

// Solve prod_k w_k^{a[i][k]} = rhs[i] for units w_k, exactly.  Returns one
// solution or nullopt when none exists (free choices are set to 1).
std::optional<std::vector<scalar>> solve_power_system(const imat& a,
                                                      const std::vector<scalar>& rhs);

}  // namespace qdeform
