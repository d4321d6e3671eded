#include "qdeform/abgroup.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace qdeform {

grp grp_zero(size_t m) { return grp(m, 0); }

grp grp_add(const grp& a, const grp& b) {
  if (a.size() != b.size()) throw std::invalid_argument("grp_add: rank mismatch");
  grp r = a;
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

grp grp_neg(const grp& a) {
  grp r = a;
  for (auto& x : r) x = -x;
  return r;
}

grp grp_sub(const grp& a, const grp& b) { return grp_add(a, grp_neg(b)); }

grp grp_unit(size_t m, size_t i) {
  if (i >= m) throw std::invalid_argument("grp_unit: index out of range");
  grp r(m, 0);
  r[i] = 1;
  return r;
}

bool grp_is_zero(const grp& a) {
  for (long x : a)
    if (x != 0) return false;
  return true;
}

std::string grp_str(const grp& a) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) os << ",";
    os << a[i];
  }
  os << ")";
  return os.str();
}

size_t grp_hash(const grp& a) {
  size_t h = 1469598103934665603ull;
  for (long x : a) {
    h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

// ---------------------------------------------------------------------------
// character

character::character(std::vector<scalar> gen_values) : v_(std::move(gen_values)) {
  for (const auto& v : v_)
    if (v.is_zero()) throw std::domain_error("character: values must be units");
}

scalar character::eval(const grp& a) const {
  if (a.size() != v_.size()) throw std::invalid_argument("character::eval: rank mismatch");
  scalar acc(1L);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) acc *= v_[i].pow(a[i]);
  return acc;
}

bool character::is_trivial() const {
  for (const auto& v : v_)
    if (!v.is_one()) return false;
  return true;
}

character character::operator*(const character& o) const {
  if (rank() != o.rank()) throw std::invalid_argument("character: rank mismatch");
  std::vector<scalar> v = v_;
  for (size_t i = 0; i < v.size(); ++i) v[i] *= o.v_[i];
  return character(std::move(v));
}

character character::inverse() const {
  std::vector<scalar> v = v_;
  for (auto& x : v) x = x.inverse();
  return character(std::move(v));
}

// ---------------------------------------------------------------------------
// one_cochain

one_cochain::one_cochain(std::vector<scalar> w, std::vector<std::vector<scalar>> s)
    : w_(std::move(w)), s_(std::move(s)) {
  if (s_.size() != w_.size()) throw std::invalid_argument("one_cochain: size mismatch");
  for (size_t i = 0; i < s_.size(); ++i) {
    if (s_[i].size() != s_.size()) throw std::invalid_argument("one_cochain: matrix not square");
    for (size_t j = 0; j < s_.size(); ++j) {
      if (s_[i][j].is_zero()) throw std::domain_error("one_cochain: entries must be units");
      if (s_[i][j] != s_[j][i]) throw std::invalid_argument("one_cochain: matrix not symmetric");
    }
  }
  for (const auto& v : w_)
    if (v.is_zero()) throw std::domain_error("one_cochain: values must be units");
}

scalar one_cochain::eval(const grp& a) const {
  if (a.size() != w_.size()) throw std::invalid_argument("one_cochain::eval: rank mismatch");
  scalar acc(1L);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) acc *= w_[i].pow(a[i]);
    if (a[i] * (a[i] - 1) != 0) acc *= s_[i][i].pow(a[i] * (a[i] - 1) / 2);
    for (size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * a[j] != 0) acc *= s_[i][j].pow(a[i] * a[j]);
  }
  return acc;
}

bilinear_cocycle one_cochain::coboundary() const {
  bilinear_cocycle b(rank());
  for (size_t i = 0; i < rank(); ++i)
    for (size_t j = 0; j < rank(); ++j) b.entry(i, j) = s_[i][j].inverse();
  return b;
}

std::optional<one_cochain> cohomologous(const bilinear_cocycle& sigma,
                                        const bilinear_cocycle& sigma2) {
  if (sigma.rank() != sigma2.rank()) throw std::invalid_argument("cohomologous: rank mismatch");
  size_t m = sigma.rank();
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j)
      if (sigma.skew(i, j) != sigma2.skew(i, j)) return std::nullopt;
  // Equal skew parts make the entrywise ratio symmetric, so inverting it
  // gives a valid symmetric cochain matrix with d(eta) = sigma2 / sigma.
  std::vector<std::vector<scalar>> s(m, std::vector<scalar>(m, scalar(1L)));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      s[i][j] = (sigma2.entry(i, j) / sigma.entry(i, j)).inverse();
  std::vector<scalar> w(m, scalar(1L));
  return one_cochain(std::move(w), std::move(s));
}

// ---------------------------------------------------------------------------
// integer matrices

imat imat_identity(size_t n) {
  imat r(n, std::vector<bigint>(n, 0));
  for (size_t i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

imat imat_mul(const imat& a, const imat& b) {
  size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  imat r(n, std::vector<bigint>(m, 0));
  for (size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw std::invalid_argument("imat_mul: shape mismatch");
    for (size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  }
  return r;
}

void smith_normal_form(const imat& a, imat& u, imat& v, imat& d) {
  size_t n = a.size();
  size_t m = n ? a[0].size() : 0;
  for (const auto& row : a)
    if (row.size() != m) throw std::invalid_argument("smith_normal_form: ragged matrix");
  d = a;
  u = imat_identity(n);
  v = imat_identity(m);

  auto swap_rows = [&](size_t i, size_t j) {
    std::swap(d[i], d[j]);
    std::swap(u[i], u[j]);
  };
  auto swap_cols = [&](size_t i, size_t j) {
    for (auto& row : d) std::swap(row[i], row[j]);
    for (auto& row : v) std::swap(row[i], row[j]);
  };
  auto addmul_row = [&](size_t dst, size_t src, const bigint& f) {
    for (size_t j = 0; j < m; ++j) d[dst][j] += f * d[src][j];
    for (size_t j = 0; j < n; ++j) u[dst][j] += f * u[src][j];
  };
  auto addmul_col = [&](size_t dst, size_t src, const bigint& f) {
    for (size_t i = 0; i < n; ++i) d[i][dst] += f * d[i][src];
    for (size_t i = 0; i < m; ++i) v[i][dst] += f * v[i][src];
  };
  auto negate_row = [&](size_t i) {
    for (auto& x : d[i]) x = -x;
    for (auto& x : u[i]) x = -x;
  };

  size_t t = 0;
  while (t < n && t < m) {
    // locate a pivot of minimal absolute value in the trailing block
    size_t pi = t, pj = t;
    bool found = false;
    bigint best;
    for (size_t i = t; i < n; ++i)
      for (size_t j = t; j < m; ++j) {
        if (d[i][j] == 0) continue;
        bigint mag = abs(d[i][j]);
        if (!found || mag < best) {
          found = true;
          best = mag;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < n; ++i) {
        if (d[i][t] == 0) continue;
        bigint f = d[i][t] / d[t][t];  // truncated division
        addmul_row(i, t, -f);
        if (d[i][t] != 0) {
          // remainder is strictly smaller; promote it to the pivot
          swap_rows(t, i);
          clean = false;
        }
      }
      for (size_t j = t + 1; j < m; ++j) {
        if (d[t][j] == 0) continue;
        bigint f = d[t][j] / d[t][t];
        addmul_col(j, t, -f);
        if (d[t][j] != 0) {
          swap_cols(t, j);
          clean = false;
        }
      }
      if (clean) {
        // enforce the divisibility chain
        for (size_t i = t + 1; i < n && clean; ++i)
          for (size_t j = t + 1; j < m && clean; ++j)
            if (d[i][j] % d[t][t] != 0) {
              addmul_row(t, i, bigint(1));
              clean = false;
            }
      }
    }
    if (d[t][t] < 0) negate_row(t);
    ++t;
  }
}

std::optional<std::vector<scalar>> solve_power_system(const imat& a,
                                                      const std::vector<scalar>& rhs) {
  size_t n = a.size();
  size_t m = n ? a[0].size() : 0;
  if (rhs.size() != n) throw std::invalid_argument("solve_power_system: size mismatch");
  for (const auto& r : rhs)
    if (r.is_zero()) throw std::domain_error("solve_power_system: right-hand sides must be units");
  imat u, v, d;
  smith_normal_form(a, u, v, d);

  auto pow_big = [](const scalar& base, const bigint& e) {
    if (!e.fits_slong_p()) throw std::domain_error("solve_power_system: exponent too large");
    return base.pow(e.get_si());
  };

  // transformed right-hand sides rho'_i = prod_j rhs_j^{u[i][j]}
  std::vector<scalar> rho(n, scalar(1L));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (u[i][j] != 0) rho[i] *= pow_big(rhs[j], u[i][j]);

  std::vector<scalar> y(m, scalar(1L));
  for (size_t i = 0; i < n; ++i) {
    bigint di = (i < m) ? d[i][i] : bigint(0);
    if (di == 0) {
      if (!rho[i].is_one()) return std::nullopt;
    } else {
      if (!di.fits_ulong_p()) throw std::domain_error("solve_power_system: pivot too large");
      auto root = nth_root(rho[i], static_cast<unsigned>(di.get_ui()));
      if (!root) return std::nullopt;
      y[i] = *root;
    }
  }

  std::vector<scalar> w(m, scalar(1L));
  for (size_t k = 0; k < m; ++k)
    for (size_t l = 0; l < m; ++l)
      if (v[k][l] != 0) w[k] *= pow_big(y[l], v[k][l]);

  // exact verification
  for (size_t i = 0; i < n; ++i) {
    scalar lhs(1L);
    for (size_t k = 0; k < m; ++k)
      if (a[i][k] != 0) lhs *= pow_big(w[k], a[i][k]);
    if (lhs != rhs[i]) return std::nullopt;
  }
  return w;
}

}  // namespace qdeform
