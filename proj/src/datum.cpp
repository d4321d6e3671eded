#include "qdeform/datum.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qdeform {

scalar pair_get(const pair_map& m, size_t i, size_t j) {
  auto it = m.find({i, j});
  return it == m.end() ? scalar(0L) : it->second;
}

bool supported_on(const pair_map& m, const std::vector<pair_key>& allowed) {
  for (const auto& [key, val] : m) {
    if (val.is_zero()) continue;
    bool ok = false;
    for (const auto& a : allowed)
      if (a == key) ok = true;
    if (!ok) return false;
  }
  return true;
}

datum::datum(size_t group_rank, std::vector<grp> degrees, std::vector<character> chars,
             std::vector<size_t> blocks)
    : m_(group_rank), g_(std::move(degrees)), chi_(std::move(chars)), block_(std::move(blocks)) {
  size_t n = g_.size();
  if (chi_.size() != n || block_.size() != n)
    throw std::invalid_argument("datum: letter data sizes disagree");
  for (const auto& d : g_)
    if (d.size() != m_) throw std::invalid_argument("datum: degree rank mismatch");
  for (const auto& c : chi_)
    if (c.rank() != m_) throw std::invalid_argument("datum: character rank mismatch");
  for (size_t i = 0; i < n; ++i) {
    if (i == 0 && block_[0] != 0)
      throw std::invalid_argument("datum: blocks must start at 0");
    if (i > 0 && block_[i] != block_[i - 1] && block_[i] != block_[i - 1] + 1)
      throw std::invalid_argument("datum: blocks must be consecutive and non-decreasing");
  }
  q_.assign(n, std::vector<scalar>(n, scalar(0L)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) q_[i][j] = chi_[j].eval(g_[i]);
  labels_.reserve(n);
  for (size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
}

void datum::set_labels(std::vector<std::string> labels) {
  if (labels.size() != size())
    throw std::invalid_argument("datum: one label per letter required");
  labels_ = std::move(labels);
}

std::vector<pair_key> datum::theta() const {
  std::vector<pair_key> r;
  for (size_t i = 0; i < size(); ++i)
    for (size_t j = 0; j < size(); ++j)
      if (block(i) > block(j)) r.push_back({i, j});
  return r;
}

std::vector<pair_key> datum::xi() const {
  std::vector<pair_key> r;
  for (const auto& [i, j] : theta())
    if ((chi_[i] * chi_[j]).is_trivial()) r.push_back({i, j});
  return r;
}

character datum::cocycle_character(const bilinear_cocycle& sigma, size_t i) const {
  if (sigma.rank() != m_) throw std::invalid_argument("cocycle_character: rank mismatch");
  std::vector<scalar> v(m_, scalar(1L));
  for (size_t r = 0; r < m_; ++r) {
    grp er = grp_unit(m_, r);
    v[r] = sigma.eval(er, g_[i]) / sigma.eval(g_[i], er);
  }
  return character(std::move(v));
}

datum datum::deform(const bilinear_cocycle& sigma) const {
  std::vector<character> chars;
  chars.reserve(size());
  for (size_t i = 0; i < size(); ++i) chars.push_back(chi_[i] * cocycle_character(sigma, i));
  return datum(m_, g_, std::move(chars), block_);
}

std::vector<pair_key> datum::xi_sigma(const bilinear_cocycle& sigma) const {
  std::vector<character> s;
  s.reserve(size());
  for (size_t i = 0; i < size(); ++i) s.push_back(cocycle_character(sigma, i));
  std::vector<pair_key> r;
  for (const auto& [i, j] : theta())
    if (chi_[i] * chi_[j] == s[i] * s[j]) r.push_back({i, j});
  return r;
}

void datum::validate() const {
  for (size_t i = 0; i < size(); ++i) {
    if (braiding(i, i).is_one())
      throw std::domain_error("datum: q_ii = 1 at letter " + std::to_string(i));
    for (size_t j = 0; j < size(); ++j)
      if (!same_block(i, j) && !(braiding(i, j) * braiding(j, i)).is_one())
        throw std::domain_error("datum: letters " + std::to_string(i) + "," +
                                std::to_string(j) +
                                " in distinct blocks must satisfy q_ij q_ji = 1");
  }
}

std::vector<size_t> datum::block_letters(size_t b) const {
  std::vector<size_t> r;
  for (size_t i = 0; i < size(); ++i)
    if (block(i) == b) r.push_back(i);
  return r;
}

std::vector<std::vector<long>> datum::block_cartan(size_t b) const {
  auto letters = block_letters(b);
  size_t k = letters.size();
  std::vector<std::vector<long>> a(k, std::vector<long>(k, 2));
  for (size_t r = 0; r < k; ++r)
    for (size_t s = 0; s < k; ++s) {
      if (r == s) continue;
      size_t i = letters[r], j = letters[s];
      scalar prod = braiding(i, j) * braiding(j, i);
      bool found = false;
      for (long e = 0; e >= -7; --e)
        if (prod == braiding(i, i).pow(e)) {
          a[r][s] = e;
          found = true;
          break;
        }
      if (!found)
        throw std::domain_error("datum: block " + std::to_string(b) +
                                " is not of finite Cartan type (letters " +
                                std::to_string(i) + "," + std::to_string(j) + ")");
    }
  return a;
}

bool datum::operator==(const datum& o) const {
  return m_ == o.m_ && g_ == o.g_ && chi_ == o.chi_ && block_ == o.block_;
}

bool cartan_report::all_pass() const {
  for (const auto& c : conditions)
    if (!c.pass) return false;
  return true;
}

const cartan_condition& cartan_report::find(const std::string& name) const {
  for (const auto& c : conditions)
    if (c.name == name) return c;
  throw std::invalid_argument("cartan_report: no condition named " + name);
}

namespace {

// Nonzero test, after specialization when a base value is supplied.
bool nonzero(const scalar& s, const rat* q0) {
  if (q0 == nullptr) return !s.is_zero();
  return s.specialize(*q0) != 0;
}

std::string pair_tag(const datum& d, size_t i, size_t j) {
  return "(" + d.label(i) + "," + d.label(j) + ")";
}

}  // namespace

cartan_report cartan_checks(const datum& d, const std::vector<std::vector<long>>& gcm,
                            const std::vector<long>* sym, const rat* q0) {
  size_t n = d.size();
  if (gcm.size() != n)
    throw std::invalid_argument("cartan_checks: Cartan matrix must be indexed by letters");
  for (const auto& row : gcm)
    if (row.size() != n)
      throw std::invalid_argument("cartan_checks: Cartan matrix must be square");
  if (sym != nullptr) {
    if (sym->size() != n)
      throw std::invalid_argument("cartan_checks: one symmetrizer entry per letter");
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if ((*sym)[i] * gcm[i][j] != (*sym)[j] * gcm[j][i])
          throw std::invalid_argument("cartan_checks: symmetrizer fails d_i a_ij = d_j a_ji");
  }
  if (q0 != nullptr && *q0 == 0)
    throw std::invalid_argument("cartan_checks: base value must be nonzero");

  cartan_report rep;

  cartan_condition ctype{"cartan-type", true, ""};
  for (size_t i = 0; i < n && ctype.pass; ++i)
    for (size_t j = 0; j < n; ++j) {
      scalar lhs = d.braiding(i, j) * d.braiding(j, i);
      scalar rhs = d.braiding(i, i).pow(gcm[i][j]);
      bool ok = (q0 == nullptr) ? lhs == rhs : lhs.specialize(*q0) == rhs.specialize(*q0);
      if (!ok) {
        ctype.pass = false;
        ctype.detail = "q_ij q_ji != q_ii^a_ij at " + pair_tag(d, i, j);
        break;
      }
    }
  rep.conditions.push_back(ctype);

  cartan_condition diag{"diagonal-not-one", true, ""};
  for (size_t i = 0; i < n; ++i)
    if (!nonzero(d.braiding(i, i) - scalar(1L), q0)) {
      diag.pass = false;
      diag.detail = "q_ii = 1 at letter " + d.label(i);
      break;
    }
  rep.conditions.push_back(diag);

  cartan_condition qint{"q-integers-invertible", true, ""};
  for (size_t i = 0; i < n && qint.pass; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j || !d.same_block(i, j)) continue;
      for (long l = 1; l <= -gcm[i][j]; ++l)
        if (!nonzero(q_integer(l, d.braiding(i, i)), q0)) {
          qint.pass = false;
          qint.detail = "(" + std::to_string(l) + ")_{q_ii} = 0 at " + pair_tag(d, i, j);
          break;
        }
      if (!qint.pass) break;
    }
  rep.conditions.push_back(qint);

  cartan_condition det{"block-determinant", true, ""};
  for (size_t i = 0; i < n && det.pass; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j || !d.same_block(i, j)) continue;
      scalar v = d.braiding(i, i) * d.braiding(j, j) - d.braiding(i, j) * d.braiding(j, i);
      if (!nonzero(v, q0)) {
        det.pass = false;
        det.detail = "q_ii q_jj = q_ij q_ji at " + pair_tag(d, i, j);
        break;
      }
    }
  rep.conditions.push_back(det);

  if (sym != nullptr) {
    // ord(q_i^2) must exceed every -a_ij (and 1); automatic at formal q.
    cartan_condition ord{"power-order", true, ""};
    if (q0 != nullptr) {
      for (size_t i = 0; i < n && ord.pass; ++i) {
        long bound = 1;
        for (size_t j = 0; j < n; ++j)
          if (j != i && d.same_block(i, j)) bound = std::max(bound, -gcm[i][j]);
        rat qi = rat_pow(*q0, (*sym)[i]);
        for (long l = 1; l <= bound; ++l)
          if (rat_pow(qi, 2 * l) == 1) {
            ord.pass = false;
            ord.detail = "q_i^2 has order <= " + std::to_string(l) + " at letter " + d.label(i);
            break;
          }
      }
    }
    rep.conditions.push_back(ord);

    cartan_condition sep{"determinant-exponent", true, ""};
    for (size_t i = 0; i < n && sep.pass; ++i)
      for (size_t j = 0; j < n; ++j) {
        if (i == j || !d.same_block(i, j)) continue;
        long e = 2 * ((*sym)[i] + (*sym)[j] - (*sym)[i] * gcm[i][j]);
        bool ok = (q0 == nullptr) ? e != 0 : rat_pow(*q0, e) != 1;
        if (!ok) {
          sep.pass = false;
          sep.detail = "q^{2(d_i+d_j-d_i a_ij)} = 1 at " + pair_tag(d, i, j);
          break;
        }
      }
    rep.conditions.push_back(sep);
  }

  return rep;
}

}  // namespace qdeform
