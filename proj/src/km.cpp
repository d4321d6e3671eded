#include "qdeform/km.hpp"

#include <sstream>
#include <stdexcept>

namespace qdeform {

// ---------------------------------------------------------------------------
// mvec

mvec::mvec(std::vector<scalar> coords) : c_(std::move(coords)) { trim(); }

mvec mvec::unit(size_t i) {
  mvec r;
  r.c_.assign(i + 1, scalar(0L));
  r.c_[i] = scalar(1L);
  return r;
}

void mvec::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

scalar mvec::coord(size_t i) const { return i < c_.size() ? c_[i] : scalar(0L); }

mvec& mvec::operator+=(const mvec& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), scalar(0L));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

mvec& mvec::operator-=(const mvec& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), scalar(0L));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

mvec& mvec::operator*=(const scalar& a) {
  if (a.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= a;
  return *this;
}

mvec mvec::operator-() const {
  mvec r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

std::string mvec::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ", ";
    os << c_[i].str();
  }
  os << "]";
  return os.str();
}

size_t mvec::hash() const {
  size_t h = 1469598103934665603ull;
  for (const auto& x : c_) {
    h ^= x.hash();
    h *= 1099511628211ull;
  }
  return h;
}

// ---------------------------------------------------------------------------
// km

km& km::operator+=(const km& o) {
  body_ += o.body_;
  soul_ += o.soul_;
  return *this;
}

km& km::operator-=(const km& o) {
  body_ -= o.body_;
  soul_ -= o.soul_;
  return *this;
}

km& km::operator*=(const km& o) {
  soul_ = soul_ * o.body_ + o.soul_ * body_;
  body_ *= o.body_;
  return *this;
}

km& km::operator/=(const km& o) { return *this *= o.inverse(); }

km km::inverse() const {
  if (body_.is_zero()) throw std::domain_error("km::inverse: body is zero");
  scalar binv = body_.inverse();
  return km(binv, -(soul_ * (binv * binv)));
}

km km::pow(long e) const {
  if (e == 0) return km(1L);
  const km base = e < 0 ? inverse() : *this;
  unsigned long mag = e < 0 ? -static_cast<unsigned long>(e) : e;
  km acc(1L), sq = base;
  while (mag) {
    if (mag & 1) acc *= sq;
    sq *= sq;
    mag >>= 1;
  }
  return acc;
}

std::string km::str() const {
  if (soul_.is_zero()) return body_.str();
  return body_.str() + " (+) " + soul_.str();
}

// ---------------------------------------------------------------------------
// add_bilinear

add_bilinear::add_bilinear(std::vector<std::vector<mvec>> entries) : s_(std::move(entries)) {
  for (const auto& row : s_)
    if (row.size() != s_.size()) throw std::invalid_argument("add_bilinear: matrix not square");
}

mvec add_bilinear::eval(const grp& a, const grp& b) const {
  if (a.size() != s_.size() || b.size() != s_.size())
    throw std::invalid_argument("add_bilinear::eval: rank mismatch");
  mvec acc;
  for (size_t r = 0; r < a.size(); ++r) {
    if (a[r] == 0) continue;
    for (size_t s = 0; s < b.size(); ++s) {
      if (b[s] == 0) continue;
      acc += s_[r][s] * scalar(a[r] * b[s]);
    }
  }
  return acc;
}

bool add_bilinear::is_symmetric() const {
  for (size_t i = 0; i < rank(); ++i)
    for (size_t j = i + 1; j < rank(); ++j)
      if (s_[i][j] != s_[j][i]) return false;
  return true;
}

bool add_bilinear::is_zero() const {
  for (const auto& row : s_)
    for (const auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

add_bilinear add_bilinear::operator+(const add_bilinear& o) const {
  if (rank() != o.rank()) throw std::invalid_argument("add_bilinear: rank mismatch");
  add_bilinear r = *this;
  for (size_t i = 0; i < rank(); ++i)
    for (size_t j = 0; j < rank(); ++j) r.s_[i][j] += o.s_[i][j];
  return r;
}

add_bilinear add_bilinear::operator-(const add_bilinear& o) const {
  if (rank() != o.rank()) throw std::invalid_argument("add_bilinear: rank mismatch");
  add_bilinear r = *this;
  for (size_t i = 0; i < rank(); ++i)
    for (size_t j = 0; j < rank(); ++j) r.s_[i][j] -= o.s_[i][j];
  return r;
}

add_bilinear add_bilinear::operator-() const {
  add_bilinear r = *this;
  for (auto& row : r.s_)
    for (auto& e : row) e = -e;
  return r;
}

bilinear_form<km> add_bilinear::one_plus() const {
  bilinear_form<km> b(rank());
  for (size_t i = 0; i < rank(); ++i)
    for (size_t j = 0; j < rank(); ++j) b.entry(i, j) = km(scalar(1L), s_[i][j]);
  return b;
}

// ---------------------------------------------------------------------------
// add_cochain

add_cochain::add_cochain(std::vector<mvec> w, std::vector<std::vector<mvec>> s)
    : w_(std::move(w)), s_(std::move(s)) {
  if (s_.size() != w_.size()) throw std::invalid_argument("add_cochain: size mismatch");
  for (size_t i = 0; i < s_.size(); ++i) {
    if (s_[i].size() != s_.size()) throw std::invalid_argument("add_cochain: matrix not square");
    for (size_t j = i + 1; j < s_.size(); ++j)
      if (s_[i][j] != s_[j][i]) throw std::invalid_argument("add_cochain: matrix not symmetric");
  }
}

mvec add_cochain::eval(const grp& a) const {
  if (a.size() != w_.size()) throw std::invalid_argument("add_cochain::eval: rank mismatch");
  mvec acc;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) acc += w_[i] * scalar(a[i]);
    if (a[i] * (a[i] - 1) != 0) acc += s_[i][i] * scalar(a[i] * (a[i] - 1) / 2);
    for (size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * a[j] != 0) acc += s_[i][j] * scalar(a[i] * a[j]);
  }
  return acc;
}

add_bilinear add_cochain::coboundary() const {
  add_bilinear b(rank());
  for (size_t i = 0; i < rank(); ++i)
    for (size_t j = 0; j < rank(); ++j) b.entry(i, j) = -s_[i][j];
  return b;
}

std::optional<add_cochain> add_cohomologous(const add_bilinear& s, const add_bilinear& s2) {
  if (s.rank() != s2.rank()) throw std::invalid_argument("add_cohomologous: rank mismatch");
  add_bilinear diff = s2 - s;
  if (!diff.is_symmetric()) return std::nullopt;
  size_t m = s.rank();
  std::vector<std::vector<mvec>> mat(m, std::vector<mvec>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) mat[i][j] = -diff.entry(i, j);
  return add_cochain(std::vector<mvec>(m), std::move(mat));
}

}  // namespace qdeform
