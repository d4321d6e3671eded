// Implementation of the exact Q(q) arithmetic layer: rationals, dense
// polynomials, canonical fractions, the fixed string grammar and the
// q-combinatorics (t-integers, brackets, Gauss binomials, exact roots).
#include "qdeform/scalar.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qdeform {

// ---------------------------------------------------------------------------
// rat helpers

rat rat_pow(const rat& a, long e) {
  if (e == 0) return rat(1);
  if (a == 0 && e < 0) throw std::domain_error("rat_pow: zero to negative power");
  unsigned long mag = e < 0 ? -static_cast<unsigned long>(e) : e;
  rat r;
  mpz_pow_ui(r.get_num_mpz_t(), a.get_num_mpz_t(), mag);
  mpz_pow_ui(r.get_den_mpz_t(), a.get_den_mpz_t(), mag);
  r.canonicalize();
  if (e < 0) return rat(1) / r;
  return r;
}

bool rat_nth_root(const rat& a, unsigned n, rat& out) {
  if (n == 0) throw std::invalid_argument("rat_nth_root: n must be positive");
  if (n == 1) { out = a; return true; }
  if (a == 0) { out = 0; return true; }
  if (a < 0 && n % 2 == 0) return false;
  bigint num = a.get_num(), den = a.get_den();
  bool neg = num < 0;
  if (neg) num = -num;
  bigint rn, rd;
  int exact_n = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n);
  int exact_d = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n);
  if (!exact_n || !exact_d) return false;
  out = rat(neg ? -rn : rn, rd);
  out.canonicalize();
  return true;
}

std::string rat_str(const rat& a) {
  std::ostringstream os;
  os << a;
  return os.str();
}

// ---------------------------------------------------------------------------
// qpoly

qpoly::qpoly(long n) {
  if (n != 0) c_.push_back(rat(n));
}

qpoly::qpoly(const rat& r) {
  if (r != 0) c_.push_back(r);
}

qpoly::qpoly(std::vector<rat> coeffs) : c_(std::move(coeffs)) { trim(); }

qpoly qpoly::variable() { return monomial(rat(1), 1); }

qpoly qpoly::monomial(const rat& c, unsigned deg) {
  qpoly p;
  if (c != 0) {
    p.c_.assign(deg + 1, rat(0));
    p.c_[deg] = c;
  }
  return p;
}

void qpoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

rat qpoly::coeff(unsigned i) const {
  return i < c_.size() ? c_[i] : rat(0);
}

const rat& qpoly::leading() const {
  if (c_.empty()) throw std::domain_error("qpoly::leading: zero polynomial");
  return c_.back();
}

qpoly& qpoly::operator+=(const qpoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), rat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

qpoly& qpoly::operator-=(const qpoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), rat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

qpoly& qpoly::operator*=(const qpoly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<rat> out(c_.size() + o.c_.size() - 1, rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      out[i + j] += c_[i] * o.c_[j];
    }
  }
  c_ = std::move(out);
  trim();
  return *this;
}

qpoly qpoly::operator-() const {
  qpoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

rat qpoly::eval(const rat& x) const {
  rat acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

qpoly qpoly::derivative() const {
  qpoly r;
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * rat(static_cast<long>(i));
  r.trim();
  return r;
}

qpoly qpoly::pow(unsigned e) const {
  qpoly acc(1L), base = *this;
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

void qpoly::divmod(const qpoly& a, const qpoly& b, qpoly& quo, qpoly& rem) {
  if (b.is_zero()) throw std::domain_error("qpoly::divmod: division by zero");
  quo = qpoly();
  rem = a;
  int db = b.degree();
  const rat& lb = b.leading();
  while (!rem.is_zero() && rem.degree() >= db) {
    unsigned shift = rem.degree() - db;
    rat c = rem.leading() / lb;
    qpoly t = monomial(c, shift);
    quo += t;
    rem -= t * b;
  }
}

qpoly qpoly::gcd(qpoly a, qpoly b) {
  // Euclid with monic normalization at each step to keep coefficients tame.
  auto monic = [](qpoly& p) {
    if (p.is_zero()) return;
    rat inv = rat(1) / p.leading();
    for (auto& c : p.c_) c *= inv;
  };
  monic(a);
  monic(b);
  while (!b.is_zero()) {
    qpoly quo, rem;
    divmod(a, b, quo, rem);
    a = std::move(b);
    b = std::move(rem);
    monic(b);
  }
  return a;  // already monic (or zero)
}

rat qpoly::int_normalize(qpoly& primitive_out) const {
  if (is_zero()) {
    primitive_out = qpoly();
    return rat(0);
  }
  bigint lcm_den(1);
  for (const auto& c : c_) {
    bigint d = c.get_den();
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
  }
  bigint gcd_num(0);
  for (const auto& c : c_) {
    bigint scaled = c.get_num() * (lcm_den / c.get_den());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), scaled.get_mpz_t());
  }
  rat factor(gcd_num, lcm_den);
  factor.canonicalize();
  if (leading() < 0) factor = -factor;
  primitive_out = *this;
  rat inv = rat(1) / factor;
  for (auto& c : primitive_out.c_) c *= inv;
  return factor;
}

rat qpoly::squarefree_decompose(std::vector<qpoly>& parts) const {
  parts.clear();
  if (is_zero()) throw std::domain_error("squarefree_decompose: zero polynomial");
  rat lead = leading();
  qpoly f = *this;
  {
    rat inv = rat(1) / lead;
    qpoly scale(inv);
    f *= scale;
  }
  parts.push_back(qpoly(1L));  // index 0 unused
  if (f.degree() == 0) return lead;
  // Yun's algorithm over Q[q].
  qpoly fp = f.derivative();
  qpoly g = gcd(f, fp);
  qpoly c, d, tmpq, tmpr;
  divmod(f, g, c, tmpr);
  divmod(fp, g, tmpq, tmpr);
  d = tmpq - c.derivative();
  while (c.degree() > 0) {
    qpoly a = gcd(c, d);
    parts.push_back(a);
    qpoly c2, r2;
    divmod(c, a, c2, r2);
    qpoly d2, r3;
    divmod(d, a, d2, r3);
    c = c2;
    d = d2 - c.derivative();
  }
  return lead;
}

std::string qpoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    const rat& c = c_[i];
    if (c == 0) continue;
    rat mag = c < 0 ? rat(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? "-" : "+");
    }
    bool unit_coeff = (mag == 1);
    if (i == 0) {
      os << rat_str(mag);
    } else {
      if (!unit_coeff) os << rat_str(mag) << "*";
      os << "q";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

size_t qpoly::hash() const {
  size_t h = 1469598103934665603ull;
  auto mix = [&h](size_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  for (const auto& c : c_) {
    mix(mpz_get_ui(c.get_num_mpz_t()));
    mix(mpz_get_ui(c.get_den_mpz_t()));
    mix(static_cast<size_t>(mpz_sgn(c.get_num_mpz_t()) < 0));
  }
  return h;
}

// ---------------------------------------------------------------------------
// scalar

scalar::scalar(const qpoly& num, const qpoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("scalar: zero denominator");
  canon();
}

void scalar::canon() {
  if (num_.is_zero()) {
    den_ = qpoly(1L);
    return;
  }
  qpoly g = qpoly::gcd(num_, den_);
  if (g.degree() > 0) {
    qpoly q1, r1, q2, r2;
    qpoly::divmod(num_, g, q1, r1);
    qpoly::divmod(den_, g, q2, r2);
    num_ = q1;
    den_ = q2;
  }
  qpoly prim;
  rat factor = den_.int_normalize(prim);
  den_ = prim;
  rat inv = rat(1) / factor;
  num_ *= qpoly(inv);
}

scalar scalar::q_pow(long e) {
  if (e >= 0) return scalar(qpoly::monomial(rat(1), e), qpoly(1L));
  return scalar(qpoly(1L), qpoly::monomial(rat(1), -e));
}

bool scalar::is_one() const { return den_.degree() == 0 && num_ == den_; }

scalar& scalar::operator+=(const scalar& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  canon();
  return *this;
}

scalar& scalar::operator-=(const scalar& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  canon();
  return *this;
}

scalar& scalar::operator*=(const scalar& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  canon();
  return *this;
}

scalar& scalar::operator/=(const scalar& o) {
  if (o.is_zero()) throw std::domain_error("scalar: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  canon();
  return *this;
}

scalar scalar::operator-() const {
  scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

scalar scalar::inverse() const {
  if (is_zero()) throw std::domain_error("scalar: inverse of zero");
  return scalar(den_, num_);
}

scalar scalar::pow(long e) const {
  if (e == 0) return scalar(1L);
  const scalar base = e < 0 ? inverse() : *this;
  unsigned long mag = e < 0 ? -static_cast<unsigned long>(e) : e;
  scalar acc(1L), sq = base;
  while (mag) {
    if (mag & 1) acc *= sq;
    sq *= sq;
    mag >>= 1;
  }
  return acc;
}

rat scalar::specialize(const rat& q0) const {
  rat d = den_.eval(q0);
  if (d == 0) throw std::domain_error("scalar::specialize: pole at q0 = " + rat_str(q0));
  return num_.eval(q0) / d;
}

bool scalar::is_constant(rat* out) const {
  if (num_.degree() > 0 || den_.degree() > 0) return false;
  if (out) *out = is_zero() ? rat(0) : num_.coeff(0) / den_.coeff(0);
  return true;
}

std::string scalar::str() const {
  // Scale to an integer-coefficient fraction for display.
  bigint lcm_den(1);
  for (int i = 0; i <= num_.degree(); ++i) {
    bigint d = num_.coeff(i).get_den();
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
  }
  rat scale(lcm_den);
  qpoly n = num_ * qpoly(scale);
  qpoly d = den_ * qpoly(scale);
  if (d.degree() == 0 && d.coeff(0) == 1) return n.str();
  return "(" + n.str() + ")/(" + d.str() + ")";
}

size_t scalar::hash() const { return num_.hash() * 31 + den_.hash(); }

// ---------------------------------------------------------------------------
// parser for the fixed scalar grammar

namespace {

struct scalar_parser {
  const std::string& s;
  size_t pos = 0;

  explicit scalar_parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("scalar parse error at position " + std::to_string(pos) +
                                ": " + what + " in \"" + s + "\"");
  }

  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }

  bool eat(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  long parse_int_exponent() {
    skip_ws();
    bool paren = eat('(');
    skip_ws();
    bool neg = false;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = s[pos++] == '-';
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected integer exponent");
    long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos++] - '0');
      if (v > 1000000) fail("exponent too large");
    }
    if (paren && !eat(')')) fail("expected ')' after exponent");
    return neg ? -v : v;
  }

  scalar parse_primary() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      scalar v = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (c == 'q') {
      ++pos;
      return scalar::q();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      bigint v(s.substr(start, pos - start));
      return scalar(rat(v));
    }
    fail("unexpected character");
  }

  scalar parse_power() {
    scalar base = parse_primary();
    if (eat('^')) {
      long e = parse_int_exponent();
      return base.pow(e);
    }
    return base;
  }

  scalar parse_unary() {
    if (eat('-')) return -parse_unary();
    if (eat('+')) return parse_unary();
    return parse_power();
  }

  bool implicit_factor_follows() {
    skip_ws();
    if (pos >= s.size()) return false;
    char c = s[pos];
    return c == 'q' || c == '(';
  }

  scalar parse_term() {
    scalar acc = parse_unary();
    for (;;) {
      if (eat('*')) {
        acc *= parse_unary();
      } else if (eat('/')) {
        scalar d = parse_unary();
        if (d.is_zero()) throw std::domain_error("scalar parse: division by zero");
        acc /= d;
      } else if (implicit_factor_follows()) {
        acc *= parse_power();
      } else {
        return acc;
      }
    }
  }

  scalar parse_expr() {
    scalar acc = parse_term();
    for (;;) {
      if (eat('+')) acc += parse_term();
      else if (eat('-')) acc -= parse_term();
      else return acc;
    }
  }
};

}  // namespace

scalar scalar::parse(const std::string& text) {
  scalar_parser p(text);
  scalar v = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return v;
}

// ---------------------------------------------------------------------------
// q-combinatorics

scalar q_integer(long l, const scalar& t) {
  if (l < 0) throw std::invalid_argument("q_integer: l must be >= 0");
  scalar acc(0L), tp(1L);
  for (long k = 0; k < l; ++k) {
    acc += tp;
    tp *= t;
  }
  return acc;
}

scalar q_bracket(long m, const scalar& t) {
  if (t.is_zero()) throw std::domain_error("q_bracket: t must be a unit");
  scalar den = t - t.inverse();
  if (den.is_zero()) throw std::domain_error("q_bracket: t^2 = 1");
  return (t.pow(m) - t.pow(-m)) / den;
}

scalar gauss_binomial(long m, long r, const scalar& t) {
  if (r < 0 || r > m) throw std::invalid_argument("gauss_binomial: need 0 <= r <= m");
  scalar acc(1L);
  for (long k = 0; k < r; ++k) acc *= q_bracket(m - k, t) / q_bracket(k + 1, t);
  return acc;
}

// ---------------------------------------------------------------------------
// roots

namespace {

// d-th root of a primitive integer polynomial with positive leading
// coefficient, as the pair (rational factor, monic-root check), or nullopt.
std::optional<qpoly> poly_nth_root_monic(const qpoly& p, unsigned d) {
  // p is assumed nonzero; returns monic root of p/lead(p) when it exists.
  std::vector<qpoly> parts;
  qpoly f = p;
  f.squarefree_decompose(parts);
  qpoly root(1L);
  for (size_t k = 1; k < parts.size(); ++k) {
    if (parts[k].degree() <= 0) continue;
    if (k % d != 0) return std::nullopt;
    root *= parts[k].pow(static_cast<unsigned>(k / d));
  }
  return root;
}

}  // namespace

std::optional<scalar> nth_root(const scalar& f, unsigned d) {
  if (d == 0) throw std::invalid_argument("nth_root: d must be positive");
  if (d == 1 || f.is_zero()) return f;
  // Write f = c * M_N / M_D with M_N, M_D the monic parts of numerator and
  // denominator; a d-th root exists iff c has a rational d-th root and both
  // monic parts are d-th powers (all square-free multiplicities divisible
  // by d).  Uniqueness of the monic coprime representation makes this exact.
  rat c = f.num().leading() / f.den().leading();
  rat gamma;
  if (!rat_nth_root(c, d, gamma)) return std::nullopt;
  auto nroot = poly_nth_root_monic(f.num(), d);
  if (!nroot) return std::nullopt;
  auto droot = poly_nth_root_monic(f.den(), d);
  if (!droot) return std::nullopt;
  scalar z = scalar(gamma) * scalar(*nroot, *droot);
  // The square-free data determines the candidate; verify exactly.
  if (z.pow(static_cast<long>(d)) != f) return std::nullopt;
  return z;
}

bool is_square(const scalar& f) { return nth_root(f, 2).has_value(); }

}  // namespace qdeform
