// Coalgebra structure over the presented algebras: coproducts and coactions
// (the letters are uniformly skew-primitive, group symbols grouplike),
// counit, antipode, convolution of sections and of functionals, and the
// convolution inverses computed by a truncated geometric series.
#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qdeform/freealg.hpp"

namespace qdeform {

template <class R>
using basis_key = typename element<R>::key;  // (word, group element)

// ---------------------------------------------------------------------------
// Tensors with two or three legs, each leg a presented algebra.

template <class R>
struct tensor2 {
  using key = basis_key<R>;
  struct less {
    typename element<R>::key_less kl;
    bool operator()(const std::pair<key, key>& a, const std::pair<key, key>& b) const {
      if (kl(a.first, b.first)) return true;
      if (kl(b.first, a.first)) return false;
      return kl(a.second, b.second);
    }
  };
  std::map<std::pair<key, key>, R, less> terms;

  void add(const R& c, key k1, key k2) {
    if (c.is_zero()) return;
    std::pair<key, key> k{std::move(k1), std::move(k2)};
    auto it = terms.find(k);
    if (it == terms.end()) {
      terms.emplace(std::move(k), c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  bool is_zero() const { return terms.empty(); }
  bool operator==(const tensor2& o) const { return terms == o.terms; }
  bool operator!=(const tensor2& o) const { return !(*this == o); }
};

template <class R>
struct tensor3 {
  using key = basis_key<R>;
  struct less {
    typename element<R>::key_less kl;
    bool operator()(const std::tuple<key, key, key>& a,
                    const std::tuple<key, key, key>& b) const {
      if (kl(std::get<0>(a), std::get<0>(b))) return true;
      if (kl(std::get<0>(b), std::get<0>(a))) return false;
      if (kl(std::get<1>(a), std::get<1>(b))) return true;
      if (kl(std::get<1>(b), std::get<1>(a))) return false;
      return kl(std::get<2>(a), std::get<2>(b));
    }
  };
  std::map<std::tuple<key, key, key>, R, less> terms;

  void add(const R& c, key k1, key k2, key k3) {
    if (c.is_zero()) return;
    std::tuple<key, key, key> k{std::move(k1), std::move(k2), std::move(k3)};
    auto it = terms.find(k);
    if (it == terms.end()) {
      terms.emplace(std::move(k), c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  bool is_zero() const { return terms.empty(); }
  bool operator==(const tensor3& o) const { return terms == o.terms; }
  bool operator!=(const tensor3& o) const { return !(*this == o); }
};

template <class R>
element<R> key_element(const basis_key<R>& k) {
  element<R> e;
  e.add(R(1L), k.first, k.second);
  return e;
}

// Componentwise product of two-leg tensors.
template <class R>
tensor2<R> t2_mul(const presentation<R>& p1, const presentation<R>& p2,
                  const tensor2<R>& a, const tensor2<R>& b) {
  tensor2<R> out;
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) {
      element<R> e1 = p1.mul(key_element<R>(ka.first), key_element<R>(kb.first));
      element<R> e2 = p2.mul(key_element<R>(ka.second), key_element<R>(kb.second));
      for (const auto& [k1, c1] : e1.terms())
        for (const auto& [k2, c2] : e2.terms()) out.add(ca * cb * c1 * c2, k1, k2);
    }
  return out;
}

template <class R>
tensor3<R> t3_mul(const presentation<R>& p1, const presentation<R>& p2,
                  const presentation<R>& p3, const tensor3<R>& a, const tensor3<R>& b) {
  tensor3<R> out;
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) {
      element<R> e1 =
          p1.mul(key_element<R>(std::get<0>(ka)), key_element<R>(std::get<0>(kb)));
      element<R> e2 =
          p2.mul(key_element<R>(std::get<1>(ka)), key_element<R>(std::get<1>(kb)));
      element<R> e3 =
          p3.mul(key_element<R>(std::get<2>(ka)), key_element<R>(std::get<2>(kb)));
      for (const auto& [k1, c1] : e1.terms())
        for (const auto& [k2, c2] : e2.terms())
          for (const auto& [k3, c3] : e3.terms())
            out.add(ca * cb * c1 * c2 * c3, k1, k2, k3);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Coproducts and coactions.  The generic two-leg form sends a letter to
// x (x) 1 + g (x) x with the first copy in p1 and the second in p2, and a
// group symbol to g (x) g.  With p1 = p2 = H this is the coproduct of H;
// with (H, A) it is the left coaction of A, with (A, H) the right one.

template <class R>
tensor2<R> coproduct(const presentation<R>& p1, const presentation<R>& p2,
                     const element<R>& e) {
  size_t m = p1.dat().group_rank();
  grp z = grp_zero(m);
  tensor2<R> out;
  for (const auto& [k, c] : e.terms()) {
    tensor2<R> t;
    t.add(R(1L), {word{}, z}, {word{}, z});
    for (size_t l : k.first) {
      tensor2<R> xl;
      xl.add(R(1L), {word{l}, z}, {word{}, z});
      xl.add(R(1L), {word{}, p1.dat().g(l)}, {word{l}, z});
      t = t2_mul(p1, p2, t, xl);
    }
    tensor2<R> gg;
    gg.add(R(1L), {word{}, k.second}, {word{}, k.second});
    t = t2_mul(p1, p2, t, gg);
    for (const auto& [kk, cc] : t.terms) out.add(c * cc, kk.first, kk.second);
  }
  return out;
}

template <class R>
tensor2<R> coproduct(const presentation<R>& h, const element<R>& e) {
  return coproduct(h, h, e);
}

template <class R>
tensor3<R> coproduct2(const presentation<R>& p1, const presentation<R>& p2,
                      const presentation<R>& p3, const element<R>& e) {
  size_t m = p1.dat().group_rank();
  grp z = grp_zero(m);
  tensor3<R> out;
  for (const auto& [k, c] : e.terms()) {
    tensor3<R> t;
    t.add(R(1L), {word{}, z}, {word{}, z}, {word{}, z});
    for (size_t l : k.first) {
      tensor3<R> xl;
      const grp& gl = p1.dat().g(l);
      xl.add(R(1L), {word{l}, z}, {word{}, z}, {word{}, z});
      xl.add(R(1L), {word{}, gl}, {word{l}, z}, {word{}, z});
      xl.add(R(1L), {word{}, gl}, {word{}, gl}, {word{l}, z});
      t = t3_mul(p1, p2, p3, t, xl);
    }
    tensor3<R> gg;
    gg.add(R(1L), {word{}, k.second}, {word{}, k.second}, {word{}, k.second});
    t = t3_mul(p1, p2, p3, t, gg);
    for (const auto& [kk, cc] : t.terms)
      out.add(c * cc, std::get<0>(kk), std::get<1>(kk), std::get<2>(kk));
  }
  return out;
}

template <class R>
tensor3<R> coproduct2(const presentation<R>& h, const element<R>& e) {
  return coproduct2(h, h, h, e);
}

// Coefficient of the x-free part; the counit on the Hopf flavors.
template <class R>
R counit(const element<R>& e) {
  R acc(0L);
  for (const auto& [k, c] : e.terms())
    if (k.first.empty()) acc = acc + c;
  return acc;
}

// S(g) = g^-1, S(x_l) = -q_ll^-1 x_l K(-g_l), extended antimultiplicatively.
template <class R>
element<R> antipode(const presentation<R>& h, const element<R>& e) {
  if (!flavor_is_hopf(h.kind()))
    throw std::invalid_argument("antipode: presentation is not a Hopf flavor");
  element<R> out;
  for (const auto& [k, c] : e.terms()) {
    element<R> acc = h.grouplike(grp_neg(k.second));
    for (size_t pos = k.first.size(); pos-- > 0;) {
      size_t l = k.first[pos];
      element<R> sx;
      sx.add(R(-1L) * R(h.dat().braiding(l, l).inverse()), {l}, grp_neg(h.dat().g(l)));
      acc = h.mul(acc, sx);
    }
    out = out + acc * c;
  }
  return out;
}

// Delta(e) == e (x) 1 + g (x) e.
template <class R>
bool is_skew_primitive(const presentation<R>& h, const element<R>& e, const grp& g) {
  grp z = grp_zero(h.dat().group_rank());
  tensor2<R> expect;
  for (const auto& [k, c] : e.terms()) {
    expect.add(c, k, {word{}, z});
    expect.add(c, {word{}, g}, k);
  }
  return coproduct(h, h, e) == expect;
}

// Basis symbols of words up to maxdeg, paired with group exponents drawn
// from zero and the signed standard generators.
template <class R>
std::vector<basis_key<R>> sample_basis(const presentation<R>& p, size_t maxdeg) {
  size_t m = p.dat().group_rank();
  std::vector<grp> gs = {grp_zero(m)};
  for (size_t r = 0; r < m; ++r) {
    gs.push_back(grp_unit(m, r));
    gs.push_back(grp_neg(grp_unit(m, r)));
  }
  std::vector<basis_key<R>> out;
  for (const auto& level : p.basis_enumerate(maxdeg))
    for (const word& w : level)
      for (const grp& g : gs) out.push_back({w, g});
  return out;
}

// Counit and coassociativity axioms, multiplicativity of the coproduct on a
// deterministic sample of basis pairs, and both antipode identities.
// Throws std::domain_error naming the first failed axiom.
template <class R>
void verify_hopf(const presentation<R>& h, size_t maxdeg, size_t pair_budget = 150) {
  if (!flavor_is_hopf(h.kind()))
    throw std::domain_error("verify_hopf: presentation is not a Hopf flavor");
  grp z = grp_zero(h.dat().group_rank());
  auto symbols = sample_basis(h, maxdeg);

  for (const auto& s : symbols) {
    element<R> es = key_element<R>(s);
    tensor2<R> d = coproduct(h, h, es);

    element<R> left, right;
    for (const auto& [kk, c] : d.terms) {
      left = left + key_element<R>(kk.second) * (c * counit(key_element<R>(kk.first)));
      right = right + key_element<R>(kk.first) * (c * counit(key_element<R>(kk.second)));
    }
    if (left != es || right != es)
      throw std::domain_error("verify_hopf: counit axiom fails");

    tensor3<R> d2 = coproduct2(h, h, h, es);
    tensor3<R> dl, dr;
    for (const auto& [kk, c] : d.terms) {
      tensor2<R> inner = coproduct(h, h, key_element<R>(kk.first));
      for (const auto& [ki, ci] : inner.terms)
        dl.add(c * ci, ki.first, ki.second, kk.second);
      tensor2<R> inner2 = coproduct(h, h, key_element<R>(kk.second));
      for (const auto& [ki, ci] : inner2.terms)
        dr.add(c * ci, kk.first, ki.first, ki.second);
    }
    if (dl != d2 || dr != d2)
      throw std::domain_error("verify_hopf: coproduct is not coassociative");

    element<R> fold_l, fold_r;
    for (const auto& [kk, c] : d.terms) {
      fold_l = fold_l + h.mul(antipode(h, key_element<R>(kk.first)),
                              key_element<R>(kk.second)) *
                            c;
      fold_r = fold_r + h.mul(key_element<R>(kk.first),
                              antipode(h, key_element<R>(kk.second))) *
                            c;
    }
    element<R> eps = h.one() * counit(es);
    if (fold_l != eps || fold_r != eps)
      throw std::domain_error("verify_hopf: antipode axiom fails");
  }

  size_t n = symbols.size();
  for (size_t t = 0; t < pair_budget; ++t) {
    const auto& a = symbols[(t * 73 + 5) % n];
    const auto& b = symbols[(t * 151 + t / 7) % n];
    element<R> ea = key_element<R>(a), eb = key_element<R>(b);
    tensor2<R> lhs = coproduct(h, h, h.mul(ea, eb));
    tensor2<R> rhs = t2_mul(h, h, coproduct(h, h, ea), coproduct(h, h, eb));
    if (lhs != rhs)
      throw std::domain_error("verify_hopf: coproduct is not an algebra map at " +
                              ea.str(h.dat()) + " | " + eb.str(h.dat()));
  }
  (void)z;
}

// ---------------------------------------------------------------------------
// Linear maps between presented algebras, memoized on basis symbols.

// Inverse of a unit multiple of a single group symbol.
template <class R>
element<R> grouplike_inverse(const presentation<R>& p, const element<R>& e) {
  if (e.size() != 1 || !e.terms().begin()->first.first.empty())
    throw std::invalid_argument("grouplike_inverse: not a group-symbol multiple");
  const auto& [k, c] = *e.terms().begin();
  R coeff = c.inverse();
  if (p.crossed()) coeff = coeff * p.sigma().eval(k.second, grp_neg(k.second)).inverse();
  element<R> out;
  out.add(coeff, {}, grp_neg(k.second));
  return out;
}

template <class R>
class filtered_map {
 public:
  using key = basis_key<R>;
  using fn = std::function<element<R>(const word&, const grp&)>;

  filtered_map() = default;
  filtered_map(const presentation<R>* src, const presentation<R>* dst, fn f)
      : impl_(std::make_shared<impl>(impl{src, dst, std::move(f), {}})) {}

  const presentation<R>* src() const { return impl_->src; }
  const presentation<R>* dst() const { return impl_->dst; }

  const element<R>& value(const word& w, const grp& g) const {
    auto& cache = impl_->cache;
    key k{w, g};
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(std::move(k), impl_->f(w, g)).first;
    return it->second;
  }

  // Linear extension to an element written in the irreducible basis.
  element<R> apply(const element<R>& e) const {
    element<R> out;
    for (const auto& [k, c] : e.terms()) out = out + value(k.first, k.second) * c;
    return out;
  }

 private:
  struct impl {
    const presentation<R>* src;
    const presentation<R>* dst;
    fn f;
    std::map<key, element<R>, typename element<R>::key_less> cache;
  };
  std::shared_ptr<impl> impl_;
};

// The section that reads a basis symbol of the source as the same symbol of
// the target; both presentations must share the underlying datum.
template <class R>
filtered_map<R> identity_section(const presentation<R>* src, const presentation<R>* dst) {
  return filtered_map<R>(src, dst, [dst](const word& w, const grp& g) {
    return dst->from_term(R(1L), w, g);
  });
}

// Convolution (f * g)(h) = sum f(h_1) g(h_2) in Hom(H, A), using the
// coproduct of the common Hopf source.
template <class R>
filtered_map<R> convolve(const filtered_map<R>& f, const filtered_map<R>& g) {
  if (f.src() != g.src() || f.dst() != g.dst())
    throw std::invalid_argument("convolve: mismatched source or target");
  const presentation<R>* h = f.src();
  const presentation<R>* a = f.dst();
  return filtered_map<R>(h, a, [f, g, h, a](const word& w, const grp& gg) {
    tensor2<R> d = coproduct(*h, *h, h->from_term(R(1L), w, gg));
    element<R> out;
    for (const auto& [kk, c] : d.terms)
      out = out + a->mul(f.value(kk.first.first, kk.first.second),
                         g.value(kk.second.first, kk.second.second)) *
                      c;
    return out;
  });
}

template <class R>
filtered_map<R> fm_unit(const presentation<R>* h, const presentation<R>* a) {
  return filtered_map<R>(h, a, [a](const word& w, const grp&) {
    return w.empty() ? a->one() : element<R>();
  });
}

// Convolution inverse by the truncated geometric series: with u the
// inverse-on-group-symbols map, r = f * u - unit vanishes on x-degree zero,
// so sum_{n <= maxdeg} (-r)^{*n} inverts f * u on symbols of x-degree up to
// maxdeg.  The result is two-sidedly checked by the callers' tests.
template <class R>
filtered_map<R> conv_inverse(const filtered_map<R>& f, size_t maxdeg) {
  const presentation<R>* h = f.src();
  const presentation<R>* a = f.dst();
  filtered_map<R> u(h, a, [f, a](const word& w, const grp& g) {
    if (!w.empty()) return element<R>();
    return grouplike_inverse(*a, f.value({}, g));
  });
  filtered_map<R> unit = fm_unit(h, a);
  filtered_map<R> fu = convolve(f, u);
  filtered_map<R> neg_r(h, a, [fu, unit](const word& w, const grp& g) {
    return unit.value(w, g) - fu.value(w, g);
  });
  filtered_map<R> acc = unit, pw = unit;
  for (size_t n = 1; n <= maxdeg; ++n) {
    pw = convolve(pw, neg_r);
    filtered_map<R> prev = acc;
    filtered_map<R> cur = pw;
    acc = filtered_map<R>(h, a, [prev, cur](const word& w, const grp& g) {
      return prev.value(w, g) + cur.value(w, g);
    });
  }
  return convolve(u, acc);
}

// ---------------------------------------------------------------------------
// Scalar-valued functions of two arguments on one Hopf presentation, with
// the convolution algebra of Hom(H (x) H, k).

template <class R>
class bifunctional {
 public:
  using key = basis_key<R>;
  using fn = std::function<R(const key&, const key&)>;

  bifunctional() = default;
  bifunctional(const presentation<R>* h, fn f)
      : impl_(std::make_shared<impl>(impl{h, std::move(f), {}})) {}

  const presentation<R>* host() const { return impl_->h; }

  R eval(const key& a, const key& b) const {
    auto& cache = impl_->cache;
    std::pair<key, key> k{a, b};
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(std::move(k), impl_->f(a, b)).first;
    return it->second;
  }

  // Bilinear extension.
  R apply(const element<R>& a, const element<R>& b) const {
    R acc(0L);
    for (const auto& [ka, ca] : a.terms())
      for (const auto& [kb, cb] : b.terms()) acc = acc + ca * cb * eval(ka, kb);
    return acc;
  }

 private:
  struct impl {
    const presentation<R>* h;
    fn f;
    std::map<std::pair<key, key>, R, typename tensor2<R>::less> cache;
  };
  std::shared_ptr<impl> impl_;
};

// The convolution unit counit (x) counit.
template <class R>
bifunctional<R> bi_unit(const presentation<R>* h) {
  return bifunctional<R>(h, [](const basis_key<R>& a, const basis_key<R>& b) {
    return (a.first.empty() && b.first.empty()) ? R(1L) : R(0L);
  });
}

template <class R>
bifunctional<R> bi_add(const bifunctional<R>& s, const bifunctional<R>& t) {
  return bifunctional<R>(s.host(), [s, t](const basis_key<R>& a, const basis_key<R>& b) {
    return s.eval(a, b) + t.eval(a, b);
  });
}

template <class R>
bifunctional<R> bi_sub(const bifunctional<R>& s, const bifunctional<R>& t) {
  return bifunctional<R>(s.host(), [s, t](const basis_key<R>& a, const basis_key<R>& b) {
    return s.eval(a, b) - t.eval(a, b);
  });
}

// (s * t)(a, b) = sum s(a_1, b_1) t(a_2, b_2).
template <class R>
bifunctional<R> convolve_bi(const bifunctional<R>& s, const bifunctional<R>& t) {
  const presentation<R>* h = s.host();
  return bifunctional<R>(h, [s, t, h](const basis_key<R>& a, const basis_key<R>& b) {
    tensor2<R> da = coproduct(*h, *h, key_element<R>(a));
    tensor2<R> db = coproduct(*h, *h, key_element<R>(b));
    R acc(0L);
    for (const auto& [ka, ca] : da.terms)
      for (const auto& [kb, cb] : db.terms)
        acc = acc + ca * cb * s.eval(ka.first, kb.first) * t.eval(ka.second, kb.second);
    return acc;
  });
}

// Convolution inverse in Hom(H (x) H, k) by the same truncated series,
// valid on pairs of total x-degree up to maxdeg.
template <class R>
bifunctional<R> conv_inverse_bi(const bifunctional<R>& s, size_t maxdeg) {
  const presentation<R>* h = s.host();
  bifunctional<R> u(h, [s](const basis_key<R>& a, const basis_key<R>& b) {
    if (!a.first.empty() || !b.first.empty()) return R(0L);
    return s.eval(a, b).inverse();
  });
  bifunctional<R> unit = bi_unit(h);
  bifunctional<R> neg_r = bi_sub(unit, convolve_bi(s, u));
  bifunctional<R> acc = unit, pw = unit;
  for (size_t n = 1; n <= maxdeg; ++n) {
    pw = convolve_bi(pw, neg_r);
    acc = bi_add(acc, pw);
  }
  return convolve_bi(u, acc);
}

// ---------------------------------------------------------------------------
// Two-argument cocycle conditions.

// All triples drawn from the leading basis symbols plus a strided sample of
// the rest; used by the two-argument cocycle checks below.
template <class R>
std::vector<std::array<basis_key<R>, 3>> sample_triples(
    const std::vector<basis_key<R>>& symbols, size_t budget) {
  size_t n = symbols.size();
  size_t p = std::min<size_t>(n, 7);
  std::vector<std::array<basis_key<R>, 3>> out;
  for (size_t i = 0; i < p; ++i)
    for (size_t j = 0; j < p; ++j)
      for (size_t k = 0; k < p; ++k) out.push_back({symbols[i], symbols[j], symbols[k]});
  for (size_t i = 0; i < budget; ++i)
    out.push_back({symbols[(i * 53 + 1) % n], symbols[(i * 101 + i / 3) % n],
                   symbols[(i * 197 + 7) % n]});
  return out;
}

// eps(a) t(b, c) - t(ab, c) + t(a, bc) - t(a, b) eps(c) on sampled triples.
template <class R>
bool hochschild_check(const presentation<R>& h, const bifunctional<R>& t, size_t maxdeg,
                      size_t triple_budget = 120) {
  auto symbols = sample_basis(h, maxdeg);
  for (const auto& tr : sample_triples<R>(symbols, triple_budget)) {
    element<R> a = key_element<R>(tr[0]);
    element<R> b = key_element<R>(tr[1]);
    element<R> c = key_element<R>(tr[2]);
    R v = counit(a) * t.apply(b, c) - t.apply(h.mul(a, b), c) +
          t.apply(a, h.mul(b, c)) - t.apply(a, b) * counit(c);
    if (!v.is_zero()) return false;
  }
  return true;
}

// One instance of the right two-cocycle condition:
//   sum s(a1, b1) s(a2 b2, c) = sum s(b1, c1) s(a, b2 c2).
template <class R>
bool right_cocycle_holds(const presentation<R>& h, const bifunctional<R>& s,
                         const basis_key<R>& a, const basis_key<R>& b,
                         const basis_key<R>& c) {
  tensor2<R> da = coproduct(h, h, key_element<R>(a));
  tensor2<R> db = coproduct(h, h, key_element<R>(b));
  R lhs(0L), rhs(0L);
  for (const auto& [ka, ca] : da.terms)
    for (const auto& [kb, cb] : db.terms) {
      element<R> mid = h.mul(key_element<R>(ka.second), key_element<R>(kb.second));
      R tail(0L);
      for (const auto& [km_, cm] : mid.terms()) tail = tail + cm * s.eval(km_, c);
      lhs = lhs + ca * cb * s.eval(ka.first, kb.first) * tail;
    }
  tensor2<R> dc = coproduct(h, h, key_element<R>(c));
  for (const auto& [kb, cb] : db.terms)
    for (const auto& [kc, cc] : dc.terms) {
      element<R> mid = h.mul(key_element<R>(kb.second), key_element<R>(kc.second));
      R tail(0L);
      for (const auto& [km_, cm] : mid.terms()) tail = tail + cm * s.eval(a, km_);
      rhs = rhs + cb * cc * s.eval(kb.first, kc.first) * tail;
    }
  return lhs == rhs;
}

// Checks that s is a normalized right two-cocycle on sampled triples:
//   s(a, 1) = eps(a) = s(1, a) plus the condition above.
template <class R>
bool right_cocycle_check(const presentation<R>& h, const bifunctional<R>& s,
                         size_t maxdeg, size_t triple_budget = 120) {
  auto symbols = sample_basis(h, maxdeg);
  grp z = grp_zero(h.dat().group_rank());
  basis_key<R> one{word{}, z};
  for (const auto& a : symbols) {
    R ea = counit(key_element<R>(a));
    if (s.eval(a, one) != ea || s.eval(one, a) != ea) return false;
  }
  for (const auto& tr : sample_triples<R>(symbols, triple_budget))
    if (!right_cocycle_holds(h, s, tr[0], tr[1], tr[2])) return false;
  return true;
}

// One instance of the mirror condition, with the product on the first legs:
//   sum t(a1 b1, c) t(a2, b2) = sum t(a, b1 c1) t(b2, c2).
template <class R>
bool left_cocycle_holds(const presentation<R>& h, const bifunctional<R>& s,
                        const basis_key<R>& a, const basis_key<R>& b,
                        const basis_key<R>& c) {
  tensor2<R> da = coproduct(h, h, key_element<R>(a));
  tensor2<R> db = coproduct(h, h, key_element<R>(b));
  R lhs(0L), rhs(0L);
  for (const auto& [ka, ca] : da.terms)
    for (const auto& [kb, cb] : db.terms) {
      element<R> mid = h.mul(key_element<R>(ka.first), key_element<R>(kb.first));
      R head(0L);
      for (const auto& [km_, cm] : mid.terms()) head = head + cm * s.eval(km_, c);
      lhs = lhs + ca * cb * head * s.eval(ka.second, kb.second);
    }
  tensor2<R> dc = coproduct(h, h, key_element<R>(c));
  for (const auto& [kb, cb] : db.terms)
    for (const auto& [kc, cc] : dc.terms) {
      element<R> mid = h.mul(key_element<R>(kb.first), key_element<R>(kc.first));
      R head(0L);
      for (const auto& [km_, cm] : mid.terms()) head = head + cm * s.eval(a, km_);
      rhs = rhs + cb * cc * head * s.eval(kb.second, kc.second);
    }
  return lhs == rhs;
}

// Checks the mirror condition on sampled triples together with
//   t(a, 1) = eps(a) = t(1, a).
template <class R>
bool left_cocycle_check(const presentation<R>& h, const bifunctional<R>& s,
                        size_t maxdeg, size_t triple_budget = 120) {
  auto symbols = sample_basis(h, maxdeg);
  grp z = grp_zero(h.dat().group_rank());
  basis_key<R> one{word{}, z};
  for (const auto& a : symbols) {
    R ea = counit(key_element<R>(a));
    if (s.eval(a, one) != ea || s.eval(one, a) != ea) return false;
  }
  for (const auto& tr : sample_triples<R>(symbols, triple_budget))
    if (!left_cocycle_holds(h, s, tr[0], tr[1], tr[2])) return false;
  return true;
}

// The unit deformation of the counit square by a Hochschild two-cocycle:
// tau = eps (x) eps + t.  Verifies the Hochschild condition and that tau is
// a normalized two-cocycle on both sides (the two conditions agree for unit
// deformations valued in a square-zero extension); throws std::domain_error
// otherwise.
template <class R>
bifunctional<R> tau_from_t(const presentation<R>& h, const bifunctional<R>& t,
                           size_t maxdeg) {
  if (!hochschild_check(h, t, maxdeg))
    throw std::domain_error("tau_from_t: not a Hochschild two-cocycle");
  bifunctional<R> tau = bi_add(bi_unit(t.host()), t);
  if (!left_cocycle_check(h, tau, maxdeg))
    throw std::domain_error("tau_from_t: deformed counit square is not a left cocycle");
  if (!right_cocycle_check(h, tau, maxdeg))
    throw std::domain_error("tau_from_t: deformed counit square is not a right cocycle");
  return tau;
}

}  // namespace qdeform
