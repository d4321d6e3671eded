// Words in the letters of a datum, with a group element carried on the
// right, and the straightening engine that rewrites cross-block products.
// A presentation bundles a datum with a rewrite system for one member of the
// algebra family: the plain bosonization, the graded or linked Hopf algebra,
// or one of the comodule-algebra twists.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "qdeform/datum.hpp"
#include "qdeform/km.hpp"

namespace qdeform {

using word = std::vector<size_t>;

inline word word_cat(const word& a, const word& b) {
  word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

// Length first, then lexicographic; the letter order is the index order,
// which refines the block order because blocks are consecutive.
inline bool word_less(const word& a, const word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Linear combinations of basis symbols x_{w} * K(g) with coefficients in R.
// Terms are kept merged, zero-free, and ordered by (length, word, group).
template <class R>
class element {
 public:
  using key = std::pair<word, grp>;
  struct key_less {
    bool operator()(const key& a, const key& b) const {
      if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
      if (a.first != b.first) return a.first < b.first;
      return a.second < b.second;
    }
  };
  using term_map = std::map<key, R, key_less>;

  element() = default;

  void add(const R& c, word w, grp g) {
    if (c.is_zero()) return;
    key k{std::move(w), std::move(g)};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(std::move(k), c);
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  const term_map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  // Coefficient of a basis symbol, zero when absent.
  R coeff(const word& w, const grp& g) const {
    auto it = terms_.find({w, g});
    return it == terms_.end() ? R(0L) : it->second;
  }

  element operator+(const element& o) const {
    element r = *this;
    for (const auto& [k, c] : o.terms_) r.add(c, k.first, k.second);
    return r;
  }
  element operator-(const element& o) const {
    element r = *this;
    for (const auto& [k, c] : o.terms_) r.add(R(-1L) * c, k.first, k.second);
    return r;
  }
  element operator-() const {
    element r;
    for (const auto& [k, c] : terms_) r.add(R(-1L) * c, k.first, k.second);
    return r;
  }
  element operator*(const R& c) const {
    element r;
    for (const auto& [k, v] : terms_) r.add(v * c, k.first, k.second);
    return r;
  }
  bool operator==(const element& o) const { return terms_ == o.terms_; }
  bool operator!=(const element& o) const { return !(*this == o); }

  // Largest x-word length among the terms; 0 for the zero element.
  size_t x_degree() const {
    size_t d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first.size());
    return d;
  }

  // "c * x[i]x[j] * K(a,b)" summands joined by " + "; letter labels come
  // from the datum.
  std::string str(const datum& d) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += c.str();
      if (!k.first.empty()) {
        out += " * ";
        for (size_t l : k.first) out += "x[" + d.label(l) + "]";
      }
      if (!grp_is_zero(k.second)) {
        out += " * K(";
        for (size_t r = 0; r < k.second.size(); ++r) {
          if (r) out += ",";
          out += std::to_string(k.second[r]);
        }
        out += ")";
      }
    }
    return out;
  }

 private:
  term_map terms_;
};

template <class R>
struct rule {
  word lhs;
  element<R> rhs;
  bool operator==(const rule& o) const { return lhs == o.lhs && rhs == o.rhs; }
};

// The members of the algebra family sharing one datum.  `graded` and
// `linked` are the Hopf algebras (linking constants absent/present);
// `cleft`, `twisted` and `linked_twisted` are the comodule-algebra twists;
// `contracted` kills the group tail entirely; `free_skew` imposes no
// cross-block relation at all.
enum class flavor {
  free_skew,
  graded,
  linked,
  cleft,
  twisted,
  linked_twisted,
  contracted,
};

inline bool flavor_is_hopf(flavor f) {
  return f == flavor::free_skew || f == flavor::graded || f == flavor::linked;
}
inline bool flavor_is_crossed(flavor f) {
  return f == flavor::twisted || f == flavor::linked_twisted;
}

// Pairs (i, j) in theta whose characters match the product of the two
// cocycle characters of sigma, computed over the coefficient ring R.
template <class R>
std::vector<pair_key> xi_sigma_r(const datum& d, const bilinear_form<R>& sigma) {
  std::vector<pair_key> out;
  for (const auto& [i, j] : d.theta()) {
    bool ok = true;
    for (size_t r = 0; r < d.group_rank() && ok; ++r) {
      grp e = grp_unit(d.group_rank(), r);
      R lhs = R(d.chi(i).eval(e) * d.chi(j).eval(e));
      R rhs = (sigma.eval(e, d.g(i)) / sigma.eval(d.g(i), e)) *
              (sigma.eval(e, d.g(j)) / sigma.eval(d.g(j), e));
      if (!(lhs == rhs)) ok = false;
    }
    if (ok) out.push_back({i, j});
  }
  return out;
}

template <class R>
class presentation {
 public:
  presentation(datum d, flavor f, std::map<pair_key, R> lambda, bilinear_form<R> sigma,
               std::map<pair_key, R> mu, std::vector<rule<R>> rules)
      : dat_(std::move(d)),
        flavor_(f),
        lambda_(std::move(lambda)),
        sigma_(std::move(sigma)),
        mu_(std::move(mu)),
        rules_(std::move(rules)) {}

  const datum& dat() const { return dat_; }
  flavor kind() const { return flavor_; }
  bool crossed() const { return flavor_is_crossed(flavor_); }
  const bilinear_form<R>& sigma() const { return sigma_; }
  const std::map<pair_key, R>& lambda() const { return lambda_; }
  const std::map<pair_key, R>& mu() const { return mu_; }
  const std::vector<rule<R>>& rules() const { return rules_; }

  element<R> one() const {
    element<R> e;
    e.add(R(1L), {}, grp_zero(dat_.group_rank()));
    return e;
  }
  element<R> x(size_t letter) const {
    element<R> e;
    e.add(R(1L), {letter}, grp_zero(dat_.group_rank()));
    return e;
  }
  element<R> grouplike(const grp& g) const {
    element<R> e;
    e.add(R(1L), {}, g);
    return e;
  }
  element<R> from_term(const R& c, word w, grp g) const {
    element<R> e;
    e.add(c, std::move(w), std::move(g));
    return normal_form(e);
  }

  // Product of the characters of the letters of w, evaluated at g.
  scalar chi_word(const word& w, const grp& g) const {
    scalar r(1L);
    for (size_t l : w) r = r * dat_.chi(l).eval(g);
    return r;
  }

  element<R> mul(const element<R>& a, const element<R>& b) const {
    element<R> raw;
    for (const auto& [ka, ca] : a.terms())
      for (const auto& [kb, cb] : b.terms()) {
        R c = ca * cb * R(chi_word(kb.first, ka.second));
        if (crossed()) c = c * sigma_.eval(ka.second, kb.second);
        raw.add(c, word_cat(ka.first, kb.first), grp_add(ka.second, kb.second));
      }
    return normal_form(raw);
  }

  // Replace the occurrence of rules_[ri].lhs at position pos of w, in a term
  // with coefficient c and right group part g.
  element<R> apply_rule_at(const R& c, const word& w, const grp& g, size_t ri,
                           size_t pos) const {
    const rule<R>& r = rules_.at(ri);
    word u(w.begin(), w.begin() + pos);
    word v(w.begin() + pos + r.lhs.size(), w.end());
    element<R> out;
    for (const auto& [k, cr] : r.rhs.terms()) {
      R f = c * cr * R(chi_word(v, k.second));
      if (crossed()) f = f * sigma_.eval(k.second, g);
      out.add(f, word_cat(word_cat(u, k.first), v), grp_add(k.second, g));
    }
    return out;
  }

  element<R> normal_form(const element<R>& e) const {
    std::vector<std::tuple<R, word, grp>> work;
    work.reserve(e.size());
    for (const auto& [k, c] : e.terms()) work.emplace_back(c, k.first, k.second);
    element<R> out;
    size_t steps = 0;
    while (!work.empty()) {
      auto [c, w, g] = std::move(work.back());
      work.pop_back();
      auto m = find_match(w);
      if (!m) {
        out.add(c, std::move(w), std::move(g));
        continue;
      }
      if (++steps > step_budget)
        throw std::runtime_error("normal_form: rewrite budget exhausted");
      element<R> rep = apply_rule_at(c, w, g, m->first, m->second);
      for (const auto& [k, cc] : rep.terms()) work.emplace_back(cc, k.first, k.second);
    }
    return out;
  }

  bool irreducible(const word& w) const { return !find_match(w).has_value(); }

  // Irreducible words grouped by length, for lengths 0..maxdeg.
  std::vector<std::vector<word>> basis_enumerate(size_t maxdeg) const {
    std::vector<std::vector<word>> levels(maxdeg + 1);
    levels[0].push_back({});
    for (size_t d = 1; d <= maxdeg; ++d)
      for (const word& w : levels[d - 1])
        for (size_t l = 0; l < dat_.size(); ++l) {
          word nw = w;
          nw.push_back(l);
          // w is irreducible, so a new match must use the appended letter.
          bool red = false;
          for (const rule<R>& r : rules_) {
            if (r.lhs.size() > nw.size()) continue;
            if (std::equal(r.lhs.begin(), r.lhs.end(), nw.end() - r.lhs.size())) {
              red = true;
              break;
            }
          }
          if (!red) levels[d].push_back(std::move(nw));
        }
    return levels;
  }

  std::vector<size_t> hilbert_ranks(size_t maxdeg) const {
    std::vector<size_t> out;
    for (const auto& level : basis_enumerate(maxdeg)) out.push_back(level.size());
    return out;
  }

  // Weight conservation: conjugation by any group generator must scale both
  // sides of every rule identically; this is exactly the support condition
  // on the inhomogeneous tails.  Also checks that right-hand words precede
  // the left-hand word, which is what makes rewriting terminate.
  void validate_rules() const {
    size_t m = dat_.group_rank();
    for (const rule<R>& r : rules_) {
      for (const auto& [k, c] : r.rhs.terms()) {
        if (!word_less(k.first, r.lhs))
          throw std::domain_error("presentation: rule tail does not decrease");
        for (size_t t = 0; t < m; ++t) {
          grp e = grp_unit(m, t);
          R lhs = R(chi_word(r.lhs, e));
          R rhs = R(chi_word(k.first, e));
          if (crossed()) rhs = rhs * sigma_.eval(e, k.second) / sigma_.eval(k.second, e);
          if (!(lhs == rhs))
            throw std::domain_error("presentation: rule is not weight-homogeneous at " +
                                    word_str(r.lhs));
        }
      }
    }
  }

  struct overlap_case {
    word w;
    element<R> difference;
  };
  struct overlap_report {
    size_t examined = 0;
    std::vector<overlap_case> failures;
    bool ok() const { return failures.empty(); }
  };

  // Reduces every overlap word of two rule left-hand sides (bounded by
  // max_len) in the two possible first steps and reports nonzero
  // differences of the resulting normal forms.
  overlap_report check_overlaps(size_t max_len) const {
    overlap_report rep;
    grp zero = grp_zero(dat_.group_rank());
    auto probe = [&](const word& w, size_t r1, size_t p1, size_t r2, size_t p2) {
      ++rep.examined;
      element<R> e1 = normal_form(apply_rule_at(R(1L), w, zero, r1, p1));
      element<R> e2 = normal_form(apply_rule_at(R(1L), w, zero, r2, p2));
      element<R> d = e1 - e2;
      if (!d.is_zero()) rep.failures.push_back({w, std::move(d)});
    };
    for (size_t i = 0; i < rules_.size(); ++i)
      for (size_t j = 0; j < rules_.size(); ++j) {
        const word& a = rules_[i].lhs;
        const word& b = rules_[j].lhs;
        // suffix of a meets prefix of b
        for (size_t o = 1; o < std::min(a.size(), b.size()) + (i == j ? 0 : 1); ++o) {
          if (o == a.size() && o == b.size()) continue;  // identical, no new word
          if (o > a.size() || o > b.size()) break;
          if (!std::equal(a.end() - o, a.end(), b.begin())) continue;
          word w = a;
          w.insert(w.end(), b.begin() + o, b.end());
          if (w.size() > max_len) continue;
          probe(w, i, 0, j, a.size() - o);
        }
        // b strictly inside a
        if (b.size() < a.size())
          for (size_t p = 0; p + b.size() <= a.size(); ++p)
            if (std::equal(b.begin(), b.end(), a.begin() + p) && a.size() <= max_len)
              probe(a, i, 0, j, p);
      }
    return rep;
  }

  // Top x-degree parts of the defining relations, with group tails dropped:
  // the relations of the associated graded algebra.
  std::vector<element<R>> graded_relations() const {
    std::vector<element<R>> out;
    grp zero = grp_zero(dat_.group_rank());
    for (const rule<R>& r : rules_) {
      element<R> e;
      e.add(R(1L), r.lhs, zero);
      for (const auto& [k, c] : r.rhs.terms())
        if (k.first.size() == r.lhs.size()) e.add(R(-1L) * c, k.first, zero);
      out.push_back(std::move(e));
    }
    return out;
  }

  size_t step_budget = 2000000;

 private:
  std::optional<std::pair<size_t, size_t>> find_match(const word& w) const {
    for (size_t pos = 0; pos < w.size(); ++pos)
      for (size_t ri = 0; ri < rules_.size(); ++ri) {
        const word& l = rules_[ri].lhs;
        if (pos + l.size() > w.size()) continue;
        if (std::equal(l.begin(), l.end(), w.begin() + pos)) return {{ri, pos}};
      }
    return std::nullopt;
  }

  std::string word_str(const word& w) const {
    std::string s;
    for (size_t l : w) s += "x[" + dat_.label(l) + "]";
    return s.empty() ? "1" : s;
  }

  datum dat_;
  flavor flavor_;
  std::map<pair_key, R> lambda_;
  bilinear_form<R> sigma_;
  std::map<pair_key, R> mu_;
  std::vector<rule<R>> rules_;
};

// --- braided commutators and block rewrite systems (scalar coefficients) ---

// ad(x_i) acting on a sum of pure x-words of a common group degree:
// ad(x_i)(w) = x_i w - chi_w(g_i) w x_i.
element<scalar> braided_adjoint(const datum& d, size_t i, const element<scalar>& a);

// (ad x_i)^{1 - a_ij}(x_j); requires i != j.
element<scalar> serre_element(const datum& d, size_t i, size_t j, long a_ij);

// Splits off the largest word as a rewrite rule lhs -> rhs.  The input must
// be a sum of pure x-words with a unique largest term.
rule<scalar> orient_rule(const element<scalar>& e);

// Oriented in-block relations for one block, run through a bounded
// completion until the block system is locally confluent.  When `completed`
// is supplied it receives the outcome; otherwise failure to complete throws.
std::vector<rule<scalar>> serre_block_rules(const datum& d, size_t block,
                                            bool* completed = nullptr);

template <class R>
rule<R> lift_rule(const rule<scalar>& r) {
  rule<R> out;
  out.lhs = r.lhs;
  for (const auto& [k, c] : r.rhs.terms()) out.rhs.add(R(c), k.first, k.second);
  return out;
}

// --- presentation factory ---

template <class R>
presentation<R> build_presentation(const datum& d, flavor f,
                                   const std::map<pair_key, R>& lambda = {},
                                   const bilinear_form<R>* sigma = nullptr,
                                   const std::map<pair_key, R>& mu = {},
                                   const std::vector<rule<R>>* block_rules = nullptr,
                                   bool validated = true) {
  size_t m = d.group_rank();
  bilinear_form<R> sig = sigma ? *sigma : bilinear_form<R>(m);
  bool crossed = flavor_is_crossed(f);
  bool uses_lambda =
      f == flavor::cleft || f == flavor::linked || f == flavor::contracted ||
      f == flavor::linked_twisted;
  bool uses_mu = crossed;

  auto nonzero_keys = [](const std::map<pair_key, R>& p) {
    std::vector<pair_key> ks;
    for (const auto& [k, v] : p)
      if (!v.is_zero()) ks.push_back(k);
    return ks;
  };
  auto contains = [](const std::vector<pair_key>& set, const pair_key& k) {
    return std::find(set.begin(), set.end(), k) != set.end();
  };
  if (validated) {
    if (uses_lambda) {
      auto xi = d.xi();
      for (const auto& k : nonzero_keys(lambda))
        if (!contains(xi, k))
          throw std::domain_error("build_presentation: linking constant outside the "
                                  "allowed support at (" + d.label(k.first) + "," +
                                  d.label(k.second) + ")");
    }
    if (uses_mu) {
      auto xs = xi_sigma_r<R>(d, sig);
      for (const auto& k : nonzero_keys(mu))
        if (!contains(xs, k))
          throw std::domain_error("build_presentation: twist constant outside the "
                                  "allowed support at (" + d.label(k.first) + "," +
                                  d.label(k.second) + ")");
    }
  }

  std::vector<rule<R>> rules;
  if (f != flavor::free_skew) {
    // straightening rules for every cross-block pair
    grp zero = grp_zero(m);
    for (const auto& [i, j] : d.theta()) {
      rule<R> r;
      r.lhs = {i, j};
      r.rhs.add(R(d.braiding(i, j)), {j, i}, zero);
      auto lam = lambda.find({i, j});
      R lv = (uses_lambda && lam != lambda.end()) ? lam->second : R(0L);
      auto muv = mu.find({i, j});
      R mv = (uses_mu && muv != mu.end()) ? muv->second : R(0L);
      grp gij = grp_add(d.g(i), d.g(j));
      switch (f) {
        case flavor::cleft:
          r.rhs.add(lv, {}, gij);
          break;
        case flavor::linked:
          r.rhs.add(lv, {}, gij);
          r.rhs.add(R(-1L) * lv, {}, zero);
          break;
        case flavor::contracted:
          r.rhs.add(R(-1L) * lv, {}, zero);
          break;
        case flavor::twisted:
          r.rhs.add(mv * sig.eval(d.g(i), d.g(j)), {}, gij);
          break;
        case flavor::linked_twisted:
          r.rhs.add(R(-1L) * lv, {}, zero);
          r.rhs.add(mv * sig.eval(d.g(i), d.g(j)), {}, gij);
          break;
        default:
          break;
      }
      rules.push_back(std::move(r));
    }
    // in-block rules
    if (block_rules != nullptr) {
      for (const rule<R>& r : *block_rules) rules.push_back(r);
    } else {
      for (size_t b = 0; b < d.num_blocks(); ++b)
        for (const rule<scalar>& r : serre_block_rules(d, b))
          rules.push_back(lift_rule<R>(r));
    }
  }

  presentation<R> p(d, f, lambda, std::move(sig), mu, std::move(rules));
  if (validated) p.validate_rules();
  return p;
}

// --- raw overlap bookkeeping ---

// A word in which some positions already hold group elements that are not
// commuted onward.  Used to replay the cross-block straightening of a
// length-three overlap exactly as written, before group letters move.
using placed_item = std::variant<size_t, grp>;
using placed_word = std::vector<placed_item>;
using placed_element = std::map<placed_word, scalar>;

// Applies the cross-block rules x_a x_b -> q_ab x_b x_a + lambda_ab K(...)
// at adjacent letter-letter positions only, leaving every group element in
// place.  The first application happens at `forced_pos` when nonnegative.
placed_element straighten_keep_groups(const datum& d, const pair_map& lambda,
                                      const placed_word& start, long forced_pos = -1);

struct triple_overlap {
  placed_element left;   // reduction that starts at the front pair
  placed_element right;  // reduction that starts at the back pair
};

// The two raw reductions of x_i x_j x_k for letters in strictly descending
// blocks.
triple_overlap triple_overlap_raw(const datum& d, const pair_map& lambda, size_t i,
                                  size_t j, size_t k);

// --- truncated spanning oracle ---

// Dimension of the degree-d piece of the free x-algebra on `nletters`
// modulo the two-sided ideal generated by homogeneous pure-x relations,
// computed by exact Gaussian elimination on the spanning set u * r * v.
size_t homogeneous_quotient_dim(const std::vector<element<scalar>>& relations,
                                size_t nletters, size_t deg);

}  // namespace qdeform
