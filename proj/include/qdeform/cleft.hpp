// Cleft comodule algebras over the Hopf flavors: verified colinear sections
// and their convolution inverses, the coinvariant test, cocycle extraction on
// either side, cocycle-deformed products, normalization of the distinguished
// generators, equivalence and orbit classification of twisting pairs, and the
// augmented calculus over the square-zero extension with its reduction to the
// trivial pair.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qdeform/hopf.hpp"

namespace qdeform {

// Which side of the algebra the Hopf flavor coacts on.
enum class cleft_side { left, right };

// A comodule algebra bundled with the coacting Hopf flavor and a colinear,
// convolution-invertible section of basis symbols.  `depth` is the x-degree
// up to which the structure has been verified and the inverse is exact.
template <class R>
struct cleft_object {
  const presentation<R>* hopf = nullptr;
  const presentation<R>* alg = nullptr;
  cleft_side side = cleft_side::left;
  filtered_map<R> section;      // hopf -> alg on basis symbols
  filtered_map<R> section_inv;  // convolution inverse, exact up to depth
  size_t depth = 0;
};

// The coaction read off from the shared letter and group symbols: the Hopf
// leg sits on the chosen side, the algebra leg on the other.
template <class R>
tensor2<R> coaction(const cleft_object<R>& c, const element<R>& e) {
  return c.side == cleft_side::left ? coproduct(*c.hopf, *c.alg, e)
                                    : coproduct(*c.alg, *c.hopf, e);
}

// Builds the identity-on-basis section hopf -> alg and checks, up to
// x-degree maxdeg, that the coaction makes the algebra a comodule algebra
// (counit and coassociativity on basis symbols, multiplicativity on a
// deterministic sample of basis pairs) and that the section is colinear and
// convolution invertible from both sides.  Throws std::domain_error naming
// the first failing symbol.
template <class R>
cleft_object<R> make_cleft(const presentation<R>* hopf, const presentation<R>* alg,
                           cleft_side side, size_t maxdeg, size_t pair_budget = 60) {
  cleft_object<R> c;
  c.hopf = hopf;
  c.alg = alg;
  c.side = side;
  c.depth = maxdeg;
  c.section = identity_section(hopf, alg);
  c.section_inv = conv_inverse(c.section, maxdeg);

  const presentation<R>& h = *hopf;
  const presentation<R>& al = *alg;
  const presentation<R>& p1 = (side == cleft_side::left) ? h : al;
  const presentation<R>& p2 = (side == cleft_side::left) ? al : h;
  auto rho = [&](const element<R>& e) { return coproduct(p1, p2, e); };

  auto symbols = sample_basis(al, maxdeg);
  for (const auto& k : symbols) {
    element<R> ek = key_element<R>(k);
    tensor2<R> d = rho(ek);
    // counit axiom of the comodule
    element<R> back;
    for (const auto& [kk, v] : d.terms) {
      const auto& hk = (side == cleft_side::left) ? kk.first : kk.second;
      const auto& ak = (side == cleft_side::left) ? kk.second : kk.first;
      back = back + key_element<R>(ak) * (v * counit(key_element<R>(hk)));
    }
    if (!(back == ek))
      throw std::domain_error("make_cleft: coaction counit axiom fails at " + ek.str(al.dat()));
    // coassociativity of the coaction against the coproduct
    tensor3<R> it1, it2, direct;
    if (side == cleft_side::left) {
      direct = coproduct2(h, h, al, ek);
      for (const auto& [kk, v] : d.terms) {
        for (const auto& [k2, v2] : coproduct(h, h, key_element<R>(kk.first)).terms)
          it1.add(v * v2, k2.first, k2.second, kk.second);
        for (const auto& [k2, v2] : coproduct(h, al, key_element<R>(kk.second)).terms)
          it2.add(v * v2, kk.first, k2.first, k2.second);
      }
    } else {
      direct = coproduct2(al, h, h, ek);
      for (const auto& [kk, v] : d.terms) {
        for (const auto& [k2, v2] : coproduct(al, h, key_element<R>(kk.first)).terms)
          it1.add(v * v2, k2.first, k2.second, kk.second);
        for (const auto& [k2, v2] : coproduct(h, h, key_element<R>(kk.second)).terms)
          it2.add(v * v2, kk.first, k2.first, k2.second);
      }
    }
    if (!(it1 == direct) || !(it2 == direct))
      throw std::domain_error("make_cleft: coaction coassociativity fails at " + ek.str(al.dat()));
  }
  // multiplicativity of the coaction on a strided sample of basis pairs
  size_t stride = symbols.size() < pair_budget ? 1 : symbols.size() / pair_budget + 1;
  for (size_t i = 0; i < symbols.size(); i += stride)
    for (size_t j = 0; j < symbols.size(); j += stride) {
      if (symbols[i].first.size() + symbols[j].first.size() > maxdeg) continue;
      element<R> a = key_element<R>(symbols[i]), b = key_element<R>(symbols[j]);
      if (!(rho(al.mul(a, b)) == t2_mul(p1, p2, rho(a), rho(b))))
        throw std::domain_error("make_cleft: coaction is not an algebra map at " +
                                a.str(al.dat()) + " | " + b.str(al.dat()));
    }
  // colinearity of the section and two-sided convolution invertibility
  filtered_map<R> unit = fm_unit(hopf, alg);
  filtered_map<R> ss = convolve(c.section, c.section_inv);
  filtered_map<R> si = convolve(c.section_inv, c.section);
  for (const auto& k : sample_basis(h, maxdeg)) {
    element<R> ek = key_element<R>(k);
    tensor2<R> lhs = coaction(c, c.section.value(k.first, k.second));
    tensor2<R> rhs;
    for (const auto& [kk, v] : coproduct(h, h, ek).terms) {
      if (side == cleft_side::left) {
        const element<R>& tail = c.section.value(kk.second.first, kk.second.second);
        for (const auto& [ak, av] : tail.terms()) rhs.add(v * av, kk.first, ak);
      } else {
        const element<R>& head = c.section.value(kk.first.first, kk.first.second);
        for (const auto& [ak, av] : head.terms()) rhs.add(v * av, ak, kk.second);
      }
    }
    if (!(lhs == rhs))
      throw std::domain_error("make_cleft: section is not colinear at " + ek.str(h.dat()));
    const element<R>& u = unit.value(k.first, k.second);
    if (!(ss.value(k.first, k.second) == u) || !(si.value(k.first, k.second) == u))
      throw std::domain_error("make_cleft: section is not convolution invertible at " +
                              ek.str(h.dat()));
  }
  return c;
}

// Replaces the section value at one basis symbol, keeping all others, and
// recomputes the convolution inverse.
template <class R>
void override_section(cleft_object<R>& c, word w, grp g, element<R> v) {
  filtered_map<R> old = c.section;
  auto key = std::make_pair(std::move(w), std::move(g));
  element<R> nv = std::move(v);
  c.section = filtered_map<R>(
      c.hopf, c.alg, [old, key, nv](const word& ww, const grp& gg) -> element<R> {
        if (ww == key.first && gg == key.second) return nv;
        return old.value(ww, gg);
      });
  c.section_inv = conv_inverse(c.section, c.depth);
}

struct coinvariants_report {
  std::vector<size_t> dims;  // dimension of the coinvariants in each x-degree
  bool pass = false;         // the coinvariants are exactly the scalars
  std::string witness;       // a nonscalar coinvariant when one exists
};

// Solves rho(a) = 1 (x) a (left side; a (x) 1 on the right) exactly, degree
// by degree.  The degree-zero leg of the coaction pins the group symbol a
// candidate word can carry, and the remaining legs give a finite linear
// system whose kernel is the space of coinvariants of that degree.
template <class R>
coinvariants_report coinvariants_check(const cleft_object<R>& c, size_t maxdeg) {
  const datum& dt = c.alg->dat();
  size_t m = dt.group_rank();
  coinvariants_report rep;
  rep.pass = true;
  auto levels = c.alg->basis_enumerate(maxdeg);
  for (size_t deg = 0; deg < levels.size(); ++deg) {
    std::vector<basis_key<R>> cand;
    std::vector<tensor2<R>> defect;
    for (const word& w : levels[deg]) {
      grp gw = grp_zero(m);
      for (size_t l : w) gw = grp_add(gw, dt.g(l));
      grp gc = (c.side == cleft_side::left) ? grp_neg(gw) : grp_zero(m);
      basis_key<R> k{w, gc};
      tensor2<R> t = coaction(c, key_element<R>(k));
      if (c.side == cleft_side::left)
        t.add(R(-1L), basis_key<R>{{}, grp_zero(m)}, k);
      else
        t.add(R(-1L), k, basis_key<R>{{}, grp_zero(m)});
      cand.push_back(std::move(k));
      defect.push_back(std::move(t));
    }
    // assemble the defect matrix over the distinct tensor keys
    std::map<std::pair<basis_key<R>, basis_key<R>>, size_t, typename tensor2<R>::less> rowof;
    for (const auto& t : defect)
      for (const auto& [kk, v] : t.terms)
        if (!rowof.count(kk)) {
          size_t n = rowof.size();
          rowof.emplace(kk, n);
        }
    size_t nrow = rowof.size(), ncol = cand.size();
    std::vector<std::vector<R>> mat(nrow, std::vector<R>(ncol, R(0L)));
    for (size_t j = 0; j < ncol; ++j)
      for (const auto& [kk, v] : defect[j].terms) mat[rowof.at(kk)][j] = v;
    // reduced row echelon form; kernel vectors come from the free columns
    std::vector<long> pivot_of_col(ncol, -1);
    size_t row = 0;
    for (size_t col = 0; col < ncol && row < nrow; ++col) {
      size_t pr = nrow;
      for (size_t r = row; r < nrow; ++r)
        if (mat[r][col].is_unit()) {
          pr = r;
          break;
        }
      if (pr == nrow) {
        for (size_t r = row; r < nrow; ++r)
          if (!mat[r][col].is_zero())
            throw std::domain_error("coinvariants_check: non-invertible pivot over the "
                                    "coefficient ring");
        continue;
      }
      std::swap(mat[pr], mat[row]);
      R inv = mat[row][col].inverse();
      for (size_t j = col; j < ncol; ++j) mat[row][j] = mat[row][j] * inv;
      for (size_t r = 0; r < nrow; ++r) {
        if (r == row || mat[r][col].is_zero()) continue;
        R f = mat[r][col];
        for (size_t j = col; j < ncol; ++j) mat[r][j] = mat[r][j] - f * mat[row][j];
      }
      pivot_of_col[col] = static_cast<long>(row);
      ++row;
    }
    size_t kdim = 0;
    for (size_t col = 0; col < ncol; ++col) {
      if (pivot_of_col[col] >= 0) continue;
      ++kdim;
      if (deg > 0 && rep.witness.empty()) {
        element<R> wv = key_element<R>(cand[col]);
        for (size_t j = 0; j < col; ++j)
          if (pivot_of_col[j] >= 0) {
            R v = mat[static_cast<size_t>(pivot_of_col[j])][col];
            if (!v.is_zero())
              wv = wv - key_element<R>(cand[j]) * v;
          }
        rep.witness = wv.str(dt);
      }
    }
    rep.dims.push_back(kdim);
    if (deg == 0 ? kdim != 1 : kdim != 0) rep.pass = false;
  }
  return rep;
}

// The cocycle carried by the section.  On the right side
//   sigma(a, b) = sum phi(a_(1)) phi(b_(1)) phi^{-1}(a_(2) b_(2)),
// on the left side
//   tau(a, b) = sum phi^{-1}(a_(1) b_(1)) phi(a_(2)) phi(b_(2)).
// The value must land in the coinvariants, i.e. be a multiple of the
// identity; anything else throws std::domain_error.
template <class R>
R extract_cocycle(const cleft_object<R>& c, const element<R>& a, const element<R>& b) {
  const presentation<R>& h = *c.hopf;
  const presentation<R>& al = *c.alg;
  tensor2<R> da = coproduct(h, h, a), db = coproduct(h, h, b);
  element<R> acc;
  for (const auto& [ka, va] : da.terms)
    for (const auto& [kb, vb] : db.terms) {
      R v = va * vb;
      if (c.side == cleft_side::right) {
        element<R> outer = al.mul(c.section.value(ka.first.first, ka.first.second),
                                  c.section.value(kb.first.first, kb.first.second));
        element<R> mid = h.mul(key_element<R>(ka.second), key_element<R>(kb.second));
        acc = acc + al.mul(outer, c.section_inv.apply(mid)) * v;
      } else {
        element<R> mid = h.mul(key_element<R>(ka.first), key_element<R>(kb.first));
        element<R> outer = al.mul(c.section.value(ka.second.first, ka.second.second),
                                  c.section.value(kb.second.first, kb.second.second));
        acc = acc + al.mul(c.section_inv.apply(mid), outer) * v;
      }
    }
  if (acc.is_zero()) return R(0L);
  if (acc.size() != 1)
    throw std::domain_error("extract_cocycle: value is not a multiple of the identity");
  const auto& [k, r] = *acc.terms().begin();
  if (!k.first.empty() || !grp_is_zero(k.second))
    throw std::domain_error("extract_cocycle: value is not a multiple of the identity");
  return r;
}

// Memoized functional form of the extracted cocycle on basis pairs.
template <class R>
bifunctional<R> extracted_cocycle(const cleft_object<R>& c) {
  return bifunctional<R>(c.hopf, [c](const basis_key<R>& a, const basis_key<R>& b) {
    return extract_cocycle(c, key_element<R>(a), key_element<R>(b));
  });
}

// The cocycle-deformed product
//   a *_sigma b = sum sigma(a_(1), b_(1)) a_(2) b_(2) sigma^{-1}(a_(3), b_(3))
// with both Sweedler legs expanded in the given Hopf flavor.
template <class R>
element<R> deformed_product(const presentation<R>& h, const bifunctional<R>& sig,
                            const bifunctional<R>& sig_inv, const element<R>& a,
                            const element<R>& b) {
  tensor3<R> da = coproduct2(h, h, h, a), db = coproduct2(h, h, h, b);
  element<R> out;
  for (const auto& [ka, va] : da.terms)
    for (const auto& [kb, vb] : db.terms) {
      R head = sig.eval(std::get<0>(ka), std::get<0>(kb));
      if (head.is_zero()) continue;
      R tail = sig_inv.eval(std::get<2>(ka), std::get<2>(kb));
      if (tail.is_zero()) continue;
      out = out + h.mul(key_element<R>(std::get<1>(ka)), key_element<R>(std::get<1>(kb))) *
                      (va * vb * head * tail);
    }
  return out;
}

template <class R>
element<R> deformed_product(const presentation<R>& h, const bifunctional<R>& sig,
                            const element<R>& a, const element<R>& b) {
  return deformed_product(h, sig, conv_inverse_bi(sig, a.x_degree() + b.x_degree() + 1), a, b);
}

struct deformation_report {
  size_t pairs = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Checks that the graded Hopf flavor is the cocycle deformation of the
// linked one: the connecting comodule algebra is bicleft (left over the
// graded flavor, right over the linked one), and the cocycle extracted from
// its right section, applied to the linked product, reproduces the graded
// product on every basis pair of total x-degree <= maxdeg, plus a sample of
// group-decorated pairs.
template <class R>
deformation_report compare_deformation(const presentation<R>& h0, const presentation<R>& hl,
                                       size_t maxdeg) {
  if (!(h0.dat() == hl.dat()))
    throw std::invalid_argument("compare_deformation: flavors of different data");
  if (h0.kind() != flavor::graded || hl.kind() != flavor::linked)
    throw std::invalid_argument("compare_deformation: expects the graded and linked flavors");
  const datum& dt = hl.dat();
  presentation<R> a = build_presentation<R>(dt, flavor::cleft, hl.lambda());
  make_cleft(&h0, &a, cleft_side::left, maxdeg);
  cleft_object<R> cr = make_cleft(&hl, &a, cleft_side::right, maxdeg);
  bifunctional<R> sig = extracted_cocycle(cr);
  bifunctional<R> sig_inv = conv_inverse_bi(sig, maxdeg + 1);
  deformation_report rep;
  auto levels = hl.basis_enumerate(maxdeg);
  grp g0 = grp_zero(dt.group_rank());
  grp e0 = dt.group_rank() ? grp_unit(dt.group_rank(), 0) : g0;
  for (size_t da = 0; da < levels.size(); ++da)
    for (size_t db = 0; da + db < levels.size(); ++db)
      for (const word& wa : levels[da])
        for (const word& wb : levels[db]) {
          std::vector<std::pair<grp, grp>> gp = {{g0, g0}};
          if (da + db <= 2 && dt.group_rank())
            gp.insert(gp.end(), {{e0, g0}, {g0, e0}, {grp_neg(e0), e0}});
          for (const auto& [ga, gb] : gp) {
            element<R> ea = key_element<R>({wa, ga}), eb = key_element<R>({wb, gb});
            element<R> want = h0.mul(ea, eb);
            element<R> got = deformed_product(hl, sig, sig_inv, ea, eb);
            ++rep.pairs;
            if (!(want == got))
              rep.mismatches.push_back(ea.str(dt) + " | " + eb.str(dt) + " : " + got.str(dt) +
                                       " instead of " + want.str(dt));
          }
        }
  return rep;
}

// Normalizes the section value at letter i against the group symbol of its
// degree: the commutation defect
//   gt * xt - q_ii xt * gt = cc * gt^2
// is killed by the correction xt -> xt + (q_ii - 1)^{-1} cc gt, which is the
// unique correction of this shape.  Re-verifies the character commutation
// law for the corrected value, installs it in the section, and returns it.
// Throws when q_ii = 1 or the defect is not a multiple of gt^2.
template <class R>
element<R> normalize_nb(cleft_object<R>& c, size_t i) {
  const datum& dt = c.alg->dat();
  scalar qii = dt.braiding(i, i);
  if ((qii - scalar(1L)).is_zero())
    throw std::domain_error("normalize_nb: braiding q_ii = 1 admits no normalization");
  grp gz = grp_zero(dt.group_rank());
  element<R> xt = c.section.value({i}, gz);
  element<R> gt = c.section.value({}, dt.g(i));
  element<R> defect = c.alg->mul(gt, xt) - c.alg->mul(xt, gt) * R(qii);
  R cc(0L);
  if (!defect.is_zero()) {
    element<R> g2 = c.alg->mul(gt, gt);
    const auto& [k2, u2] = *g2.terms().begin();
    cc = defect.coeff(k2.first, k2.second) / u2;
    if (!(g2 * cc == defect))
      throw std::domain_error("normalize_nb: defect is not a multiple of the group square");
  }
  element<R> fixed = xt + gt * (cc / R(qii - scalar(1L)));
  if (!(c.alg->mul(gt, fixed) - c.alg->mul(fixed, gt) * R(qii)).is_zero())
    throw std::domain_error("normalize_nb: correction failed to kill the defect");
  for (size_t r = 0; r < dt.group_rank(); ++r) {
    element<R> gr = c.section.value({}, grp_unit(dt.group_rank(), r));
    if (!(c.alg->mul(gr, fixed) == c.alg->mul(fixed, gr) * R(dt.chi(i).value(r))))
      throw std::domain_error("normalize_nb: normalized value breaks the commutation law");
  }
  override_section(c, {i}, gz, fixed);
  return fixed;
}

// ---------------------------------------------------------------------------
// Twisting pairs (sigma, mu) and their orbit classification.

struct pair_sigma_mu {
  bilinear_cocycle sigma;
  pair_map mu;
};

// Decides equivalence of twisting pairs: a quadratic cochain eta with
//   sigma' = sigma * d(eta)   and   mu'_ij = mu_ij eta(g_i) eta(g_j)
// exists exactly when the skew forms agree, the zero patterns of mu match,
// and the residual power system for the linear part is solvable; the
// returned witness is verified before being handed back.
std::optional<one_cochain> pair_equivalent(const datum& d, const pair_sigma_mu& p,
                                           const pair_sigma_mu& q);

struct orbit {
  size_t id = 0;
  size_t representative = 0;           // index into the input list
  std::vector<size_t> members;
  std::vector<one_cochain> witnesses;  // aligned with members
};

struct classification {
  std::vector<orbit> orbits;
  std::vector<size_t> orbit_of;  // orbit id per input index
};

// Greedy orbit partition of a list of twisting pairs under equivalence.
classification classify(const datum& d, const std::vector<pair_sigma_mu>& pairs);

// JSON report: one record per orbit with its representative's skew matrix
// and twist constants, the member indices, and the witness values on the
// letter degrees.
std::string classification_json(const datum& d, const std::vector<pair_sigma_mu>& pairs,
                                const classification& cl);

// ---------------------------------------------------------------------------
// Augmented pairs over the square-zero extension k (+) M.

struct aug_pair_sm {
  add_bilinear s;
  std::map<pair_key, mvec> m;
};

mvec aug_get(const std::map<pair_key, mvec>& m, size_t i, size_t j);

// Compatibility of 1 + s with the twisting support: every pair carrying a
// linking constant or a correction must satisfy
//   s(g, g_i + g_j) = s(g_i + g_j, g)  for all g.
// Throws std::domain_error naming the first failing pair.
void aug_pair_validate(const datum& d, const aug_pair_sm& p, const pair_map& lambda);

// The comodule algebra over k (+) M attached to an augmented pair: the
// linked Hopf flavor, the twisted algebra with cocycle 1 + s and constants
// lambda + m, and the verified left cleft structure.  The presentations are
// shared so the pointers inside `cleft` stay valid across copies.
struct aug_extension {
  std::shared_ptr<presentation<km>> hopf;
  std::shared_ptr<presentation<km>> alg;
  cleft_object<km> cleft;
};

aug_extension aug_pair_to_extension(const datum& d, const aug_pair_sm& p,
                                    const pair_map& lambda, size_t maxdeg);

// Decides equivalence of augmented pairs: a cochain t with
//   s' = s + dt   and   m'_ij = m_ij - lambda_ij (t(g_i) + t(g_j))
// exists exactly when s' - s is symmetric, the corrections agree on unlinked
// pairs, and the linear system for the values of t is solvable over M.
std::optional<add_cochain> aug_equivalent(const datum& d, const aug_pair_sm& p,
                                          const aug_pair_sm& q, const pair_map& lambda);

// Reduces an augmented pair to (0, 0) when every linkable pair is actually
// linked: the witness has quadratic part built from s and linear part
// m_ij / (2 lambda_ij) on the common degree of a linked pair.  Throws when a
// linking constant vanishes on the support, s has a skew part, or the
// reduction system is unsolvable.
add_cochain whitehead_reduce(const datum& d, const aug_pair_sm& p, const pair_map& lambda);

}  // namespace qdeform
