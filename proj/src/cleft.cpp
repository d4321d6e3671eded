#include "qdeform/cleft.hpp"

#include <set>

#include "json.hpp"

namespace qdeform {

std::optional<one_cochain> pair_equivalent(const datum& d, const pair_sigma_mu& p,
                                           const pair_sigma_mu& q) {
  size_t m = d.group_rank();
  if (p.sigma.rank() != m || q.sigma.rank() != m)
    throw std::invalid_argument("pair_equivalent: cocycle rank does not match the group");
  bilinear_cocycle ratio = q.sigma * p.sigma.inverse();
  if (!ratio.is_symmetric()) return std::nullopt;  // distinct skew invariants
  std::vector<std::vector<scalar>> s(m, std::vector<scalar>(m, scalar(1L)));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) s[i][j] = ratio.entry(i, j).inverse();
  one_cochain quad(std::vector<scalar>(m, scalar(1L)), s);

  std::set<pair_key> keys;
  for (const auto& [k, v] : p.mu)
    if (!v.is_zero()) keys.insert(k);
  for (const auto& [k, v] : q.mu)
    if (!v.is_zero()) keys.insert(k);
  imat rows;
  std::vector<scalar> rhs;
  for (const auto& [i, j] : keys) {
    scalar pv = pair_get(p.mu, i, j), qv = pair_get(q.mu, i, j);
    if (pv.is_zero() || qv.is_zero()) return std::nullopt;  // zero patterns differ
    grp gij = grp_add(d.g(i), d.g(j));
    std::vector<bigint> row;
    for (long e : gij) row.emplace_back(e);
    rows.push_back(std::move(row));
    rhs.push_back(qv / pv / (quad.eval(d.g(i)) * quad.eval(d.g(j))));
  }
  // with no twisting constants in play the free choice w = 1 always works
  auto w = keys.empty() ? std::optional<std::vector<scalar>>(
                              std::vector<scalar>(m, scalar(1L)))
                        : solve_power_system(rows, rhs);
  if (!w) return std::nullopt;
  one_cochain eta(*w, s);
  if (!(p.sigma * eta.coboundary() == q.sigma))
    throw std::domain_error("pair_equivalent: witness fails the cocycle transformation");
  for (const auto& [i, j] : keys)
    if (!(pair_get(p.mu, i, j) * eta.eval(d.g(i)) * eta.eval(d.g(j)) == pair_get(q.mu, i, j)))
      throw std::domain_error("pair_equivalent: witness fails the twist transformation");
  return eta;
}

classification classify(const datum& d, const std::vector<pair_sigma_mu>& pairs) {
  classification cl;
  cl.orbit_of.assign(pairs.size(), 0);
  for (size_t i = 0; i < pairs.size(); ++i) {
    bool placed = false;
    for (auto& ob : cl.orbits) {
      auto w = pair_equivalent(d, pairs[ob.representative], pairs[i]);
      if (w) {
        ob.members.push_back(i);
        ob.witnesses.push_back(*w);
        cl.orbit_of[i] = ob.id;
        placed = true;
        break;
      }
    }
    if (placed) continue;
    orbit ob;
    ob.id = cl.orbits.size();
    ob.representative = i;
    ob.members = {i};
    size_t m = d.group_rank();
    ob.witnesses = {one_cochain(
        std::vector<scalar>(m, scalar(1L)),
        std::vector<std::vector<scalar>>(m, std::vector<scalar>(m, scalar(1L))))};
    cl.orbit_of[i] = ob.id;
    cl.orbits.push_back(std::move(ob));
  }
  return cl;
}

std::string classification_json(const datum& d, const std::vector<pair_sigma_mu>& pairs,
                                const classification& cl) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& ob : cl.orbits) {
    nlohmann::json rec;
    rec["orbit_id"] = ob.id;
    rec["representative"] = ob.representative;
    const pair_sigma_mu& rep = pairs[ob.representative];
    nlohmann::json skew = nlohmann::json::array();
    for (size_t i = 0; i < rep.sigma.rank(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (size_t j = 0; j < rep.sigma.rank(); ++j) row.push_back(rep.sigma.skew(i, j).str());
      skew.push_back(row);
    }
    rec["skew"] = skew;
    nlohmann::json mu = nlohmann::json::object();
    for (const auto& [k, v] : rep.mu)
      if (!v.is_zero()) mu[d.label(k.first) + "," + d.label(k.second)] = v.str();
    rec["mu"] = mu;
    rec["members"] = ob.members;
    nlohmann::json wit = nlohmann::json::array();
    for (size_t t = 0; t < ob.members.size(); ++t) {
      nlohmann::json w;
      w["member"] = ob.members[t];
      nlohmann::json vals = nlohmann::json::object();
      for (size_t i = 0; i < d.size(); ++i)
        vals[d.label(i)] = ob.witnesses[t].eval(d.g(i)).str();
      w["eta_on_degrees"] = vals;
      wit.push_back(w);
    }
    rec["witnesses"] = wit;
    out.push_back(rec);
  }
  return out.dump(2);
}

// ---------------------------------------------------------------------------
// Augmented pairs.

mvec aug_get(const std::map<pair_key, mvec>& m, size_t i, size_t j) {
  auto it = m.find({i, j});
  return it == m.end() ? mvec() : it->second;
}

void aug_pair_validate(const datum& d, const aug_pair_sm& p, const pair_map& lambda) {
  size_t m = d.group_rank();
  if (p.s.rank() != m)
    throw std::invalid_argument("aug_pair_validate: cocycle rank does not match the group");
  auto xi = d.xi();
  std::set<pair_key> linkable(xi.begin(), xi.end());
  for (const auto& [k, v] : p.m)
    if (!v.is_zero() && !linkable.count(k))
      throw std::domain_error("aug_pair_validate: correction outside the linkable support at (" +
                              d.label(k.first) + ", " + d.label(k.second) + ")");
  for (const auto& [i, j] : xi) {
    if (pair_get(lambda, i, j).is_zero() && aug_get(p.m, i, j).is_zero()) continue;
    grp gij = grp_add(d.g(i), d.g(j));
    for (size_t r = 0; r < m; ++r) {
      grp er = grp_unit(m, r);
      if (p.s.eval(er, gij) != p.s.eval(gij, er))
        throw std::domain_error("aug_pair_validate: cocycle incompatible with the pair (" +
                                d.label(i) + ", " + d.label(j) + ")");
    }
  }
}

aug_extension aug_pair_to_extension(const datum& d, const aug_pair_sm& p,
                                    const pair_map& lambda, size_t maxdeg) {
  aug_pair_validate(d, p, lambda);
  std::map<pair_key, km> lam_km, mu_km;
  for (const auto& [k, v] : lambda)
    if (!v.is_zero()) lam_km[k] = km(v);
  for (const auto& [i, j] : d.xi()) {
    km mu(pair_get(lambda, i, j), aug_get(p.m, i, j));
    if (!mu.is_zero()) mu_km[{i, j}] = mu;
  }
  bilinear_form<km> sig = p.s.one_plus();
  aug_extension ext;
  ext.hopf = std::make_shared<presentation<km>>(
      build_presentation<km>(d, flavor::linked, lam_km));
  ext.alg = std::make_shared<presentation<km>>(
      build_presentation<km>(d, flavor::linked_twisted, lam_km, &sig, mu_km));
  // letters to zero and group symbols to one must kill every rewrite rule
  // after the soul of the coefficient ring is collapsed
  for (const rule<km>& r : ext.alg->rules()) {
    km acc(0L);
    for (const auto& [k, c] : r.rhs.terms())
      if (k.first.empty()) acc += c;
    if (!acc.body().is_zero())
      throw std::domain_error("aug_pair_to_extension: augmentation does not vanish on a rule");
  }
  ext.cleft = make_cleft(ext.hopf.get(), ext.alg.get(), cleft_side::left, maxdeg);
  return ext;
}

// Exact solve of an integer-coefficient linear system with values in M.
static std::optional<std::vector<mvec>> solve_linear_mvec(
    const std::vector<std::vector<long>>& a, std::vector<mvec> rhs, size_t m) {
  size_t n = a.size();
  std::vector<std::vector<scalar>> sa(n, std::vector<scalar>(m, scalar(0L)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) sa[i][j] = scalar(a[i][j]);
  std::vector<long> pivcol;
  size_t row = 0;
  for (size_t col = 0; col < m && row < n; ++col) {
    size_t pr = row;
    while (pr < n && sa[pr][col].is_zero()) ++pr;
    if (pr == n) continue;
    std::swap(sa[pr], sa[row]);
    std::swap(rhs[pr], rhs[row]);
    scalar inv = sa[row][col].inverse();
    for (size_t j = 0; j < m; ++j) sa[row][j] = sa[row][j] * inv;
    rhs[row] = rhs[row] * inv;
    for (size_t r2 = 0; r2 < n; ++r2) {
      if (r2 == row || sa[r2][col].is_zero()) continue;
      scalar f = sa[r2][col];
      for (size_t j = 0; j < m; ++j) sa[r2][j] = sa[r2][j] - f * sa[row][j];
      rhs[r2] = rhs[r2] - rhs[row] * f;
    }
    pivcol.push_back(static_cast<long>(col));
    ++row;
  }
  for (size_t r2 = row; r2 < n; ++r2)
    if (!rhs[r2].is_zero()) return std::nullopt;
  std::vector<mvec> w(m);
  for (size_t k = 0; k < pivcol.size(); ++k) w[static_cast<size_t>(pivcol[k])] = rhs[k];
  return w;
}

std::optional<add_cochain> aug_equivalent(const datum& d, const aug_pair_sm& p,
                                          const aug_pair_sm& q, const pair_map& lambda) {
  size_t m = d.group_rank();
  if (p.s.rank() != m || q.s.rank() != m)
    throw std::invalid_argument("aug_equivalent: cocycle rank does not match the group");
  add_bilinear diff = q.s - p.s;
  if (!diff.is_symmetric()) return std::nullopt;  // distinct skew invariants
  std::vector<std::vector<mvec>> s(m, std::vector<mvec>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) s[i][j] = -diff.entry(i, j);
  add_cochain quad(std::vector<mvec>(m), s);
  std::vector<std::vector<long>> rows;
  std::vector<mvec> rhs;
  for (const auto& [i, j] : d.xi()) {
    scalar lv = pair_get(lambda, i, j);
    mvec mp = aug_get(p.m, i, j), mq = aug_get(q.m, i, j);
    if (lv.is_zero()) {
      if (mp != mq) return std::nullopt;  // unlinked corrections are rigid
      continue;
    }
    grp gij = grp_add(d.g(i), d.g(j));
    rows.emplace_back(gij.begin(), gij.end());
    rhs.push_back((mp - mq) * lv.inverse() - quad.eval(d.g(i)) - quad.eval(d.g(j)));
  }
  auto w = solve_linear_mvec(rows, std::move(rhs), m);
  if (!w) return std::nullopt;
  add_cochain t(*w, s);
  if (!(p.s + t.coboundary() == q.s))
    throw std::domain_error("aug_equivalent: witness fails the cocycle transformation");
  for (const auto& [i, j] : d.xi())
    if (aug_get(q.m, i, j) !=
        aug_get(p.m, i, j) - (t.eval(d.g(i)) + t.eval(d.g(j))) * pair_get(lambda, i, j))
      throw std::domain_error("aug_equivalent: witness fails the correction transformation");
  return t;
}

add_cochain whitehead_reduce(const datum& d, const aug_pair_sm& p, const pair_map& lambda) {
  aug_pair_validate(d, p, lambda);
  for (const auto& [i, j] : d.xi())
    if (pair_get(lambda, i, j).is_zero())
      throw std::domain_error("whitehead_reduce: linking constant vanishes at (" + d.label(i) +
                              ", " + d.label(j) + ")");
  if (!p.s.is_symmetric())
    throw std::domain_error("whitehead_reduce: additive cocycle has a skew part");
  aug_pair_sm zero;
  zero.s = add_bilinear(d.group_rank());
  auto t = aug_equivalent(d, p, zero, lambda);
  if (!t) throw std::domain_error("whitehead_reduce: reduction system is unsolvable");
  return *t;
}

}  // namespace qdeform
