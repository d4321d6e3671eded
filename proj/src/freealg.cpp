#include "qdeform/freealg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace qdeform {

namespace {

// Common group degree of a sum of pure x-words; throws when terms mix
// degrees or carry group parts.
grp common_degree(const datum& d, const element<scalar>& a) {
  bool have = false;
  grp deg;
  for (const auto& [k, c] : a.terms()) {
    if (!grp_is_zero(k.second))
      throw std::invalid_argument("braided_adjoint: input carries a group part");
    grp s = grp_zero(d.group_rank());
    for (size_t l : k.first) s = grp_add(s, d.g(l));
    if (!have) {
      deg = s;
      have = true;
    } else if (s != deg) {
      throw std::invalid_argument("braided_adjoint: input is not homogeneous");
    }
  }
  return have ? deg : grp_zero(d.group_rank());
}

}  // namespace

element<scalar> braided_adjoint(const datum& d, size_t i, const element<scalar>& a) {
  common_degree(d, a);
  grp zero = grp_zero(d.group_rank());
  element<scalar> out;
  for (const auto& [k, c] : a.terms()) {
    word left;
    left.push_back(i);
    left.insert(left.end(), k.first.begin(), k.first.end());
    out.add(c, std::move(left), zero);
    scalar f(1L);
    for (size_t l : k.first) f = f * d.braiding(i, l);
    word right = k.first;
    right.push_back(i);
    out.add(-(c * f), std::move(right), zero);
  }
  return out;
}

element<scalar> serre_element(const datum& d, size_t i, size_t j, long a_ij) {
  if (i == j) throw std::invalid_argument("serre_element: equal letters");
  if (a_ij > 0) throw std::invalid_argument("serre_element: positive Cartan entry");
  element<scalar> e;
  e.add(scalar(1L), {j}, grp_zero(d.group_rank()));
  for (long t = 0; t < 1 - a_ij; ++t) e = braided_adjoint(d, i, e);
  return e;
}

rule<scalar> orient_rule(const element<scalar>& e) {
  if (e.is_zero()) throw std::invalid_argument("orient_rule: zero element");
  const word* lead = nullptr;
  scalar lead_c;
  for (const auto& [k, c] : e.terms()) {
    if (!grp_is_zero(k.second))
      throw std::invalid_argument("orient_rule: term carries a group part");
    if (lead == nullptr || word_less(*lead, k.first)) {
      lead = &k.first;
      lead_c = c;
    }
  }
  rule<scalar> r;
  r.lhs = *lead;
  scalar inv = lead_c.inverse();
  for (const auto& [k, c] : e.terms()) {
    if (k.first == r.lhs) continue;
    if (!word_less(k.first, r.lhs))
      throw std::invalid_argument("orient_rule: largest word is not unique");
    r.rhs.add(-(c * inv), k.first, k.second);
  }
  return r;
}

std::vector<rule<scalar>> serre_block_rules(const datum& d, size_t block, bool* completed) {
  std::vector<size_t> letters = d.block_letters(block);
  std::vector<rule<scalar>> rules;
  if (letters.size() >= 2) {
    auto cartan = d.block_cartan(block);
    for (size_t p = 0; p < letters.size(); ++p)
      for (size_t r = 0; r < letters.size(); ++r) {
        if (p == r) continue;
        rule<scalar> nr = orient_rule(serre_element(d, letters[p], letters[r], cartan[p][r]));
        if (std::find(rules.begin(), rules.end(), nr) == rules.end())
          rules.push_back(std::move(nr));
      }
  }
  bool done = true;
  if (letters.size() >= 2) {
    // Critical-pair completion: blocks may need derived rules for composite
    // root vectors beyond the two-letter relations.
    done = false;
    for (int round = 0; round < 40 && !done; ++round) {
      presentation<scalar> probe(d, flavor::free_skew, {}, bilinear_cocycle(d.group_rank()),
                                 {}, rules);
      auto rep = probe.check_overlaps(16);
      if (rep.failures.empty()) {
        done = true;
        break;
      }
      rules.push_back(orient_rule(rep.failures.front().difference));
    }
  }
  if (completed != nullptr)
    *completed = done;
  else if (!done)
    throw std::runtime_error("serre_block_rules: completion did not stabilize");
  return rules;
}

placed_element straighten_keep_groups(const datum& d, const pair_map& lambda,
                                      const placed_word& start, long forced_pos) {
  placed_element out;
  std::vector<std::tuple<scalar, placed_word, long>> work;
  work.emplace_back(scalar(1L), start, forced_pos);
  auto adjacent_letters = [&](const placed_word& w, size_t p, size_t& a, size_t& b) {
    if (p + 1 >= w.size()) return false;
    if (!std::holds_alternative<size_t>(w[p]) || !std::holds_alternative<size_t>(w[p + 1]))
      return false;
    a = std::get<size_t>(w[p]);
    b = std::get<size_t>(w[p + 1]);
    return d.block(a) > d.block(b);
  };
  while (!work.empty()) {
    auto [c, w, force] = std::move(work.back());
    work.pop_back();
    size_t pos = w.size(), a = 0, b = 0;
    if (force >= 0) {
      if (!adjacent_letters(w, static_cast<size_t>(force), a, b))
        throw std::invalid_argument("straighten_keep_groups: forced position does not match");
      pos = static_cast<size_t>(force);
    } else {
      for (size_t p = 0; p + 1 < w.size(); ++p)
        if (adjacent_letters(w, p, a, b)) {
          pos = p;
          break;
        }
    }
    if (pos >= w.size()) {
      auto it = out.find(w);
      if (it == out.end())
        out.emplace(std::move(w), c);
      else
        it->second += c;
      continue;
    }
    placed_word swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    work.emplace_back(c * d.braiding(a, b), std::move(swapped), -1L);
    scalar lam = pair_get(lambda, a, b);
    if (!lam.is_zero()) {
      placed_word collapsed;
      collapsed.reserve(w.size() - 1);
      collapsed.insert(collapsed.end(), w.begin(), w.begin() + pos);
      collapsed.push_back(grp_add(d.g(a), d.g(b)));
      collapsed.insert(collapsed.end(), w.begin() + pos + 2, w.end());
      work.emplace_back(c * lam, std::move(collapsed), -1L);
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

triple_overlap triple_overlap_raw(const datum& d, const pair_map& lambda, size_t i,
                                  size_t j, size_t k) {
  if (!(d.block(i) > d.block(j) && d.block(j) > d.block(k)))
    throw std::invalid_argument("triple_overlap_raw: blocks must strictly descend");
  placed_word w{i, j, k};
  triple_overlap t;
  t.left = straighten_keep_groups(d, lambda, w, 0);
  t.right = straighten_keep_groups(d, lambda, w, 1);
  return t;
}

size_t homogeneous_quotient_dim(const std::vector<element<scalar>>& relations,
                                size_t nletters, size_t deg) {
  if (nletters == 0) throw std::invalid_argument("homogeneous_quotient_dim: no letters");
  for (const auto& r : relations) {
    if (r.is_zero()) continue;
    size_t e = r.terms().begin()->first.first.size();
    for (const auto& [k, c] : r.terms()) {
      if (!grp_is_zero(k.second))
        throw std::invalid_argument("homogeneous_quotient_dim: group part in relation");
      if (k.first.size() != e)
        throw std::invalid_argument("homogeneous_quotient_dim: inhomogeneous relation");
    }
  }

  // index of a degree-d word in the lex enumeration
  auto index_of = [&](const word& w) {
    size_t idx = 0;
    for (size_t l : w) idx = idx * nletters + l;
    return idx;
  };
  size_t total = 1;
  for (size_t t = 0; t < deg; ++t) total *= nletters;

  using sparse_row = std::map<size_t, scalar>;
  std::map<size_t, sparse_row> basis;  // pivot column -> normalized row
  size_t rank = 0;
  auto insert_row = [&](sparse_row row) {
    while (!row.empty()) {
      auto lead = row.begin();
      auto hit = basis.find(lead->first);
      if (hit == basis.end()) {
        scalar inv = lead->second.inverse();
        for (auto& [c, v] : row) v = v * inv;
        basis.emplace(row.begin()->first, std::move(row));
        ++rank;
        return;
      }
      scalar f = lead->second;
      for (const auto& [c, v] : hit->second) {
        auto it = row.find(c);
        scalar nv = (it == row.end() ? scalar(0L) : it->second) - f * v;
        if (nv.is_zero()) {
          if (it != row.end()) row.erase(it);
        } else if (it == row.end()) {
          row.emplace(c, std::move(nv));
        } else {
          it->second = std::move(nv);
        }
      }
    }
  };

  // spanning set u * r * v over all padding words u, v
  for (size_t ri = 0; ri < relations.size(); ++ri) {
    const auto& r = relations[ri];
    if (r.is_zero()) continue;
    size_t e = r.terms().begin()->first.first.size();
    if (e > deg) continue;
    size_t pad = deg - e;
    for (size_t lu = 0; lu <= pad; ++lu) {
      // enumerate words u of length lu and v of length pad - lu by odometer
      std::vector<size_t> u(lu, 0), v(pad - lu, 0);
      bool more_u = true;
      while (more_u) {
        std::fill(v.begin(), v.end(), 0);
        bool more_v = true;
        while (more_v) {
          sparse_row row;
          for (const auto& [k, c] : r.terms()) {
            word w(u.begin(), u.end());
            w.insert(w.end(), k.first.begin(), k.first.end());
            w.insert(w.end(), v.begin(), v.end());
            size_t col = index_of(w);
            auto it = row.find(col);
            if (it == row.end())
              row.emplace(col, c);
            else {
              it->second += c;
              if (it->second.is_zero()) row.erase(it);
            }
          }
          insert_row(std::move(row));
          more_v = false;
          for (size_t t = v.size(); t-- > 0;) {
            if (++v[t] < nletters) {
              more_v = true;
              break;
            }
            v[t] = 0;
          }
        }
        more_u = false;
        for (size_t t = u.size(); t-- > 0;) {
          if (++u[t] < nletters) {
            more_u = true;
            break;
          }
          u[t] = 0;
        }
      }
    }
  }
  return total - rank;
}

}  // namespace qdeform
