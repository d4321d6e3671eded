#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qdeform/abgroup.hpp"
#include "qdeform/km.hpp"

using namespace qdeform;

namespace {

std::vector<grp> sample_grps3() {
  return {{0, 0, 0}, {1, 0, 0}, {0, 1, 0},  {0, 0, 1},
          {1, 1, 0}, {2, -1, 3}, {-1, 2, -2}, {1, 1, 1}};
}

bigint det(const imat& a) {
  size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  bigint acc = 0;
  int sign = 1;
  for (size_t j = 0; j < n; ++j) {
    imat minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<bigint> row;
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(row);
    }
    acc += sign * a[0][j] * det(minor);
    sign = -sign;
  }
  return acc;
}

}  // namespace

TEST_CASE("group element arithmetic") {
  grp a = {1, -2, 3}, b = {0, 4, -1};
  CHECK(grp_add(a, b) == grp{1, 2, 2});
  CHECK(grp_sub(a, a) == grp_zero(3));
  CHECK(grp_is_zero(grp_zero(4)));
  CHECK(!grp_is_zero(a));
  CHECK(grp_unit(3, 1) == grp{0, 1, 0});
  CHECK(grp_str(a) == "(1,-2,3)");
  CHECK(grp_hash(a) != grp_hash(b));
}

TEST_CASE("characters are multiplicative with unit values") {
  scalar q = scalar::q();
  character chi({q, q.pow(-2), scalar(3L)});
  CHECK(chi.eval(grp_unit(3, 0)) == q);
  CHECK(chi.eval({2, 1, 0}) == scalar(1L));
  for (const auto& a : sample_grps3())
    for (const auto& b : sample_grps3())
      CHECK(chi.eval(grp_add(a, b)) == chi.eval(a) * chi.eval(b));
  CHECK((chi * chi.inverse()).is_trivial());
  CHECK_THROWS_AS(character({scalar(0L)}), std::domain_error);
}

TEST_CASE("bilinear forms satisfy the 2-cocycle identity") {
  scalar q = scalar::q();
  std::vector<std::vector<scalar>> entries = {
      {q, q + scalar(1L), scalar(2L)},
      {q.inverse(), scalar(1L), q.pow(3)},
      {scalar(rat(1, 2)), q - scalar(2L), q}};
  bilinear_cocycle sigma(entries);
  auto samples = sample_grps3();
  for (const auto& a : samples)
    for (const auto& b : samples)
      for (const auto& c : samples)
        CHECK(sigma.eval(a, grp_add(b, c)) * sigma.eval(b, c) ==
              sigma.eval(a, b) * sigma.eval(grp_add(a, b), c));
  for (const auto& a : samples) {
    CHECK(sigma.eval(grp_zero(3), a).is_one());
    CHECK(sigma.eval(a, grp_zero(3)).is_one());
  }
  CHECK(sigma.eval(grp_unit(3, 0), grp_unit(3, 1)) == q + scalar(1L));
  CHECK((sigma * sigma.inverse()) == bilinear_cocycle(3));
}

TEST_CASE("from_skew produces a cocycle with the prescribed skew invariant") {
  scalar q = scalar::q();
  std::vector<std::vector<scalar>> u(3, std::vector<scalar>(3, scalar(1L)));
  u[0][1] = q;
  u[0][2] = -scalar(1L);
  u[1][2] = q.pow(-2);
  auto sigma = bilinear_cocycle::from_skew(u);
  CHECK(sigma.skew(0, 1) == q);
  CHECK(sigma.skew(0, 2) == -scalar(1L));
  CHECK(sigma.skew(1, 2) == q.pow(-2));
  CHECK(sigma.entry(0, 1).is_one());
  CHECK(sigma.eval(grp_unit(3, 1), grp_unit(3, 0)) == q);
}

TEST_CASE("quadratic cochain coboundary computed two ways") {
  scalar q = scalar::q();
  std::vector<scalar> w = {q, scalar(2L), q.inverse()};
  std::vector<std::vector<scalar>> s = {
      {q, q + scalar(1L), scalar(3L)},
      {q + scalar(1L), q.pow(2), scalar(1L)},
      {scalar(3L), scalar(1L), q.pow(-1)}};
  one_cochain eta(w, s);
  auto b = eta.coboundary();
  for (const auto& a : sample_grps3())
    for (const auto& c : sample_grps3())
      CHECK(b.eval(a, c) == eta.eval(a) * eta.eval(c) / eta.eval(grp_add(a, c)));
  CHECK(eta.eval(grp_zero(3)).is_one());
  CHECK(b.is_symmetric());
}

TEST_CASE("equivalence of cocycles is detected with an explicit witness") {
  scalar q = scalar::q();
  std::vector<std::vector<scalar>> u(2, std::vector<scalar>(2, scalar(1L)));
  u[0][1] = q.pow(2);
  auto sigma = bilinear_cocycle::from_skew(u);

  std::vector<std::vector<scalar>> s = {{q, q - scalar(1L)}, {q - scalar(1L), scalar(5L)}};
  one_cochain eta({scalar(1L), scalar(1L)}, s);
  auto sigma2 = sigma * eta.coboundary();

  auto wit = cohomologous(sigma, sigma2);
  REQUIRE(wit.has_value());
  for (const auto& a : std::vector<grp>{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, -1}, {-3, 2}})
    for (const auto& b : std::vector<grp>{{1, 0}, {0, 1}, {1, 2}, {-1, -1}})
      CHECK(sigma2.eval(a, b) ==
            sigma.eval(a, b) * wit->eval(a) * wit->eval(b) / wit->eval(grp_add(a, b)));

  std::vector<std::vector<scalar>> u2(2, std::vector<scalar>(2, scalar(1L)));
  u2[0][1] = q.pow(3);
  CHECK(!cohomologous(sigma, bilinear_cocycle::from_skew(u2)).has_value());
}

TEST_CASE("smith normal form is exact with unimodular transforms") {
  std::vector<imat> cases = {
      {{bigint(2), bigint(4)}, {bigint(6), bigint(8)}},
      {{bigint(1), bigint(2), bigint(3)}, {bigint(4), bigint(5), bigint(6)}},
      {{bigint(0), bigint(0)}, {bigint(0), bigint(0)}},
      {{bigint(6)}, {bigint(10)}, {bigint(15)}},
      {{bigint(2), bigint(0), bigint(0)},
       {bigint(0), bigint(3), bigint(0)},
       {bigint(0), bigint(0), bigint(5)}},
      {{bigint(-4), bigint(7), bigint(1)}, {bigint(9), bigint(-2), bigint(0)}}};
  for (const auto& a : cases) {
    imat u, v, d;
    smith_normal_form(a, u, v, d);
    CHECK(imat_mul(imat_mul(u, a), v) == d);
    bigint du = det(u), dv = det(v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    size_t n = d.size(), m = n ? d[0].size() : 0;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < m; ++j)
        if (i != j) CHECK(d[i][j] == 0);
    for (size_t t = 0; t + 1 < std::min(n, m); ++t) {
      CHECK(d[t][t] >= 0);
      if (d[t][t] != 0) CHECK(d[t + 1][t + 1] % d[t][t] == 0);
      if (d[t][t] == 0) CHECK(d[t + 1][t + 1] == 0);
    }
  }
}

TEST_CASE("multiplicative power systems solve exactly or report failure") {
  scalar q = scalar::q();
  // w0^2 w1 = q^4, w1 = q^2  ->  solvable (w0 = +-q, w1 = q^2)
  imat a = {{bigint(2), bigint(1)}, {bigint(0), bigint(1)}};
  auto sol = solve_power_system(a, {q.pow(4), q.pow(2)});
  REQUIRE(sol.has_value());
  CHECK((*sol)[0].pow(2) * (*sol)[1] == q.pow(4));
  CHECK((*sol)[1] == q.pow(2));

  // w0^2 = q has no solution
  CHECK(!solve_power_system({{bigint(2)}}, {q}).has_value());
  // w0^2 = 4 q^2 (q+1)^2 does
  auto sol2 = solve_power_system({{bigint(2)}}, {scalar(4L) * (q * q + q).pow(2)});
  REQUIRE(sol2.has_value());
  CHECK((*sol2)[0].pow(2) == scalar(4L) * (q * q + q).pow(2));

  // inconsistent zero-row: w0 - w0 = ... forces rhs 1
  imat b = {{bigint(1)}, {bigint(1)}};
  CHECK(!solve_power_system(b, {q, q.pow(2)}).has_value());
  auto sol3 = solve_power_system(b, {q, q});
  REQUIRE(sol3.has_value());
  CHECK((*sol3)[0] == q);

  CHECK_THROWS_AS(solve_power_system({{bigint(1)}}, {scalar(0L)}), std::domain_error);
}

TEST_CASE("square-zero extension ring laws") {
  scalar q = scalar::q();
  km x(q, mvec({scalar(1L), q})), y(q + scalar(1L), mvec({scalar(0L), scalar(2L)}));
  km z(scalar(rat(1, 2)), mvec({-q}));
  std::vector<km> vals = {km(), km(1L), x, y, z, km::eps(0), km::eps(1)};
  for (const auto& a : vals)
    for (const auto& b : vals) {
      CHECK(a * b == b * a);
      CHECK(a + b == b + a);
      for (const auto& c : vals) {
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
      }
    }
  // nilpotency of the soul part
  CHECK((km::eps(0) * km::eps(1)).is_zero());
  CHECK(km::eps(0).pow(2).is_zero());
  // units and inverses
  CHECK(x * x.inverse() == km(1L));
  CHECK(x.pow(3) * x.pow(-3) == km(1L));
  CHECK_THROWS_AS(km::eps(0).inverse(), std::domain_error);
  CHECK(!km::eps(0).is_unit());
  CHECK(x.is_unit());
  // (1 + e)^n = 1 + n e
  km one_plus_e = km(1L) + km::eps(0);
  CHECK(one_plus_e.pow(5) == km(1L) + km(scalar(5L), mvec()) * km::eps(0));
  CHECK(one_plus_e.pow(-1) == km(1L) - km::eps(0));
}

TEST_CASE("coefficient vectors compare modulo trailing zeros") {
  mvec a({scalar(1L), scalar(0L), scalar(0L)});
  mvec b({scalar(1L)});
  CHECK(a == b);
  CHECK(a.dim() == 1);
  CHECK((a - b).is_zero());
  CHECK(mvec::unit(2).coord(2) == scalar(1L));
  CHECK(mvec::unit(2).coord(0) == scalar(0L));
  CHECK((mvec::unit(0) * scalar(0L)).is_zero());
}

TEST_CASE("additive cochain calculus mirrors the multiplicative one") {
  scalar q = scalar::q();
  std::vector<std::vector<mvec>> smat = {
      {mvec({q}), mvec({scalar(1L), q})},
      {mvec({scalar(1L), q}), mvec({scalar(0L), scalar(3L)})}};
  add_bilinear s(smat);
  std::vector<grp> samples = {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, -1}, {-1, 3}};
  // additive cocycle identity is automatic for bilinear maps
  for (const auto& a : samples)
    for (const auto& b : samples)
      for (const auto& c : samples)
        CHECK(s.eval(a, grp_add(b, c)) + s.eval(b, c) == s.eval(a, b) + s.eval(grp_add(a, b), c));

  std::vector<mvec> w = {mvec({q}), mvec({scalar(2L), scalar(1L)})};
  add_cochain t(w, smat);
  auto dt = t.coboundary();
  for (const auto& a : samples)
    for (const auto& b : samples)
      CHECK(dt.eval(a, b) == t.eval(a) + t.eval(b) - t.eval(grp_add(a, b)));

  // 1 + s is a multiplicative cocycle over the square-zero extension
  auto c = s.one_plus();
  for (const auto& a : samples)
    for (const auto& b : samples) {
      CHECK(c.eval(a, b) == km(scalar(1L), s.eval(a, b)));
      for (const auto& g : samples)
        CHECK(c.eval(a, grp_add(b, g)) * c.eval(b, g) ==
              c.eval(a, b) * c.eval(grp_add(a, b), g));
    }

  // equivalence with witness
  add_bilinear s2 = s + dt;
  auto wit = add_cohomologous(s, s2);
  REQUIRE(wit.has_value());
  for (const auto& a : samples)
    for (const auto& b : samples)
      CHECK(s2.eval(a, b) ==
            s.eval(a, b) + wit->eval(a) + wit->eval(b) - wit->eval(grp_add(a, b)));
  // a non-symmetric difference is not a coboundary
  add_bilinear bad(2);
  bad.entry(0, 1) = mvec({q});
  CHECK(!add_cohomologous(s, s + bad).has_value());
}
