#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qdeform/datum.hpp"

using namespace qdeform;

namespace {

scalar q() { return scalar::q(); }

// Two letters of opposite chirality over Z, as in the rank-one quantum group.
datum make_a1() {
  character neg({q().pow(-2)}), pos({q().pow(2)});
  return datum(1, {{1}, {1}}, {neg, pos}, {0, 1});
}

// Four letters over Z^2: a negative pair then a positive pair, both carrying
// the rank-two symmetric Cartan braiding.
datum make_a2() {
  character n1({q().pow(-2), q().pow(1)}), n2({q().pow(1), q().pow(-2)});
  character p1({q().pow(2), q().pow(-1)}), p2({q().pow(-1), q().pow(2)});
  return datum(2, {{1, 0}, {0, 1}, {1, 0}, {0, 1}}, {n1, n2, p1, p2}, {0, 0, 1, 1});
}

}  // namespace

TEST_CASE("braiding matrix and validation on the rank-one datum") {
  datum d = make_a1();
  CHECK_NOTHROW(d.validate());
  CHECK(d.size() == 2);
  CHECK(d.num_blocks() == 2);
  CHECK(d.braiding(0, 0) == q().pow(-2));
  CHECK(d.braiding(1, 1) == q().pow(2));
  CHECK(d.braiding(0, 1) == q().pow(2));
  CHECK(d.braiding(1, 0) == q().pow(-2));
  CHECK(d.theta() == std::vector<pair_key>{{1, 0}});
  CHECK(d.xi() == std::vector<pair_key>{{1, 0}});
  CHECK(d.block_cartan(0) == std::vector<std::vector<long>>{{2}});
}

TEST_CASE("rank-two datum: pair sets and recovered Cartan matrices") {
  datum d = make_a2();
  CHECK_NOTHROW(d.validate());
  CHECK(d.theta() == std::vector<pair_key>{{2, 0}, {2, 1}, {3, 0}, {3, 1}});
  CHECK(d.xi() == std::vector<pair_key>{{2, 0}, {3, 1}});
  std::vector<std::vector<long>> a2 = {{2, -1}, {-1, 2}};
  CHECK(d.block_cartan(0) == a2);
  CHECK(d.block_cartan(1) == a2);
  CHECK(d.block_letters(1) == std::vector<size_t>{2, 3});
}

TEST_CASE("validation rejects bad cross-block braiding and q_ii = 1") {
  // cross-block pair with q01 * q10 = q^2 != 1
  character c0({q()}), c1({q()});
  datum bad(1, {{1}, {1}}, {c0, c1}, {0, 1});
  CHECK_THROWS_AS(bad.validate(), std::domain_error);

  character triv({scalar(1L)});
  datum bad2(1, {{1}}, {triv}, {0});
  CHECK_THROWS_AS(bad2.validate(), std::domain_error);

  // in-block pair whose symmetrized braiding is not a power of q_ii
  character e0({q().pow(2), scalar(3L)}), e1({scalar(3L), q().pow(2)});
  datum bad3(2, {{1, 0}, {0, 1}}, {e0, e1}, {0, 0});
  CHECK_THROWS_AS(bad3.block_cartan(0), std::domain_error);
}

TEST_CASE("blocks must be consecutive") {
  character c({q().pow(2)});
  CHECK_THROWS_AS(datum(1, {{1}, {1}}, {c, c}, {0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(datum(1, {{1}, {1}}, {c, c}, {1, 1}), std::invalid_argument);
}

TEST_CASE("cocycle deformation preserves the symmetrized braiding") {
  datum d = make_a2();
  std::vector<std::vector<scalar>> u(2, std::vector<scalar>(2, scalar(1L)));
  u[0][1] = q().pow(3) - scalar(2L);
  auto sigma = bilinear_cocycle::from_skew(u);
  datum ds = d.deform(sigma);
  CHECK_NOTHROW(ds.validate());
  for (size_t i = 0; i < d.size(); ++i) {
    CHECK(ds.braiding(i, i) == d.braiding(i, i));
    for (size_t j = 0; j < d.size(); ++j) {
      CHECK(ds.braiding(i, j) * ds.braiding(j, i) == d.braiding(i, j) * d.braiding(j, i));
      CHECK(ds.braiding(i, j) ==
            d.braiding(i, j) * sigma.eval(d.g(i), d.g(j)) / sigma.eval(d.g(j), d.g(i)));
    }
  }
  // deforming by a symmetric cocycle changes nothing
  bilinear_cocycle sym(2);
  sym.entry(0, 1) = q();
  sym.entry(1, 0) = q();
  sym.entry(0, 0) = scalar(5L);
  CHECK(d.deform(sym) == d);
}

TEST_CASE("deformation moves the linkable pair set") {
  datum d = make_a2();
  // sign cocycle: squares to nothing, so the mutually-inverse pairs survive
  std::vector<std::vector<scalar>> u(2, std::vector<scalar>(2, scalar(1L)));
  u[0][1] = scalar(-1L);
  CHECK(d.xi_sigma(bilinear_cocycle::from_skew(u)) == d.xi());

  // generic skew: the deformed characters are no longer mutually inverse
  u[0][1] = q();
  CHECK(d.xi_sigma(bilinear_cocycle::from_skew(u)).empty());

  // trivial cocycle: nothing moves
  CHECK(d.xi_sigma(bilinear_cocycle(2)) == d.xi());
}

TEST_CASE("deformed support condition is oriented by the cocycle characters") {
  // Cross-block pair with chi_0 chi_1 = (q^-1, q) != 1 but trivial symmetrized
  // braiding, so the pair is in theta, not in xi.
  character c0({q().pow(-2), q().pow(-1)}), c1({q(), q().pow(2)});
  datum d(2, {{1, 0}, {0, 1}}, {c0, c1}, {0, 1});
  CHECK_NOTHROW(d.validate());
  CHECK(d.theta() == std::vector<pair_key>{{1, 0}});
  CHECK(d.xi().empty());

  // With skew q the cocycle characters multiply to exactly chi_0 chi_1, so the
  // pair becomes linkable; with skew q^-1 they multiply to its inverse and the
  // pair must stay excluded.
  std::vector<std::vector<scalar>> u(2, std::vector<scalar>(2, scalar(1L)));
  u[0][1] = q();
  CHECK(d.xi_sigma(bilinear_cocycle::from_skew(u)) == std::vector<pair_key>{{1, 0}});
  u[0][1] = q().inverse();
  CHECK(d.xi_sigma(bilinear_cocycle::from_skew(u)).empty());
}

TEST_CASE("letter labels") {
  datum d = make_a1();
  CHECK(d.label(0) == "0");
  CHECK(d.label(1) == "1");
  d.set_labels({"-1", "1"});
  CHECK(d.label(0) == "-1");
  CHECK_THROWS_AS(d.set_labels({"x"}), std::invalid_argument);
}

TEST_CASE("cartan condition report") {
  datum d = make_a2();
  std::vector<std::vector<long>> gcm = {
      {2, -1, 0, 0}, {-1, 2, 0, 0}, {0, 0, 2, -1}, {0, 0, -1, 2}};
  std::vector<long> sym = {1, 1, 1, 1};

  auto rep = cartan_checks(d, gcm, &sym);
  CHECK(rep.all_pass());
  CHECK(rep.find("cartan-type").pass);
  CHECK(rep.find("determinant-exponent").pass);

  rat one(1);
  auto at_one = cartan_checks(d, gcm, &sym, &one);
  CHECK(!at_one.all_pass());
  CHECK(!at_one.find("diagonal-not-one").pass);

  rat minus_one(-1);
  auto at_sign = cartan_checks(d, gcm, &sym, &minus_one);
  CHECK(!at_sign.find("diagonal-not-one").pass);
  CHECK(!at_sign.find("power-order").pass);

  // wrong Cartan matrix is detected
  std::vector<std::vector<long>> wrong = gcm;
  wrong[0][1] = -2;
  wrong[1][0] = -2;
  CHECK(!cartan_checks(d, wrong).find("cartan-type").pass);

  // symmetrizer inconsistency throws
  std::vector<long> badsym = {1, 2, 1, 1};
  CHECK_THROWS_AS(cartan_checks(d, gcm, &badsym), std::invalid_argument);
}

TEST_CASE("pair maps: defaulted lookup and support checks") {
  pair_map lam;
  lam[{1, 0}] = scalar(1L);
  lam[{2, 0}] = scalar(0L);
  CHECK(pair_get(lam, 1, 0) == scalar(1L));
  CHECK(pair_get(lam, 0, 1).is_zero());
  CHECK(pair_get(lam, 5, 5).is_zero());
  CHECK(supported_on(lam, {{1, 0}}));
  lam[{3, 1}] = q();
  CHECK(!supported_on(lam, {{1, 0}}));
  CHECK(supported_on(lam, {{1, 0}, {3, 1}}));
}
