#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cogalois/catalog.hpp"
#include "cogalois/rings.hpp"

using namespace cogalois;

TEST_CASE("modular rings and the locality test") {
  CHECK_THROWS_WITH_AS(maximal_ideal(ring_z_mod(6)),
                       doctest::Contains("NotLocal"), Error);

  auto z4 = ring_z_mod(4);
  auto chain4 = ring_from_eisenstein(2, 2, 1, 1, {1});
  REQUIRE(z4.size() == chain4.size());
  CHECK(z4.one == chain4.one);
  for (elt a = 0; a < 4; ++a)
    for (elt b = 0; b < 4; ++b) {
      CHECK(z4.plus(a, b) == chain4.plus(a, b));
      CHECK(z4.times(a, b) == chain4.times(a, b));
    }

  auto z5 = ring_z_mod(5);
  CHECK(maximal_ideal(z5) == std::vector<elt>{0});
  CHECK(nilpotency_index(z5, {0}) == 1);

  auto z9 = ring_z_mod(9);
  CHECK(maximal_ideal(z9) == std::vector<elt>{0, 3, 6});
  CHECK(nilpotency_index(z9, {0, 3, 6}) == 2);
  CHECK(z9.is_unit(2));
  CHECK_FALSE(z9.is_unit(3));
}

TEST_CASE("ring table validation rejects broken structures") {
  // Upper triangular 2x2 matrices over the field of two elements, encoded as
  // (a, b, d) -> 4a + 2b + d for [[a, b], [0, d]]: associative and unital
  // but not commutative.
  std::vector<std::vector<elt>> tri(8, std::vector<elt>(8));
  for (elt i = 0; i < 8; ++i)
    for (elt j = 0; j < 8; ++j) {
      int a = i >> 2, b = (i >> 1) & 1, d = i & 1;
      int a2 = j >> 2, b2 = (j >> 1) & 1, d2 = j & 1;
      tri[i][j] = static_cast<elt>(4 * (a * a2) + 2 * ((a * b2 + b * d2) % 2) +
                                   d * d2);
    }
  CHECK_THROWS_WITH_AS(make_ring(abelian_group({2, 2, 2}), tri),
                       doctest::Contains("NotAbelian"), Error);

  // All products zero: commutative, associative, distributive, no unity.
  std::vector<std::vector<elt>> zero(2, std::vector<elt>(2, 0));
  CHECK_THROWS_WITH_AS(make_ring(cyclic_group(2), zero),
                       doctest::Contains("NoIdentity"), Error);

  // |a - b| is commutative but not associative.
  std::vector<std::vector<elt>> gap(3, std::vector<elt>(3));
  for (elt a = 0; a < 3; ++a)
    for (elt b = 0; b < 3; ++b) gap[a][b] = a > b ? a - b : b - a;
  CHECK_THROWS_WITH_AS(make_ring(cyclic_group(3), gap),
                       doctest::Contains("NotAssociative"), Error);

  // min(a, b) is commutative and associative but fails distributivity.
  std::vector<std::vector<elt>> low(3, std::vector<elt>(3));
  for (elt a = 0; a < 3; ++a)
    for (elt b = 0; b < 3; ++b) low[a][b] = std::min(a, b);
  CHECK_THROWS_WITH_AS(make_ring(cyclic_group(3), low),
                       doctest::Contains("distribute"), Error);
}

TEST_CASE("chain ring constructor produces the advertised local structure") {
  auto f3x2 = ring_from_eisenstein(3, 1, 2, 2, {1, 0});
  CHECK(f3x2.size() == 9);
  CHECK(f3x2.one == 1);
  CHECK(maximal_ideal(f3x2) == std::vector<elt>{0, 3, 6});
  CHECK(nilpotency_index(f3x2, maximal_ideal(f3x2)) == 2);
  CHECK(annihilator(f3x2, maximal_ideal(f3x2)) == std::vector<elt>{0, 3, 6});

  // p = n = 2, degree 2, truncation 1: order 8, T^2 = 2 and 2T = 0, maximal
  // ideal of nilpotency index 3, socle of order 2.
  auto odd8 = ring_from_eisenstein(2, 2, 2, 1, {1, 0});
  CHECK(odd8.size() == 8);
  CHECK(maximal_ideal(odd8) == std::vector<elt>{0, 2, 4, 6});
  CHECK(odd8.times(4, 4) == 2);
  CHECK(odd8.plus(4, 4) == 0);
  CHECK(nilpotency_index(odd8, maximal_ideal(odd8)) == 3);
  CHECK(annihilator(odd8, maximal_ideal(odd8)) == std::vector<elt>{0, 2});

  auto z8 = ring_z_mod(8);
  auto chain8 = ring_from_eisenstein(2, 3, 1, 1, {1});
  REQUIRE(z8.size() == chain8.size());
  for (elt a = 0; a < 8; ++a)
    for (elt b = 0; b < 8; ++b) CHECK(z8.times(a, b) == chain8.times(a, b));

  CHECK_THROWS_WITH_AS(ring_from_eisenstein(4, 1, 2, 2, {1, 0}),
                       doctest::Contains("BadParameters"), Error);
  CHECK_THROWS_WITH_AS(ring_from_eisenstein(3, 1, 3, 2, {1, 0, 0}),
                       doctest::Contains("BadParameters"), Error);
  CHECK_THROWS_WITH_AS(ring_from_eisenstein(3, 1, 2, 2, {0, 1}),
                       doctest::Contains("BadParameters"), Error);
  CHECK_THROWS_WITH_AS(ring_from_eisenstein(2, 2, 3, 4, {1, 0, 0}),
                       doctest::Contains("BadParameters"), Error);
  CHECK_THROWS_WITH_AS(ring_from_eisenstein(2, 13, 1, 1, {1}),
                       doctest::Contains("OrderBoundExceeded"), Error);
}

TEST_CASE("unit action census finds the minimal cocycles the theory allows") {
  // F3[x]/(x^2): nine cocycles, of which the six with unit values are
  // minimal non-Kneser, all related by unit scaling.
  auto rc = ring_context(ring_from_eisenstein(3, 1, 2, 2, {1, 0}));
  CHECK(rc.ctx->gamma.order() == 3);
  auto rep = ring_mnk_report(rc);
  CHECK(rep.cocycles == 9);
  CHECK(rep.injective == 8);  // only v = 0 repeats a value
  CHECK(rep.mnk == 6);
  CHECK(rep.orbits == 1);
  for (const auto& eta : rep.minimal)
    for (int s = 1; s < 3; ++s) CHECK(rc.ring.is_unit(eta[s]));

  // F5[x]/(x^2): same picture with twenty minimal cocycles.
  auto rep5 = ring_mnk_report(ring_from_eisenstein(5, 1, 2, 2, {1, 0}));
  CHECK(rep5.cocycles == 25);
  CHECK(rep5.injective == 24);
  CHECK(rep5.mnk == 20);
  CHECK(rep5.orbits == 1);

  // F3[x]/(x^3): the cube length collides with the characteristic and the
  // minimal census is empty.
  auto rep27 = ring_mnk_report(ring_from_eisenstein(3, 1, 3, 3, {1, 0, 0}));
  CHECK(rep27.cocycles == 27);
  CHECK(rep27.injective == 12);  // injective needs both generator values off the socle
  CHECK(rep27.mnk == 0);
  CHECK(rep27.orbits == 0);

  // Z/9: principal units exist but no cocycle is generating.
  auto rep9 = ring_mnk_report(ring_z_mod(9));
  CHECK(rep9.cocycles == 3);
  CHECK(rep9.injective == 2);
  CHECK(rep9.mnk == 0);

  // Z/4 recovers the order-2-on-Z/4 minimal pair: the nontrivial principal
  // unit acts by negation and the two minimal cocycles send it to 1 and 3.
  auto rc4 = ring_context(ring_z_mod(4));
  CHECK(rc4.gamma_elems == std::vector<elt>{1, 3});
  CHECK(rc4.ctx->act(1, 1) == 3);
  CHECK(rc4.ctx->act(1, 2) == 2);
  CHECK(rc4.ctx->act(1, 3) == 1);
  auto rep4 = ring_mnk_report(rc4);
  CHECK(rep4.cocycles == 4);
  CHECK(rep4.injective == 3);
  CHECK(rep4.mnk == 2);
  CHECK(rep4.orbits == 1);
  CHECK(rep4.minimal == std::vector<std::vector<elt>>{{0, 1}, {0, 3}});

  // The order-8 chain ring with T^2 = 2: cyclic operator group of order 4,
  // eight cocycles, the four unit-valued ones minimal in a single class.
  auto rc8 = ring_context(ring_from_eisenstein(2, 2, 2, 1, {1, 0}));
  CHECK(rc8.gamma_elems == std::vector<elt>{1, 3, 5, 7});
  CHECK(isomorphic(rc8.ctx->gamma, cyclic_group(4)));
  auto rep8 = ring_mnk_report(rc8);
  CHECK(rep8.cocycles == 8);
  CHECK(rep8.injective == 6);  // the socle {0,2} kills injectivity
  CHECK(rep8.mnk == 4);
  CHECK(rep8.orbits == 1);
}

TEST_CASE("socle homomorphism enumeration matches the structure") {
  auto rc = ring_context(ring_from_eisenstein(3, 1, 2, 2, {1, 0}));
  auto homs = socle_homs(rc);
  CHECK(homs.size() == 3);
  auto soc = annihilator(rc.ring, maximal_ideal(rc.ring));
  for (const auto& chi : homs) {
    CHECK(chi[0] == 0);
    for (elt v : chi)
      CHECK(std::find(soc.begin(), soc.end(), v) != soc.end());
  }

  auto rc8 = ring_context(ring_from_eisenstein(2, 2, 2, 1, {1, 0}));
  CHECK(socle_homs(rc8).size() == 2);

  auto rc27 = ring_context(ring_from_eisenstein(3, 1, 3, 3, {1, 0, 0}));
  CHECK(isomorphic(rc27.ctx->gamma, abelian_group({3, 3})));
  CHECK(socle_homs(rc27).size() == 9);
}

TEST_CASE("field constructor finds the right extension tables") {
  auto f3 = finite_field(3, 1);
  CHECK(f3.size() == 3);
  CHECK(f3.times(2, 2) == 1);

  // Degree two over F2: the first monic irreducible is x^2 + x + 1, so the
  // class of x (element 2) satisfies x^2 = x + 1.
  auto f4 = finite_field(2, 2);
  CHECK(f4.size() == 4);
  CHECK(f4.times(2, 2) == 3);
  CHECK(f4.times(2, 3) == 1);
  CHECK(f4.times(3, 3) == 2);
  for (elt v = 1; v < 4; ++v) CHECK(f4.is_unit(v));

  // Degree two over F3: x^2 + 1 is irreducible, so x^2 = 2.
  auto f9 = finite_field(3, 2);
  CHECK(f9.size() == 9);
  CHECK(f9.times(3, 3) == 2);
  CHECK(maximal_ideal(f9) == std::vector<elt>{0});

  CHECK_THROWS_WITH_AS(finite_field(6, 1), doctest::Contains("BadParameters"),
                       Error);
  CHECK_THROWS_WITH_AS(finite_field(2, 11),
                       doctest::Contains("OrderBoundExceeded"), Error);
}

TEST_CASE("additive characters and the multiplication pairing") {
  // A finite abelian group carries exactly as many characters as elements.
  auto chars = additive_characters(abelian_group({2, 4}));
  CHECK(chars.size() == 8);
  std::set<std::vector<elt>> distinct(chars.begin(), chars.end());
  CHECK(distinct.size() == 8);
  for (const auto& chi : chars) CHECK(chi[0] == 0);

  // Chain rings pair perfectly with themselves through multiplication.
  auto R = ring_from_eisenstein(3, 1, 2, 2, {1, 0});
  auto chi = dual_pairing_character(R);
  REQUIRE_FALSE(chi.empty());
  for (elt x = 1; x < R.size(); ++x) {
    bool hit = false;
    for (elt y = 0; y < R.size() && !hit; ++y) hit = chi[R.times(x, y)] != 0;
    CHECK(hit);
  }

  // F2[x, y] / (x^2, xy, y^2) has a two-dimensional annihilator of the
  // maximal ideal, and no single character can separate it: the pairing
  // vanishes on x + y against everything.
  std::vector<std::vector<elt>> rows(8, std::vector<elt>(8));
  for (elt a = 0; a < 8; ++a)
    for (elt b = 0; b < 8; ++b) {
      int a0 = a & 1, a1 = (a >> 1) & 1, a2 = (a >> 2) & 1;
      int b0 = b & 1, b1 = (b >> 1) & 1, b2 = (b >> 2) & 1;
      rows[a][b] = static_cast<elt>((a0 & b0) | (((a0 & b1) ^ (a1 & b0)) << 1) |
                                    (((a0 & b2) ^ (a2 & b0)) << 2));
    }
  auto fat = make_ring(abelian_group({2, 2, 2}), rows, "fat socle");
  CHECK(maximal_ideal(fat).size() == 4);
  CHECK(dual_pairing_character(fat).empty());
}

TEST_CASE("unit subgroups of finite fields give minimal triples") {
  // Order two inside F3: the sign action on Z/3 with eta(-1) = -2 = 1.
  auto t = field_triple(3, 2);
  CHECK(t.gamma().order() == 2);
  CHECK(t.g().order() == 3);
  CHECK(t.eta == std::vector<elt>{0, 1});
  CHECK(is_mnk(t));

  // Order three inside F7: mu = {1, 2, 4}, eta(u) = u - 1.
  auto t7 = field_triple(7, 3);
  CHECK(isomorphic(t7.gamma(), cyclic_group(3)));
  CHECK(t7.g().order() == 7);
  CHECK(t7.eta == std::vector<elt>{0, 1, 3});
  CHECK(is_mnk(t7));

  // Order three needs a degree-two extension of F2: the full unit group of
  // F4 acting on the Klein four-group.
  auto t4 = field_triple(2, 3);
  CHECK(isomorphic(t4.gamma(), cyclic_group(3)));
  CHECK(t4.g().order() == 4);
  CHECK(isomorphic(t4.g(), abelian_group({2, 2})));
  CHECK(t4.eta == std::vector<elt>{0, 3, 2});
  CHECK(is_mnk(t4));

  // Order five forces degree four over F2.
  auto t16 = field_triple(2, 5);
  CHECK(isomorphic(t16.gamma(), cyclic_group(5)));
  CHECK(t16.g().order() == 16);
  CHECK(is_mnk(t16));

  CHECK_THROWS_WITH_AS(field_triple(4, 3), doctest::Contains("BadParameters"),
                       Error);
  CHECK_THROWS_WITH_AS(field_triple(3, 1), doctest::Contains("BadParameters"),
                       Error);
  CHECK_THROWS_WITH_AS(field_triple(3, 6), doctest::Contains("BadParameters"),
                       Error);
  CHECK_THROWS_WITH_AS(field_triple(2, 13),
                       doctest::Contains("OrderBoundExceeded"), Error);
}

TEST_CASE("injective unit cocycles split into redundancy classes") {
  // F3[x]/(x^2): eight injective cocycles, six minimal in one class headed
  // by the canonical cocycle 1 + x -> 1, and the two with values in the
  // maximal ideal in another.
  auto c = principal_unit_triples(ring_from_eisenstein(3, 1, 2, 2, {1, 0}));
  CHECK(c.cocycles == 9);
  CHECK(c.injective == 8);
  CHECK(c.mnk == 6);
  REQUIRE(c.buckets.size() == 2);
  CHECK(c.buckets[0].representative == std::vector<elt>{0, 1, 5});
  CHECK(c.buckets[0].size == 6);
  CHECK(c.buckets[0].mnk == 6);
  CHECK(c.buckets[1].representative == std::vector<elt>{0, 3, 6});
  CHECK(c.buckets[1].size == 2);
  CHECK(c.buckets[1].mnk == 0);
  CHECK(c.triple(0).generating);
  CHECK_FALSE(c.triple(1).generating);

  // F5[x]/(x^2): same shape, twenty minimal and four ideal-valued.
  auto c5 = principal_unit_triples(ring_from_eisenstein(5, 1, 2, 2, {1, 0}));
  CHECK(c5.injective == 24);
  CHECK(c5.mnk == 20);
  REQUIRE(c5.buckets.size() == 2);
  CHECK(c5.buckets[0].size == 20);
  CHECK(c5.buckets[0].mnk == 20);
  CHECK(c5.buckets[1].size == 4);

  // F3[x]/(x^3): every injective cocycle is redundant with every other and
  // none is minimal.
  auto c27 = principal_unit_triples(ring_from_eisenstein(3, 1, 3, 3, {1, 0, 0}));
  CHECK(c27.injective == 12);
  CHECK(c27.mnk == 0);
  REQUIRE(c27.buckets.size() == 1);
  CHECK(c27.buckets[0].size == 12);
  CHECK(c27.buckets[0].mnk == 0);

  // Z/4: the minimal pair {1, 3} and the lone ideal-valued cocycle.
  auto c4 = principal_unit_triples(ring_z_mod(4));
  REQUIRE(c4.buckets.size() == 2);
  CHECK(c4.buckets[0].representative == std::vector<elt>{0, 1});
  CHECK(c4.buckets[0].size == 2);
  CHECK(c4.buckets[0].mnk == 2);
  CHECK(c4.buckets[1].representative == std::vector<elt>{0, 2});
  CHECK(c4.buckets[1].size == 1);
  CHECK(c4.buckets[1].mnk == 0);

  // The order-8 chain ring with T^2 = 2: four minimal cocycles in one
  // class and the two ideal-valued injective ones in another.  Positions
  // follow the ascending unit codes 1, 3, 5, 7, and 5 generates the cyclic
  // operator group, so the cocycle sending 5 to v reads (0, 6v, v, 5v).
  auto c8 = principal_unit_triples(ring_from_eisenstein(2, 2, 2, 1, {1, 0}));
  CHECK(c8.injective == 6);
  CHECK(c8.mnk == 4);
  REQUIRE(c8.buckets.size() == 2);
  CHECK(c8.buckets[0].representative == std::vector<elt>{0, 2, 4, 6});
  CHECK(c8.buckets[0].size == 2);
  CHECK(c8.buckets[0].mnk == 0);
  CHECK(c8.buckets[1].representative == std::vector<elt>{0, 4, 5, 3});
  CHECK(c8.buckets[1].size == 4);
  CHECK(c8.buckets[1].mnk == 4);

  CHECK_THROWS_WITH_AS(principal_unit_triples(ring_z_mod(4), 3),
                       doctest::Contains("BoundExceeded"), Error);
}

TEST_CASE("congruence unit models and their parametrized kernels") {
  // Equal characteristic, p = 3, levels n = 1 and m = 2: the operators are
  // the nine units 1 + 3k of F3[T]/(T^3) acting on F3[T]/(T^2).
  auto L = local_model("poly", 3, 1, 2);
  CHECK(L.big.size() == 27);
  CHECK(L.small.size() == 9);
  CHECK(L.ctx->gamma.order() == 9);
  CHECK(isomorphic(L.ctx->gamma, abelian_group({3, 3})));
  CHECK(L.cdiv == std::vector<elt>{0, 1, 2, 3, 4, 5, 6, 7, 8});

  // A unit parameter spreads the division values injectively: trivial
  // kernel, level bound m, and no chance of being a homomorphism.
  auto unit = eta_param_kernel(L, 1);
  CHECK(unit.v_a == 0);
  CHECK(unit.r_a == 2);
  CHECK_FALSE(unit.hom);
  CHECK(unit.eta == std::vector<elt>{0, 1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(unit.kernel == std::vector<elt>{0});

  // The uniformizer as parameter: the kernel grows to the level-two
  // congruence subgroup and eta becomes a homomorphism.
  auto uni = eta_param_kernel(L, 3);
  CHECK(uni.v_a == 1);
  CHECK(uni.r_a == 1);
  CHECK(uni.hom);
  CHECK(uni.eta == std::vector<elt>{0, 3, 6, 0, 3, 6, 0, 3, 6});
  CHECK(uni.kernel == std::vector<elt>{0, 3, 6});

  // Twisting by a character moves the kernel to a diagonal subgroup of the
  // same order.
  std::vector<elt> alpha{0, 0, 6, 3, 3, 0, 6, 6, 3};
  auto tw = eta_param_kernel(L, 3, alpha);
  CHECK(tw.hom);
  CHECK(tw.eta == std::vector<elt>{0, 3, 3, 3, 6, 6, 6, 0, 0});
  CHECK(tw.kernel == std::vector<elt>{0, 7, 8});
  CHECK(L.gamma_elems[7] == 22);  // 1 + T + 2T^2
  CHECK(L.gamma_elems[8] == 25);  // 1 + 2T + 2T^2

  // Mixed characteristic, p = 2: the odd residues of Z/8 acting on Z/4.
  auto M = local_model("padic", 2, 1, 2);
  CHECK(M.gamma_elems == std::vector<elt>{1, 3, 5, 7});
  CHECK(M.cdiv == std::vector<elt>{0, 1, 2, 3});
  auto m1 = eta_param_kernel(M, 1);
  CHECK(m1.eta == std::vector<elt>{0, 1, 2, 3});
  CHECK(m1.kernel == std::vector<elt>{0});
  CHECK(m1.r_a == 2);
  CHECK_FALSE(m1.hom);
  auto m2 = eta_param_kernel(M, 2);
  CHECK(m2.eta == std::vector<elt>{0, 2, 0, 2});
  CHECK(m2.kernel == std::vector<elt>{0, 2});
  CHECK(m2.v_a == 1);
  CHECK(m2.hom);

  // The two coefficient rings are genuinely different at p = 2: equal
  // characteristic gives a cyclic operator group, mixed gives Klein.
  auto P = local_model("poly", 2, 1, 2);
  CHECK(isomorphic(P.ctx->gamma, cyclic_group(4)));
  CHECK(isomorphic(M.ctx->gamma, abelian_group({2, 2})));
  CHECK_FALSE(isomorphic(P.ctx->gamma, M.ctx->gamma));

  CHECK_THROWS_WITH_AS(local_model("weird", 3, 1, 2),
                       doctest::Contains("ModelUnavailable"), Error);
  CHECK_THROWS_WITH_AS(local_model("poly", 4, 1, 2),
                       doctest::Contains("BadParameters"), Error);
  CHECK_THROWS_WITH_AS(local_model("poly", 3, 2, 2),
                       doctest::Contains("BadParameters"), Error);
  CHECK_THROWS_WITH_AS(local_model("poly", 3, 1, 6),
                       doctest::Contains("OrderBoundExceeded"), Error);
  CHECK_THROWS_WITH_AS(eta_param_kernel(M, 99),
                       doctest::Contains("BadParameters"), Error);
  CHECK_THROWS_WITH_AS(eta_param_kernel(M, 1, {0, 0}),
                       doctest::Contains("BadParameters"), Error);
  CHECK_THROWS_WITH_AS(eta_param_kernel(M, 1, {0, 1, 0, 1}),
                       doctest::Contains("BadParameters"), Error);
  CHECK_THROWS_WITH_AS(eta_param_kernel(M, 1, {0, 2, 2, 2}),
                       doctest::Contains("BadParameters"), Error);
}
