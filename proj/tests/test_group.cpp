#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "cogalois/catalog.hpp"
#include "cogalois/group.hpp"

using namespace cogalois;

namespace {
std::string code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}
}  // namespace

TEST_CASE("table validation catches each defect with its own code") {
  // identity must sit at index 0
  CHECK(code_of([] { make_group({{1, 0}, {0, 1}}); }) == "NoIdentity");
  // broken inverse: a row that never reaches the identity
  CHECK(code_of([] {
          make_group({{0, 1, 2}, {1, 1, 1}, {2, 2, 2}});
        }) == "NoInverse");
  // out-of-range entry
  CHECK(code_of([] { make_group({{0, 1}, {1, 7}}); }) == "BadParameters");
  // associativity violation on a 3-element magma with identity and inverses
  CHECK(code_of([] {
          make_group({{0, 1, 2}, {1, 0, 0}, {2, 0, 1}});
        }) == "NotAssociative");
}

TEST_CASE("large tables go through the generator-based associativity check") {
  FiniteGroup g = cyclic_group(300);
  CHECK(g.order() == 300);
  CHECK(g.element_order(1) == 300);
  CHECK(g.abelian());

  // corrupt one product and the construction must notice
  std::vector<elt> t = g.table();
  t[1 * 300 + 2] = 4;
  CHECK(code_of([&] { make_group_flat(300, std::move(t)); }) == "NotAssociative");
}

TEST_CASE("element orders and inverses") {
  FiniteGroup z6 = cyclic_group(6);
  CHECK(z6.element_order(1) == 6);
  CHECK(z6.element_order(2) == 3);
  CHECK(z6.element_order(3) == 2);
  CHECK(z6.inv(2) == 4);
  CHECK(z6.mul(5, 2) == 1);

  FiniteGroup s3 = dihedral_group(3);
  CHECK_FALSE(s3.abelian());
  std::vector<int> orders;
  for (elt x = 0; x < 6; ++x) orders.push_back(s3.element_order(x));
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<int>{1, 2, 2, 2, 3, 3});
}

TEST_CASE("subgroup lattices of small groups have the expected size") {
  CHECK(all_subgroups(dihedral_group(3)).size() == 6);
  CHECK(all_subgroups(abelian_group({2, 2})).size() == 5);
  CHECK(all_subgroups(cyclic_group(12)).size() == 6);  // one per divisor
  CHECK(all_subgroups(dihedral_group(4)).size() == 10);
  CHECK(all_subgroups(dicyclic_group(2)).size() == 6);
  CHECK(all_subgroups(detail::alternating_4()).size() == 10);

  FiniteGroup z12 = cyclic_group(12);
  auto subs = all_subgroups(z12);
  for (const auto& s : subs) {
    CHECK(is_subgroup(z12, s));
    CHECK(12 % s.size() == 0);
  }
  CHECK(code_of([&] { all_subgroups(z12, nullptr, 3); }) == "OrderBoundExceeded");
}

TEST_CASE("relative subgroup lattice only lists overgroups") {
  FiniteGroup d8 = dihedral_group(4);
  Subgroup c = center(d8);
  CHECK(c.size() == 2);
  auto above = all_subgroups(d8, &c);
  CHECK(above.size() == 5);  // center, the three order-4 subgroups, the whole group
  for (const auto& s : above) CHECK(subgroup_leq(c, s));
}

TEST_CASE("quotients identify the expected groups") {
  FiniteGroup d8 = dihedral_group(4);
  QuotientData q = quotient(d8, center(d8));
  CHECK(q.group.order() == 4);
  CHECK(isomorphic(q.group, abelian_group({2, 2})));

  FiniteGroup q8 = dicyclic_group(2);
  CHECK(center(q8).size() == 2);
  CHECK(isomorphic(quotient(q8, center(q8)).group, abelian_group({2, 2})));

  FiniteGroup z12 = cyclic_group(12);
  Subgroup three = generated_subgroup(z12, {4});
  CHECK(three.size() == 3);
  CHECK(isomorphic(quotient(z12, three).group, cyclic_group(4)));

  // non-normal subgroup is rejected
  FiniteGroup s3 = dihedral_group(3);
  Subgroup refl = generated_subgroup(s3, {3});
  CHECK(refl.size() == 2);
  CHECK(code_of([&] { quotient(s3, refl); }) == "NotNormal");
}

TEST_CASE("automorphism group orders") {
  CHECK(automorphisms(cyclic_group(8)).size() == 4);
  CHECK(automorphisms(cyclic_group(15)).size() == 8);
  CHECK(automorphisms(abelian_group({2, 2, 2})).size() == 168);
  CHECK(automorphisms(dihedral_group(3)).size() == 6);
  CHECK(automorphisms(dicyclic_group(2)).size() == 24);
  CHECK(automorphisms(abelian_group({2, 2})).size() == 6);
}

TEST_CASE("homomorphism enumeration") {
  FiniteGroup z6 = cyclic_group(6);
  FiniteGroup s3 = dihedral_group(3);
  CHECK(all_homomorphisms(z6, s3).size() == 6);  // one per element of order dividing 6
  CHECK(all_homomorphisms(s3, z6).size() == 2);  // factors through the sign
  for (const auto& h : all_homomorphisms(s3, z6)) CHECK(is_homomorphism(s3, z6, h));

  FiniteGroup k4 = abelian_group({2, 2});
  CHECK(all_homomorphisms(k4, k4).size() == 16);  // all linear maps over GF(2)
}

TEST_CASE("isomorphism testing distinguishes same-order groups") {
  CHECK(isomorphic(direct_product(cyclic_group(4), cyclic_group(2)), abelian_group({4, 2})));
  CHECK(isomorphic(dihedral_group(3), semidirect_cyclic(3, 2, 2, "")));
  CHECK_FALSE(isomorphic(dihedral_group(4), dicyclic_group(2)));
  CHECK_FALSE(isomorphic(cyclic_group(8), abelian_group({4, 2})));
  CHECK_FALSE(isomorphic(dihedral_group(6), dicyclic_group(3)));
  CHECK(isomorphic(direct_product(cyclic_group(3), cyclic_group(4)), cyclic_group(12)));
}

TEST_CASE("subgroups convert to standalone groups") {
  FiniteGroup d8 = dihedral_group(4);
  Subgroup rot = generated_subgroup(d8, {1});
  CHECK(rot.size() == 4);
  auto [g, members] = as_group(d8, rot);
  CHECK(g.order() == 4);
  CHECK(isomorphic(g, cyclic_group(4)));
  CHECK(members[0] == 0);
}

TEST_CASE("greedy generating sets are small and generate") {
  CHECK(greedy_generators(cyclic_group(6)).size() == 1);
  CHECK(greedy_generators(abelian_group({2, 2})).size() == 2);
  CHECK(greedy_generators(dihedral_group(4)).size() == 2);
  FiniteGroup g = abelian_group({2, 2, 2});
  auto gens = greedy_generators(g);
  CHECK(gens.size() == 3);
  CHECK(generated_subgroup(g, gens).size() == 8);
}

TEST_CASE("deterministic rng") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng c(7);
  for (int i = 0; i < 1000; ++i) {
    auto v = c.below(13);
    CHECK(v < 13);
  }
}
