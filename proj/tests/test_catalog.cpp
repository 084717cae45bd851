#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "cogalois/catalog.hpp"

using namespace cogalois;

TEST_CASE("catalog covers every group of order up to 16 exactly once") {
  auto cat = small_groups_catalog();
  CHECK(cat.size() == 42);
  std::map<int, int> per_order;
  for (const auto& g : cat) ++per_order[g.order()];
  const std::vector<int> expected{1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14};
  for (int n = 1; n <= 16; ++n) CHECK(per_order[n] == expected[n - 1]);

  // pairwise non-isomorphic within each order
  for (std::size_t i = 0; i < cat.size(); ++i)
    for (std::size_t j = i + 1; j < cat.size(); ++j) {
      if (cat[i].order() != cat[j].order()) continue;
      INFO(cat[i].name() << " vs " << cat[j].name());
      CHECK_FALSE(isomorphic(cat[i], cat[j]));
    }
}

TEST_CASE("named entries have their defining properties") {
  auto g = [](const std::string& n) { return catalog_group(n); };

  CHECK(g("Z16").element_order(1) == 16);
  CHECK(g("D16").order() == 16);
  {
    // dihedral of a 8-gon: nine involutions (eight reflections + the half-turn)
    int inv = 0;
    for (elt x = 0; x < 16; ++x)
      if (g("D16").element_order(x) == 2) ++inv;
    CHECK(inv == 9);
  }
  {
    // generalized quaternion: unique involution
    int inv = 0;
    for (elt x = 0; x < 16; ++x)
      if (g("Q16").element_order(x) == 2) ++inv;
    CHECK(inv == 1);
  }
  {
    // semidihedral: five involutions
    int inv = 0;
    for (elt x = 0; x < 16; ++x)
      if (g("QD16").element_order(x) == 2) ++inv;
    CHECK(inv == 5);
  }
  CHECK(center(g("M16")).size() == 4);       // modular group of order 16
  CHECK(center(g("Pauli16")).size() == 4);   // central product D8 . Z4
  CHECK_FALSE(g("Pauli16").abelian());
  CHECK(isomorphic(quotient(g("Pauli16"), center(g("Pauli16"))).group,
                   abelian_group({2, 2})));
  CHECK(center(g("D8xZ2")).size() == 4);
  CHECK_FALSE(isomorphic(g("Pauli16"), g("D8xZ2")));
  CHECK_FALSE(isomorphic(g("Pauli16"), g("Q8xZ2")));

  CHECK(g("A4").order() == 12);
  CHECK(all_subgroups(g("A4")).size() == 10);  // no subgroup of order 6
  bool has6 = false;
  for (const auto& s : all_subgroups(g("A4"))) has6 = has6 || s.size() == 6;
  CHECK_FALSE(has6);

  CHECK(g("Dic12").order() == 12);
  {
    int inv = 0;
    for (elt x = 0; x < 12; ++x)
      if (g("Dic12").element_order(x) == 2) ++inv;
    CHECK(inv == 1);
  }
}

TEST_CASE("constructors agree with their abstract presentations") {
  CHECK(isomorphic(dicyclic_group(2), catalog_group("Q8")));
  CHECK(isomorphic(dihedral_group(2), abelian_group({2, 2})));
  CHECK(isomorphic(semidirect_cyclic(4, 2, 3, ""), dihedral_group(4)));
  CHECK(isomorphic(abelian_group({2, 4}), catalog_group("Z4xZ2")));
  CHECK(isomorphic(abelian_group({2, 6}), catalog_group("Z6xZ2")));
  CHECK_THROWS_AS(semidirect_cyclic(8, 2, 2, ""), Error);  // 2 is not a unit mod 8
  CHECK_THROWS_AS(semidirect_cyclic(8, 3, 3, ""), Error);  // 3^3 != 1 mod 8
}

TEST_CASE("nilpotent non-primary synthesis") {
  auto list = nilpotent_non_primary_upto(24);
  CHECK(list.size() == 17);
  for (const auto& g : list) {
    CHECK(g.order() <= 24);
    auto pf = prime_factors(g.order());
    CHECK(pf.size() >= 2);
  }
  // spot: both order-18 nilpotent groups appear and differ
  int count18 = 0;
  for (const auto& g : list)
    if (g.order() == 18) ++count18;
  CHECK(count18 == 2);
}

TEST_CASE("catalog lookup by name") {
  CHECK(catalog_group("Q8").order() == 8);
  CHECK_THROWS_AS(catalog_group("no-such-group"), Error);
  CHECK(catalog_upto(8).size() == 14);
  CHECK(abelian_catalog_upto(9).size() == 13);
}
