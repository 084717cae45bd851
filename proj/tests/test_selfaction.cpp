#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cogalois/catalog.hpp"
#include "cogalois/cogalois_ideals.hpp"
#include "cogalois/selfaction.hpp"

using namespace cogalois;

TEST_CASE("adequate units for small moduli") {
  CHECK(adequate_units(2) == std::vector<int>{1});
  CHECK(adequate_units(3) == std::vector<int>{1});
  CHECK(adequate_units(4) == std::vector<int>{1, 3});
  CHECK(adequate_units(5) == std::vector<int>{1});
  CHECK(adequate_units(8) == std::vector<int>{1, 3, 5, 7});
  CHECK(adequate_units(9) == std::vector<int>{1, 4, 7});
  CHECK(adequate_units(12) == std::vector<int>{1, 5, 7, 11});
  CHECK(adequate_units(16) == std::vector<int>{1, 5, 7, 9, 13, 15});
}

TEST_CASE("larger moduli only run the arithmetic routes") {
  std::vector<int> u500 = adequate_units(500);
  CHECK(u500.front() == 1);
  CHECK(std::find(u500.begin(), u500.end(), 499) != u500.end());  // negation
  // odd squarefree composite: only the identity
  CHECK(adequate_units(15) == std::vector<int>{1});
  // odd prime cube: exactly the units congruent to 1 modulo p^2
  CHECK(adequate_units(27) == std::vector<int>{1, 10, 19});
  std::vector<int> u343 = adequate_units(343);
  CHECK(u343.size() == 7);
  for (int u : u343) CHECK(u % 49 == 1);
}

TEST_CASE("deforming the order-4 cyclic group") {
  GammaGroup om = cyclic_self_action(4, 3);
  CHECK(is_adequate(om));
  CHECK(isomorphic(deform(om), abelian_group({2, 2})));
  CHECK(isomorphic(deform(cyclic_self_action(4, 1)), cyclic_group(4)));

  Triple fwd = forward_triple(om);
  CHECK(is_surjective(fwd));
  CHECK(is_cogalois(fwd));

  Triple bwd = backward_triple(om);
  CHECK(is_surjective(bwd));
  CHECK_FALSE(is_cogalois(bwd));
  CHECK(is_mncg(bwd));
}

TEST_CASE("deformations of the order-8 cyclic group") {
  DeformationClasses dc = deformation_classes(cyclic_group(8));
  REQUIRE(dc.rep_of.size() == 4);  // four self-actions, all adequate
  for (int r : dc.rep_of) CHECK(r >= 0);
  REQUIRE(dc.reps.size() == 3);
  int cyclic = 0, dihedral = 0, quaternion = 0;
  for (const FiniteGroup& g : dc.reps) {
    cyclic += isomorphic(g, cyclic_group(8));
    dihedral += isomorphic(g, dihedral_group(4));
    quaternion += isomorphic(g, dicyclic_group(2));
  }
  CHECK(cyclic == 1);
  CHECK(dihedral == 1);
  CHECK(quaternion == 1);
}

TEST_CASE("direction matters for the order-8 deformation triples") {
  for (int u : {1, 3, 5, 7}) {
    GammaGroup om = cyclic_self_action(8, u);
    Triple fwd = forward_triple(om);
    CHECK(is_cogalois(fwd));
    Triple bwd = backward_triple(om);
    CHECK(is_surjective(bwd));  // bijective, so a Kneser triple
    bool expect = (u == 1 || u == 5);
    CHECK(is_cogalois(bwd) == expect);
  }
}

TEST_CASE("Klein four-group deformations close the symmetric pair") {
  // deformation pairs are symmetric, so the order-4 cyclic group must
  // reappear among the Klein group's own deformations
  DeformationClasses dc = deformation_classes(abelian_group({2, 2}));
  REQUIRE(dc.reps.size() == 2);
  int klein = 0, cyclic = 0;
  for (const FiniteGroup& g : dc.reps) {
    klein += isomorphic(g, abelian_group({2, 2}));
    cyclic += isomorphic(g, cyclic_group(4));
  }
  CHECK(klein == 1);
  CHECK(cyclic == 1);
}

TEST_CASE("the dihedral group of order eight deforms to the quaternions") {
  DeformationClasses dc = deformation_classes(dihedral_group(4));
  bool self = false, quat = false;
  for (const FiniteGroup& g : dc.reps) {
    self = self || isomorphic(g, dihedral_group(4));
    quat = quat || isomorphic(g, dicyclic_group(2));
  }
  CHECK(self);
  CHECK(quat);
}

TEST_CASE("bad multipliers are rejected") {
  CHECK_THROWS_WITH_AS(cyclic_self_action(4, 2), doctest::Contains("BadParameters"),
                       Error);
  // a unit whose powers do not close after n steps is not an action at all
  CHECK_THROWS_WITH_AS(cyclic_self_action(5, 2), doctest::Contains("NotAnAction"),
                       Error);
  // a genuine action that fails adequacy
  GammaGroup om = cyclic_self_action(16, 3);
  CHECK_FALSE(is_adequate(om));
  CHECK_THROWS_WITH_AS(deform(om), doctest::Contains("NotAdequate"), Error);
  // a self-action must act on the group itself
  GammaGroup other = trivial_action(cyclic_group(2), cyclic_group(4));
  CHECK_THROWS_WITH_AS(is_adequate(other), doctest::Contains("BadParameters"),
                       Error);
}
