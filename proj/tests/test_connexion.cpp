#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "cogalois/catalog.hpp"
#include "cogalois/connexion.hpp"

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

Triple klein_on_z4_triple() {
  FiniteGroup k4 = abelian_group({2, 2});
  FiniteGroup z4 = cyclic_group(4);
  auto gens = greedy_generators(k4);
  elt s = gens[0], t = gens[1];
  std::vector<std::vector<elt>> rows(4, {0, 1, 2, 3});
  rows[s] = {0, 3, 2, 1};
  rows[k4.mul(s, t)] = {0, 3, 2, 1};
  GammaGroup gg = make_gamma_group(k4, z4, std::move(rows));
  std::vector<elt> eta(4);
  eta[0] = 0;
  eta[s] = 1;
  eta[t] = 2;
  eta[k4.mul(s, t)] = gg.g.mul(eta[s], gg.act(s, eta[t]));
  return make_triple(gg, eta);
}
}  // namespace

TEST_CASE("image closure versus lattice meet") {
  Triple t = klein_on_z4_triple();
  IdealLattice lat = all_ideals(*t.ctx);
  CHECK(lat.ideals.size() == 3);

  auto gens = greedy_generators(t.gamma());
  Subgroup s_only = generated_subgroup(t.gamma(), {gens[0]});
  Subgroup t_only = generated_subgroup(t.gamma(), {gens[1]});

  // eta(gens[0]) = 1 generates everything; eta(gens[1]) = 2 stays small
  CHECK(j_operator(t, s_only, &lat).size() == 4);
  CHECK(j_operator(t, t_only, &lat).size() == 2);
  CHECK(j_operator(t, trivial_subgroup(t.gamma()), &lat).size() == 1);
  CHECK(j_operator(t, full_subgroup(t.gamma()), &lat).size() == 4);
}

TEST_CASE("J requires a subgroup above the kernel") {
  FiniteGroup k4 = abelian_group({2, 2});
  GammaGroup triv = trivial_action(k4, cyclic_group(2));
  auto zs = enumerate_cocycles(triv, true);
  Triple t = make_triple(triv, zs[0]);
  REQUIRE(t.delta.size() == 2);
  // some order-2 subgroup differs from the kernel
  Subgroup other = trivial_subgroup(t.gamma());
  for (elt x = 1; x < 4; ++x)
    if (!t.delta.contains(x)) {
      other = generated_subgroup(t.gamma(), {x});
      break;
    }
  CHECK(code_of([&] { j_operator(t, other); }) == "NotAboveKernel");
  CHECK(code_of([&] { j_operator(t, t.delta); }) == "");
}

TEST_CASE("preimages of ideals") {
  Triple t = klein_on_z4_triple();
  Subgroup two = generated_subgroup(t.g(), {2});
  CHECK(s_operator(t, two).size() == 2);
  CHECK(s_operator(t, trivial_subgroup(t.g())).members == t.delta.members);
  CHECK(s_operator(t, full_subgroup(t.g())).size() == 4);
}

TEST_CASE("full law suite on a surjective triple") {
  Triple t = klein_on_z4_triple();
  IdealLattice lat = all_ideals(*t.ctx);
  ConnexionReport r = verify_connexion(t, lat);
  CHECK(r.lambdas == 5);
  CHECK(r.ideals == 3);
  CHECK(r.js_identity_on_ideals);
}

TEST_CASE("law suite on a non-surjective triple") {
  GammaGroup triv = trivial_action(cyclic_group(2), cyclic_group(4));
  Triple t = make_triple(triv, {0, 2});
  IdealLattice lat = all_ideals(triv);
  CHECK(lat.ideals.size() == 3);
  ConnexionReport r = verify_connexion(t, lat);
  CHECK(r.lambdas == 2);  // the kernel of eta is trivial here
  CHECK_FALSE(r.js_identity_on_ideals);
}

TEST_CASE("law suite with a nonabelian module") {
  FiniteGroup s3 = dihedral_group(3);
  GammaGroup inner = inner_action(s3);
  IdealLattice lat = all_ideals(inner);
  CHECK(lat.ideals.size() == 3);  // 1, rotations, all
  for (const auto& v : enumerate_cocycles(inner, true)) {
    Triple t = make_triple(inner, v);
    verify_connexion(t, lat);
  }
}

TEST_CASE("law suite across every generating cocycle of a small sweep") {
  // all actions of Z4 and K4 on Z4 and K4: every law must hold
  std::vector<FiniteGroup> gammas{cyclic_group(4), abelian_group({2, 2})};
  std::vector<FiniteGroup> modules{cyclic_group(4), abelian_group({2, 2})};
  int triples = 0;
  for (const auto& gm : gammas)
    for (const auto& md : modules)
      for (const auto& gg : all_actions(gm, md)) {
        auto sp = std::make_shared<const GammaGroup>(gg);
        IdealLattice lat = all_ideals(gg);
        for (const auto& v : enumerate_cocycles(gg, true)) {
          verify_connexion(make_triple(sp, v), lat);
          ++triples;
        }
      }
  // 2 surjective characters of Z4, 2 twisted maps for the inversion, 12 over
  // the three faithful Klein-on-Z4 actions, 6 over the swap actions of Z4 on
  // the Klein group, 6 automorphisms under the trivial self-pairing
  CHECK(triples == 28);
}
