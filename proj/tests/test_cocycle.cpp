#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "cogalois/catalog.hpp"
#include "cogalois/cocycle.hpp"

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

GammaGroup inversion_on_z4_by_z2() {
  return make_gamma_group(cyclic_group(2), cyclic_group(4), {{0, 1, 2, 3}, {0, 3, 2, 1}});
}

// Klein group acting on Z4: one generator inverts, the other is inert; the
// twisted map sends them to 1 and 2.
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

TEST_CASE("cocycle law is enforced with a named violation") {
  GammaGroup triv = trivial_action(cyclic_group(2), cyclic_group(4));
  CHECK(code_of([&] { make_triple(triv, {0, 1}); }) == "CocycleLawViolated");
  CHECK(code_of([&] { make_triple(triv, {0, 2}); }) == "");
  CHECK(code_of([&] { make_triple(triv, {0, 1, 2}); }) == "BadParameters");
}

TEST_CASE("enumeration counts match hand calculations") {
  GammaGroup gg = inversion_on_z4_by_z2();
  auto zs = enumerate_cocycles(gg);
  CHECK(zs.size() == 4);  // eta(s) can be anything: (1+inversion) kills it
  CHECK(enumerate_cocycles(gg, true).size() == 2);  // eta(s) in {1,3}

  GammaGroup triv = trivial_action(cyclic_group(2), cyclic_group(4));
  CHECK(enumerate_cocycles(triv).size() == 2);       // homs Z2 -> Z4
  CHECK(enumerate_cocycles(triv, true).empty());     // none generate

  GammaGroup t22 = trivial_action(abelian_group({2, 2}), cyclic_group(2));
  CHECK(enumerate_cocycles(t22).size() == 4);        // all characters
  CHECK(enumerate_cocycles(t22, true).size() == 3);

  // the Klein-on-Z4 operator group carries 8 cocycles, 4 of them generating
  Triple kt = klein_on_z4_triple();
  CHECK(enumerate_cocycles(*kt.ctx).size() == 8);
  CHECK(enumerate_cocycles(*kt.ctx, true).size() == 4);
}

TEST_CASE("kernels of the standard example") {
  Triple t = klein_on_z4_triple();
  CHECK(t.generating);
  CHECK(t.delta.size() == 1);
  CHECK(t.delta_prime.size() == 2);
  CHECK(t.delta_tilde.size() == 1);

  KernelInvariants k = kernel_invariants(t);
  CHECK(k.delta_bar.size() == 2);
  CHECK(k.delta_bar.members == k.delta_prime.members);  // abelian module
  CHECK(code_of([&] {
          GammaGroup triv = trivial_action(cyclic_group(2), cyclic_group(4));
          kernel_invariants(make_triple(triv, {0, 2}));
        }) == "NotGenerating");
}

TEST_CASE("coboundaries") {
  GammaGroup gg = inversion_on_z4_by_z2();
  auto bs = all_coboundaries(gg);
  CHECK(bs.size() == 2);  // |G| / |fixed points|
  for (const auto& b : bs) CHECK(is_cocycle(gg, b));

  // inner coboundaries are cocycles for the conjugation action
  FiniteGroup s3 = dihedral_group(3);
  GammaGroup inner = inner_action(s3);
  for (elt x = 0; x < 6; ++x) {
    Triple t = make_triple(inner, inner_cocycle(s3, x));
    // the kernel is the centralizer of x
    int cent = 0;
    for (elt y = 0; y < 6; ++y)
      if (s3.mul(x, y) == s3.mul(y, x)) ++cent;
    CHECK(t.delta.size() == cent);
  }
}

TEST_CASE("normalization factors out the inert kernel") {
  // surjective character of the Klein group onto Z2 under the trivial action
  FiniteGroup k4 = abelian_group({2, 2});
  GammaGroup triv = trivial_action(k4, cyclic_group(2));
  auto zs = enumerate_cocycles(triv, true);
  REQUIRE(zs.size() == 3);
  Triple t = make_triple(triv, zs[0]);
  CHECK(t.delta_tilde.size() == 2);
  NormalizedTriple n = normalize(t);
  CHECK(n.t.gamma().order() == 2);
  CHECK(n.t.delta_tilde.size() == 1);
  CHECK(n.t.generating);

  // an already-normalized triple is unchanged in size
  Triple kt = klein_on_z4_triple();
  CHECK(normalize(kt).t.gamma().order() == 4);
}

TEST_CASE("induced cocycles on quotients") {
  Triple t = klein_on_z4_triple();
  Subgroup two = generated_subgroup(t.g(), {2});
  InducedTriple it = induced_cocycle(t, two);
  CHECK(it.t.g().order() == 2);
  CHECK(it.t.generating);
  CHECK(it.t.delta.size() == 2);  // eta^{-1}({0,2}) has two elements
  CHECK(is_surjective(it.t));
}

TEST_CASE("surjectivity witnesses agree on both outcomes") {
  Triple t = klein_on_z4_triple();
  SurjectivityReport r = is_surjective_multi(t);
  CHECK(r.surjective);
  CHECK(r.by_image);
  CHECK(r.by_coset_bijection);
  CHECK(r.by_product);
  CHECK(r.by_transitivity);
  CHECK(r.by_index);

  GammaGroup triv = trivial_action(cyclic_group(2), cyclic_group(4));
  SurjectivityReport n = is_surjective_multi(make_triple(triv, {0, 2}));
  CHECK_FALSE(n.surjective);

  // reuse of cached semidirect data gives the same verdicts
  SemidirectData d = semidirect(*t.ctx);
  CHECK(is_surjective_multi(t, &d).surjective);
}

TEST_CASE("twisted classes of cocycles") {
  CHECK(h1_class_count(inversion_on_z4_by_z2()) == 2);
  CHECK(h1_class_count(trivial_action(cyclic_group(2), cyclic_group(2))) == 2);
  CHECK(h1_class_count(trivial_action(abelian_group({2, 2}), cyclic_group(2))) == 4);
  // conjugation action of S3 on itself: 6 cocycles of coboundary type exist,
  // and the class count is computed without an abelian shortcut
  CHECK(h1_class_count(inner_action(dihedral_group(3))) >= 1);
}
