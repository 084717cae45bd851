#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "cogalois/cocycle.hpp"

namespace cogalois {

// ---------------------------------------------------------------------------
// Kneser ideals: an ideal a is Kneser when the induced cocycle into G/a is
// surjective.  Surjectivity of the induced cocycle is decided twice, by
// counting the cosets the values cover and through the index identity
// |Gamma| * |a| = |preimage of a| * |G|; the two must agree.
// ---------------------------------------------------------------------------

inline bool is_kneser_ideal(const Triple& t, const Subgroup& a) {
  const GammaGroup& gg = *t.ctx;
  require(is_ideal(gg, a), "NotAnIdeal", "Kneser test needs an ideal");
  const FiniteGroup& G = gg.g;
  auto rep = [&](elt x) {
    elt best = G.order();
    for (elt y : a.members) best = std::min(best, G.mul(x, y));
    return best;
  };
  std::set<elt> hit;
  for (elt s = 0; s < gg.gamma.order(); ++s) hit.insert(rep(t.eta[s]));
  bool covers = static_cast<int>(hit.size()) * a.size() == G.order();

  int preimage = 0;
  for (elt s = 0; s < gg.gamma.order(); ++s)
    if (a.contains(t.eta[s])) ++preimage;
  bool index_eq = static_cast<std::int64_t>(gg.gamma.order()) * a.size() ==
                  static_cast<std::int64_t>(preimage) * G.order();
  if (covers != index_eq)
    fatal_disagreement("coset covering and the index identity disagree");
  return covers;
}

// ---------------------------------------------------------------------------
// Kneser flags over a whole ideal lattice, with the maximal non-Kneser
// ideals and the derived criteria checked against the direct computation:
//  - the Kneser set is an upper set,
//  - a is Kneser iff it lies under no maximal non-Kneser ideal,
//  - a is Kneser iff every ideal above it satisfies the index identity.
// ---------------------------------------------------------------------------

struct KneserReport {
  std::vector<char> kneser;  // parallel to the lattice
  std::vector<int> nk_max;   // indices of the maximal non-Kneser ideals
};

inline KneserReport kneser_ideals(const Triple& t, const IdealLattice& lat) {
  const GammaGroup& gg = *t.ctx;
  KneserReport rep;
  int n = static_cast<int>(lat.ideals.size());
  rep.kneser.resize(n);
  for (int i = 0; i < n; ++i) rep.kneser[i] = is_kneser_ideal(t, lat.ideals[i]);

  bool surj = is_surjective(t);
  for (int i = 0; i < n; ++i) {
    if (lat.ideals[i].full() && !rep.kneser[i])
      fatal_disagreement("the full ideal must be Kneser");
    if (lat.ideals[i].trivial() && rep.kneser[i] != surj)
      fatal_disagreement("the trivial ideal must match plain surjectivity");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rep.kneser[i] && subgroup_leq(lat.ideals[i], lat.ideals[j]) &&
          !rep.kneser[j])
        fatal_disagreement("Kneser ideals do not form an upper set");

  for (int i = 0; i < n; ++i) {
    if (rep.kneser[i]) continue;
    bool maximal = true;
    for (int j = 0; j < n && maximal; ++j)
      if (j != i && !rep.kneser[j] && subgroup_leq(lat.ideals[i], lat.ideals[j]))
        maximal = false;
    if (maximal) rep.nk_max.push_back(i);
  }
  for (int i = 0; i < n; ++i) {
    bool omitted = true;
    for (int m : rep.nk_max)
      if (subgroup_leq(lat.ideals[i], lat.ideals[m])) omitted = false;
    if (omitted != static_cast<bool>(rep.kneser[i]))
      fatal_disagreement("omitting criterion disagrees with the direct test");
    bool over = true;
    for (int j = 0; j < n && over; ++j)
      if (subgroup_leq(lat.ideals[i], lat.ideals[j]) && !rep.kneser[j]) over = false;
    if (over != static_cast<bool>(rep.kneser[i]))
      fatal_disagreement("over-ideal criterion disagrees with the direct test");
  }
  (void)gg;
  return rep;
}

// ---------------------------------------------------------------------------
// Minimal non-Kneser triples: a generating, non-surjective, normalized
// cocycle whose every nontrivial ideal is Kneser.
// ---------------------------------------------------------------------------

inline bool is_mnk(const Triple& t, const IdealLattice* lattice = nullptr) {
  if (!t.generating) return false;
  if (!t.delta_tilde.trivial()) return false;
  if (is_surjective(t)) return false;
  IdealLattice local;
  if (!lattice) {
    local = all_ideals(*t.ctx);
    lattice = &local;
  }
  for (const auto& a : lattice->ideals)
    if (!a.trivial() && !is_kneser_ideal(t, a)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Primary decomposition of a nilpotent group: for each prime, the elements
// of prime-power order form a subgroup (this is the nilpotency test used
// here), the subgroups have coprime orders and fill the group.
// ---------------------------------------------------------------------------

struct PComponents {
  std::vector<std::int64_t> primes;
  std::vector<Subgroup> components;
};

inline PComponents p_components(const FiniteGroup& G) {
  PComponents pc;
  pc.primes = prime_factors(G.order());
  std::int64_t prod = 1;
  for (std::int64_t p : pc.primes) {
    std::vector<elt> mem;
    for (elt x = 0; x < G.order(); ++x) {
      int o = G.element_order(x);
      while (o % p == 0) o /= static_cast<int>(p);
      if (o == 1) mem.push_back(x);
    }
    Subgroup s = subgroup_from_members(G, std::move(mem));
    require(is_subgroup(G, s), "NotNilpotent",
            "elements of prime-power order do not form a subgroup");
    prod *= s.size();
    pc.components.push_back(std::move(s));
  }
  require(prod == G.order(), "NotNilpotent",
          "primary components do not fill the group");
  return pc;
}

inline bool is_nilpotent(const FiniteGroup& G) {
  try {
    p_components(G);
    return true;
  } catch (const Error& e) {
    if (e.code() == "NotNilpotent") return false;
    throw;
  }
}

// ---------------------------------------------------------------------------
// For a nilpotent module, surjectivity holds exactly when it holds on every
// maximal primary quotient G/a_p, where a_p is the product of the other
// components.  Both sides are computed and compared.
// ---------------------------------------------------------------------------

struct PronilReport {
  std::vector<std::int64_t> primes;
  std::vector<char> component_surjective;
  bool surjective = false;
};

inline PronilReport pronil_surjectivity(const Triple& t) {
  const GammaGroup& gg = *t.ctx;
  PComponents pc = p_components(gg.g);
  PronilReport rep;
  rep.primes = pc.primes;
  rep.surjective = is_surjective(t);
  bool all = true;
  for (std::size_t i = 0; i < pc.primes.size(); ++i) {
    std::vector<elt> seed{0};
    std::int64_t expect = 1;
    for (std::size_t j = 0; j < pc.primes.size(); ++j) {
      if (j == i) continue;
      seed.insert(seed.end(), pc.components[j].members.begin(),
                  pc.components[j].members.end());
      expect *= pc.components[j].size();
    }
    Subgroup ap = generated_subgroup(gg.g, seed);
    if (ap.size() != expect)
      fatal_disagreement("complement of a primary component has the wrong size");
    if (!is_ideal(gg, ap))
      fatal_disagreement("complement of a primary component is not an ideal");
    bool sp = is_kneser_ideal(t, ap);
    rep.component_surjective.push_back(sp);
    all = all && sp;
  }
  if (all != rep.surjective)
    fatal_disagreement("primary quotient criterion disagrees with surjectivity");
  return rep;
}

// ---------------------------------------------------------------------------
// Reduction along an image ideal: if eta(lambda) happens to be an ideal a,
// then eta is surjective exactly when the induced cocycle into G/a is.  By
// default lambda is the canonical normal subgroup whose image is central.
// ---------------------------------------------------------------------------

inline bool surjective_by_reduction(const Triple& t, const Subgroup* lambda = nullptr) {
  const GammaGroup& gg = *t.ctx;
  Subgroup lam = lambda ? *lambda : kernel_invariants(t).delta_bar;
  std::vector<elt> img;
  img.reserve(lam.members.size());
  for (elt s : lam.members) img.push_back(t.eta[s]);
  std::sort(img.begin(), img.end());
  img.erase(std::unique(img.begin(), img.end()), img.end());
  Subgroup a = subgroup_from_members(gg.g, std::move(img));
  require(is_subgroup(gg.g, a) && is_ideal(gg, a), "ImageNotIdeal",
          "the image of the chosen subgroup is not an ideal");
  bool via = is_kneser_ideal(t, a);
  bool direct = is_surjective(t);
  if (via != direct)
    fatal_disagreement("reduction along an image ideal disagrees with surjectivity");
  return direct;
}

// ---------------------------------------------------------------------------
// Transport of a surjective triple onto its coset space: X = Gamma/Delta
// carries the group law pulled back through the coset bijection onto the
// module, and the translation action interacts with that law through
//   gamma(x * y) = (gamma x) * inv(coset of gamma) * (gamma y)
//   gamma inv(x) = (coset of gamma) * inv(gamma x) * (coset of gamma).
// Both identities are verified exhaustively.
// ---------------------------------------------------------------------------

struct KneserStructure {
  FiniteGroup op;          // the transported group law on the coset space
  std::vector<elt> coset;  // group element -> coset index
  std::vector<elt> rep;    // coset index -> least representative
  GroupAction act;         // translation action on the coset space
};

inline KneserStructure kneser_structure(const Triple& t) {
  require(is_surjective(t), "NotSurjective",
          "transport needs a surjective cocycle");
  const GammaGroup& gg = *t.ctx;
  const FiniteGroup& Ga = gg.gamma;
  KneserStructure ks;
  ks.coset.assign(Ga.order(), -1);
  for (elt s = 0; s < Ga.order(); ++s) {
    if (ks.coset[s] >= 0) continue;
    elt id = static_cast<elt>(ks.rep.size());
    elt least = Ga.order();
    for (elt d : t.delta.members) least = std::min(least, Ga.mul(s, d));
    ks.rep.push_back(least);
    for (elt d : t.delta.members) ks.coset[Ga.mul(s, d)] = id;
  }
  int n = static_cast<int>(ks.rep.size());
  std::vector<elt> value(n);      // coset -> module element
  std::vector<elt> of_value(gg.g.order(), -1);
  for (int x = 0; x < n; ++x) {
    value[x] = t.eta[ks.rep[x]];
    if (of_value[value[x]] >= 0)
      fatal_disagreement("coset map onto the module is not injective");
    of_value[value[x]] = x;
  }
  if (n != gg.g.order())
    fatal_disagreement("coset map onto the module is not bijective");

  std::vector<elt> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      table[static_cast<std::size_t>(x) * n + y] =
          of_value[gg.g.mul(value[x], value[y])];
  ks.op = make_group_flat(n, std::move(table), "transport");

  ks.act.gamma_order = Ga.order();
  ks.act.g_order = n;
  ks.act.act.resize(static_cast<std::size_t>(Ga.order()) * n);
  for (elt s = 0; s < Ga.order(); ++s)
    for (int x = 0; x < n; ++x)
      ks.act.act[static_cast<std::size_t>(s) * n + x] =
          ks.coset[Ga.mul(s, ks.rep[x])];

  for (elt s = 0; s < Ga.order(); ++s) {
    elt shat = ks.coset[s];
    for (int x = 0; x < n; ++x) {
      elt lhs2 = ks.act.apply(s, ks.op.inv(x));
      elt rhs2 = ks.op.mul(shat, ks.op.mul(ks.op.inv(ks.act.apply(s, x)), shat));
      if (lhs2 != rhs2)
        fatal_disagreement("transported law breaks the inversion identity");
      for (int y = 0; y < n; ++y) {
        elt lhs = ks.act.apply(s, ks.op.mul(x, y));
        elt rhs = ks.op.mul(ks.act.apply(s, x),
                            ks.op.mul(ks.op.inv(shat), ks.act.apply(s, y)));
        if (lhs != rhs)
          fatal_disagreement("transported law breaks the product identity");
      }
    }
  }
  return ks;
}

}  // namespace cogalois
