#pragma once

// The coGalois side of the connexion: deciding when J and S are mutually
// inverse lattice isomorphisms, flagging which ideals induce such quotients,
// and recognising the minimal obstructions among surjective cocycles.

#include <set>

#include "cogalois/connexion.hpp"
#include "cogalois/kneser.hpp"

namespace cogalois {

/// Decides whether a generating triple realises the full lattice duality:
/// eta surjective with J and S mutually inverse bijections between the
/// subgroups above the kernel and the ideal lattice.  Five independent
/// formulations are evaluated and must agree:
///   (a) the definition itself (both composites are the identity),
///   (b) surjectivity plus S(J(lam)) = lam for every lam,
///   (c) surjectivity plus injectivity of J,
///   (d) surjectivity of eta plus surjectivity of S onto the lambda lattice,
///   (e) every eta(lam) is itself an ideal (no closure needed).
/// `gamma_subgroups`, when given, must be the full subgroup list of Gamma and
/// saves the dominant enumeration for callers that sweep many cocycles.
inline bool is_cogalois(const Triple& t, const IdealLattice* lattice = nullptr,
                        const std::vector<Subgroup>* gamma_subgroups = nullptr) {
  require(t.generating, "NotGenerating",
          "the lattice-duality routes assume a generating cocycle");
  IdealLattice local;
  if (!lattice) {
    local = all_ideals(*t.ctx);
    lattice = &local;
  }
  const std::vector<Subgroup>& ideals = lattice->ideals;

  std::vector<Subgroup> lambdas;
  if (gamma_subgroups) {
    for (const Subgroup& s : *gamma_subgroups)
      if (subgroup_leq(t.delta, s)) lambdas.push_back(s);
  } else {
    lambdas = lambda_lattice(t);
  }

  const bool surj = is_surjective(t);

  std::set<std::vector<elt>> ideal_sets;
  for (const Subgroup& a : ideals) ideal_sets.insert(a.members);

  // (b)-part and (c)-part share the J images.
  bool sj_identity = true;
  std::set<std::vector<elt>> j_images;
  for (const Subgroup& lam : lambdas) {
    Subgroup j = j_operator(t, lam, lattice);
    j_images.insert(j.members);
    if (sj_identity && !(s_operator(t, j).members == lam.members))
      sj_identity = false;
  }
  bool js_identity = true;
  std::set<std::vector<elt>> s_images;
  for (const Subgroup& a : ideals) {
    Subgroup s = s_operator(t, a);
    s_images.insert(s.members);
    if (js_identity && !(j_operator(t, s, lattice).members == a.members))
      js_identity = false;
  }

  const bool route_a = surj && sj_identity && js_identity;
  const bool route_b = surj && sj_identity;
  const bool route_c = surj && j_images.size() == lambdas.size();
  const bool route_d = surj && s_images.size() == lambdas.size();

  bool route_e = true;
  for (const Subgroup& lam : lambdas) {
    std::set<elt> im;
    for (elt s : lam.members) im.insert(t.eta[s]);
    if (!ideal_sets.count(std::vector<elt>(im.begin(), im.end()))) {
      route_e = false;
      break;
    }
  }

  if (route_a != route_b || route_a != route_c || route_a != route_d ||
      route_a != route_e)
    fatal_disagreement("lattice-duality formulations disagree");
  return route_a;
}

struct CoGaloisReport {
  std::vector<char> cogalois;  // aligned with the supplied ideal lattice
  std::vector<int> ncg_max;    // indices of the maximal non-duality ideals
};

/// Flags, for every ideal a, whether the induced triple on G/a realises the
/// lattice duality.  Verifies along the way that the flagged set is an upper
/// set contained in the Kneser ideals, that the full ideal is always flagged,
/// that the trivial-ideal flag matches the direct decision on the triple
/// itself, and that the omitting criterion through the maximal unflagged
/// ideals reproduces every flag.
inline CoGaloisReport cogalois_ideals(const Triple& t, const IdealLattice& lat) {
  require(t.generating, "NotGenerating",
          "duality flags are defined for generating cocycles");
  const int n = static_cast<int>(lat.ideals.size());
  CoGaloisReport rep;
  rep.cogalois.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    InducedTriple it = induced_cocycle(t, lat.ideals[i]);
    rep.cogalois[i] = is_cogalois(it.t) ? 1 : 0;
    if (lat.ideals[i].trivial() && rep.cogalois[i] != (is_cogalois(t, &lat) ? 1 : 0))
      fatal_disagreement("trivial quotient disagrees with the direct decision");
    if (lat.ideals[i].full() && !rep.cogalois[i])
      fatal_disagreement("the full ideal must induce the duality");
    if (rep.cogalois[i] && !is_kneser_ideal(t, lat.ideals[i]))
      fatal_disagreement("a duality ideal failed the covering criterion");
  }
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (subgroup_leq(lat.ideals[i], lat.ideals[k]) && rep.cogalois[i] &&
          !rep.cogalois[k])
        fatal_disagreement("duality ideals do not form an upper set");
  for (int i = 0; i < n; ++i) {
    if (rep.cogalois[i]) continue;
    bool maximal = true;
    for (int k = 0; k < n && maximal; ++k)
      if (k != i && !rep.cogalois[k] && subgroup_leq(lat.ideals[i], lat.ideals[k]))
        maximal = false;
    if (maximal) rep.ncg_max.push_back(i);
  }
  for (int i = 0; i < n; ++i) {
    bool omitting = true;
    for (int m : rep.ncg_max)
      if (subgroup_leq(lat.ideals[i], lat.ideals[m])) {
        omitting = false;
        break;
      }
    if (omitting != (rep.cogalois[i] != 0))
      fatal_disagreement("omitting criterion disagrees with the duality flags");
  }
  return rep;
}

/// A minimal non-duality triple: surjective, normalized, itself failing the
/// lattice duality while every proper quotient realises it.  Equivalently the
/// unflagged set is exactly the trivial ideal; both readings are computed.
inline bool is_mncg(const Triple& t, const IdealLattice* lattice = nullptr) {
  if (!t.generating || !t.delta_tilde.trivial()) return false;
  if (!is_surjective(t)) return false;
  IdealLattice local;
  if (!lattice) {
    local = all_ideals(*t.ctx);
    lattice = &local;
  }
  CoGaloisReport rep = cogalois_ideals(t, *lattice);
  int unflagged = 0;
  bool trivial_unflagged = false;
  for (std::size_t i = 0; i < rep.cogalois.size(); ++i)
    if (!rep.cogalois[i]) {
      ++unflagged;
      if (lattice->ideals[i].trivial()) trivial_unflagged = true;
    }
  const bool direct = unflagged == 1 && trivial_unflagged;
  const bool via_max = rep.ncg_max.size() == 1 &&
                       lattice->ideals[rep.ncg_max[0]].trivial();
  if (direct != via_max)
    fatal_disagreement("minimality readings disagree");
  return direct;
}

}  // namespace cogalois
