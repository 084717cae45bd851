#pragma once

#include <vector>

#include "cogalois/cocycle.hpp"

namespace cogalois {

// ---------------------------------------------------------------------------
// The adjoint pair between subgroups of Gamma above the kernel and ideals:
//   J(lam) = smallest ideal containing eta(lam)
//   S(a)   = eta^{-1}(a)
// with J(lam) <= a exactly when lam <= S(a).
// ---------------------------------------------------------------------------

/// Smallest ideal containing the set `seed`: alternately close under the
/// group product, conjugation and the operators until stable.
inline Subgroup ideal_closure(const GammaGroup& gg, std::vector<elt> seed) {
  const FiniteGroup& g = gg.g;
  Subgroup s = generated_subgroup(g, seed);
  for (int guard = 0; guard <= g.order(); ++guard) {
    std::vector<elt> extra;
    for (elt x : s.members) {
      for (elt c = 0; c < g.order(); ++c) {
        elt y = g.conj(c, x);
        if (!s.contains(y)) extra.push_back(y);
      }
      for (elt gm = 0; gm < gg.gamma.order(); ++gm) {
        elt y = gg.act(gm, x);
        if (!s.contains(y)) extra.push_back(y);
      }
    }
    if (extra.empty()) {
      if (!is_ideal(gg, s)) fatal_disagreement("ideal closure is not an ideal");
      return s;
    }
    extra.insert(extra.end(), s.members.begin(), s.members.end());
    s = generated_subgroup(g, extra);
  }
  fatal_disagreement("ideal closure failed to stabilize");
}

/// J(lam) for lam a subgroup of Gamma containing the kernel of eta.  When an
/// ideal lattice is supplied, the closure is cross-checked against the meet
/// of all ideals containing the image.
inline Subgroup j_operator(const Triple& t, const Subgroup& lam,
                           const IdealLattice* lattice = nullptr) {
  require(subgroup_leq(t.delta, lam), "NotAboveKernel",
          "J is only defined above the kernel of the cocycle");
  std::vector<elt> seed;
  for (elt s : lam.members) seed.push_back(t.eta[s]);
  Subgroup out = ideal_closure(*t.ctx, std::move(seed));
  if (lattice) {
    Subgroup meet = full_subgroup(t.g());
    for (const auto& a : lattice->ideals) {
      bool covers = true;
      for (elt s : lam.members)
        if (!a.contains(t.eta[s])) {
          covers = false;
          break;
        }
      if (covers) meet = intersect(t.g(), meet, a);
    }
    if (!(meet == out)) fatal_disagreement("ideal closure differs from the lattice meet");
  }
  return out;
}

/// S(a) = eta^{-1}(a); always a subgroup of Gamma containing the kernel.
inline Subgroup s_operator(const Triple& t, const Subgroup& a) {
  std::vector<elt> m;
  for (elt s = 0; s < t.gamma().order(); ++s)
    if (a.contains(t.eta[s])) m.push_back(s);
  Subgroup out = subgroup_from_members(t.gamma(), std::move(m));
  if (!is_subgroup(t.gamma(), out))
    fatal_disagreement("preimage of an ideal is not a subgroup");
  if (!subgroup_leq(t.delta, out))
    fatal_disagreement("preimage of an ideal misses the kernel");
  return out;
}

/// Subgroups of Gamma containing the kernel of eta.
inline std::vector<Subgroup> lambda_lattice(const Triple& t, int bound = 4096) {
  return all_subgroups(t.gamma(), &t.delta, bound);
}

struct ConnexionReport {
  int lambdas = 0;
  int ideals = 0;
  bool js_identity_on_ideals = false;  // J(S(a)) = a for every ideal
};

/// Validates every structural law of the adjoint pair on one triple:
/// adjunction, both closure inequalities, both triple-composition identities,
/// S turning meets into meets and J turning joins into joins.  For a
/// surjective cocycle, J o S must be the identity on ideals.
inline ConnexionReport verify_connexion(const Triple& t, const IdealLattice& lattice,
                                        bool crosscheck_j = true) {
  auto lams = lambda_lattice(t);
  std::vector<Subgroup> js, ss;
  js.reserve(lams.size());
  for (const auto& lam : lams)
    js.push_back(j_operator(t, lam, crosscheck_j ? &lattice : nullptr));
  ss.reserve(lattice.ideals.size());
  for (const auto& a : lattice.ideals) ss.push_back(s_operator(t, a));

  for (std::size_t i = 0; i < lams.size(); ++i)
    for (std::size_t k = 0; k < lattice.ideals.size(); ++k) {
      bool left = subgroup_leq(js[i], lattice.ideals[k]);
      bool right = subgroup_leq(lams[i], ss[k]);
      if (left != right) fatal_disagreement("adjunction law failed");
    }
  for (std::size_t i = 0; i < lams.size(); ++i) {
    if (!subgroup_leq(lams[i], s_operator(t, js[i])))
      fatal_disagreement("unit of the adjunction failed");
    Subgroup jsj = j_operator(t, s_operator(t, js[i]), nullptr);
    if (!(jsj == js[i])) fatal_disagreement("J S J = J failed");
  }
  bool js_id = true;
  for (std::size_t k = 0; k < lattice.ideals.size(); ++k) {
    Subgroup js = j_operator(t, ss[k], nullptr);
    if (!subgroup_leq(js, lattice.ideals[k]))
      fatal_disagreement("counit of the adjunction failed");
    if (!(js == lattice.ideals[k])) js_id = false;
    if (!(s_operator(t, js) == ss[k])) fatal_disagreement("S J S = S failed");
  }
  // S of a meet is the meet of the S's; J of a join is the join of the J's.
  for (std::size_t k = 0; k < lattice.ideals.size(); ++k)
    for (std::size_t l = k + 1; l < lattice.ideals.size(); ++l) {
      Subgroup m = intersect(t.g(), lattice.ideals[k], lattice.ideals[l]);
      if (!(s_operator(t, m) == intersect(t.gamma(), ss[k], ss[l])))
        fatal_disagreement("S does not preserve meets");
    }
  for (std::size_t i = 0; i < lams.size(); ++i)
    for (std::size_t k = i + 1; k < lams.size(); ++k) {
      Subgroup u = join(t.gamma(), lams[i], lams[k]);
      Subgroup lhs = j_operator(t, u, nullptr);
      Subgroup rhs = join(t.g(), js[i], js[k]);
      // the subgroup join of two ideals is already their ideal join
      if (!is_ideal(*t.ctx, rhs)) fatal_disagreement("join of ideals is not an ideal");
      if (!(lhs == rhs)) fatal_disagreement("J does not preserve joins");
    }

  if (is_surjective(t) && !js_id)
    fatal_disagreement("surjective cocycle but J S is not the identity");

  ConnexionReport r;
  r.lambdas = static_cast<int>(lams.size());
  r.ideals = static_cast<int>(lattice.ideals.size());
  r.js_identity_on_ideals = js_id;
  return r;
}

}  // namespace cogalois
