#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <utility>
#include <vector>

#include "cogalois/operator_group.hpp"

namespace cogalois {

// ---------------------------------------------------------------------------
// A crossed homomorphism ("cocycle") eta: Gamma -> G for an operator group,
// satisfying eta(s t) = eta(s) * s(eta(t)).  A Triple bundles the operator
// group with one cocycle plus the kernels that drive everything else:
//   delta        = eta^{-1}(1)
//   delta_prime  = kernel of the action
//   delta_tilde  = delta intersect delta_prime
// ---------------------------------------------------------------------------

struct Triple {
  std::shared_ptr<const GammaGroup> ctx;
  std::vector<elt> eta;
  Subgroup delta, delta_prime, delta_tilde;
  bool generating = false;

  const FiniteGroup& gamma() const { return ctx->gamma; }
  const FiniteGroup& g() const { return ctx->g; }
  elt act(elt gm, elt x) const { return ctx->act(gm, x); }
  const Subgroup& fix() const { return ctx->fix; }
};

/// First cocycle-law violation, or (-1,-1) if the map is a cocycle.
inline std::pair<elt, elt> cocycle_violation(const GammaGroup& gg,
                                             const std::vector<elt>& eta) {
  for (elt s = 0; s < gg.gamma.order(); ++s)
    for (elt t = 0; t < gg.gamma.order(); ++t)
      if (eta[gg.gamma.mul(s, t)] != gg.g.mul(eta[s], gg.act(s, eta[t])))
        return {s, t};
  return {-1, -1};
}

inline bool is_cocycle(const GammaGroup& gg, const std::vector<elt>& eta) {
  return cocycle_violation(gg, eta) == std::pair<elt, elt>{-1, -1};
}

inline Triple make_triple(std::shared_ptr<const GammaGroup> gg, std::vector<elt> eta) {
  require(static_cast<int>(eta.size()) == gg->gamma.order(), "BadParameters",
          "cocycle needs one value per operator");
  for (elt v : eta)
    require(v >= 0 && v < gg->g.order(), "BadParameters", "cocycle value out of range");
  auto bad = cocycle_violation(*gg, eta);
  if (bad.first >= 0)
    fail("CocycleLawViolated", "law fails at operators (" + std::to_string(bad.first) +
                                   "," + std::to_string(bad.second) + ")");
  Triple t;
  t.ctx = std::move(gg);
  t.eta = std::move(eta);
  const auto& gg2 = *t.ctx;
  if (t.eta[0] != 0) fatal_disagreement("cocycle law passed but eta(1) != 1");
  // eta(s^-1) = s^-1(eta(s)^-1) is forced by the law; keep it as an assertion.
  for (elt s = 0; s < gg2.gamma.order(); ++s) {
    elt si = gg2.gamma.inv(s);
    if (t.eta[si] != gg2.act(si, gg2.g.inv(t.eta[s])))
      fatal_disagreement("cocycle inverse identity failed");
  }
  std::vector<elt> dm;
  for (elt s = 0; s < gg2.gamma.order(); ++s)
    if (t.eta[s] == 0) dm.push_back(s);
  t.delta = subgroup_from_members(gg2.gamma, std::move(dm));
  if (!is_subgroup(gg2.gamma, t.delta))
    fatal_disagreement("cocycle kernel is not a subgroup");
  t.delta_prime = action_kernel(*t.ctx);
  t.delta_tilde = intersect(gg2.gamma, t.delta, t.delta_prime);
  if (!is_normal(gg2.gamma, t.delta_tilde))
    fatal_disagreement("delta_tilde is not normal");
  std::vector<elt> vals(t.eta.begin(), t.eta.end());
  auto clo = detail::flat_closure(gg2.g.table(), gg2.g.order(), vals);
  t.generating = static_cast<int>(clo.size()) == gg2.g.order();
  return t;
}

inline Triple make_triple(const GammaGroup& gg, std::vector<elt> eta) {
  return make_triple(std::make_shared<const GammaGroup>(gg), std::move(eta));
}

// ---------------------------------------------------------------------------
// Enumeration.  Backtracking over a greedy generating set of Gamma: the law
// eta(a g) = eta(a) * a(eta(g)) propagates values along right-multiplication
// edges, and by induction on word length those edge constraints already imply
// the full law.  The full O(|Gamma|^2) law is still re-validated on every
// leaf, and for tiny search spaces the list is cross-checked against a plain
// brute-force filter over all maps.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<std::vector<elt>> enumerate_cocycles_dfs(const GammaGroup& gg) {
  const FiniteGroup& gamma = gg.gamma;
  const FiniteGroup& g = gg.g;
  std::vector<std::vector<elt>> out;
  auto gens = greedy_generators(gamma);
  if (gens.empty()) {
    out.push_back(std::vector<elt>{0});
    return out;
  }
  std::vector<std::vector<elt>> chain;
  {
    std::vector<elt> prefix;
    for (elt s : gens) {
      prefix.push_back(s);
      chain.push_back(flat_closure(gamma.table(), gamma.order(), prefix));
    }
  }
  int n = gamma.order();
  // vals[d] = assignment known after placing gens[0..d]
  std::vector<std::vector<elt>> vals(gens.size(), std::vector<elt>(n, -1));
  std::vector<elt> base(n, -1);
  base[0] = 0;
  std::vector<elt> work;
  work.reserve(n);

  auto extend = [&](int d) -> bool {
    // vals[d] starts as parent assignment plus the new generator image
    std::vector<elt>& v = vals[d];
    work.clear();
    for (elt a = 0; a < n; ++a)
      if (v[a] >= 0) work.push_back(a);
    std::size_t head = 0;
    while (head < work.size()) {
      elt a = work[head++];
      for (int j = 0; j <= d; ++j) {
        elt b = gamma.mul(a, gens[j]);
        elt need = g.mul(v[a], gg.act(a, v[gens[j]]));
        if (v[b] < 0) {
          v[b] = need;
          work.push_back(b);
        } else if (v[b] != need) {
          return false;
        }
      }
    }
    if (work.size() != chain[d].size())
      fatal_disagreement("cocycle propagation missed part of the subgroup");
    return true;
  };

  std::vector<elt> img(gens.size(), 0);
  int depth = 0;
  img[0] = 0;
  for (;;) {
    if (img[depth] == g.order()) {
      if (depth == 0) break;
      --depth;
      ++img[depth];
      continue;
    }
    vals[depth] = depth == 0 ? base : vals[depth - 1];
    elt s = gens[depth];
    if (vals[depth][s] >= 0 && vals[depth][s] != img[depth]) {
      ++img[depth];
      continue;
    }
    vals[depth][s] = img[depth];
    if (extend(depth)) {
      if (depth + 1 == static_cast<int>(gens.size())) {
        if (cocycle_violation(gg, vals[depth]).first >= 0)
          fatal_disagreement("propagated assignment fails the full law");
        out.push_back(vals[depth]);
        ++img[depth];
      } else {
        ++depth;
        img[depth] = 0;
      }
    } else {
      ++img[depth];
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::vector<elt>> enumerate_cocycles_brute(const GammaGroup& gg) {
  int n = gg.gamma.order(), m = gg.g.order();
  std::vector<std::vector<elt>> out;
  std::vector<elt> v(n, 0);
  for (;;) {
    if (is_cocycle(gg, v)) out.push_back(v);
    int i = 1;
    while (i < n && v[i] == m - 1) v[i++] = 0;
    if (i == n) break;
    ++v[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// All cocycles of the operator group, sorted lexicographically by value
/// vector.  When generating_only is set, only those whose values generate G.
inline std::vector<std::vector<elt>> enumerate_cocycles(const GammaGroup& gg,
                                                        bool generating_only = false) {
  auto out = detail::enumerate_cocycles_dfs(gg);
  // Cross-check against the naive filter whenever that stays tiny.
  double space = 1;
  for (int i = 1; i < gg.gamma.order() && space <= 4096; ++i) space *= gg.g.order();
  if (space <= 4096) {
    if (out != detail::enumerate_cocycles_brute(gg))
      fatal_disagreement("cocycle enumeration routes disagree");
  }
  if (generating_only) {
    std::vector<std::vector<elt>> keep;
    for (auto& v : out) {
      auto clo = detail::flat_closure(gg.g.table(), gg.g.order(), v);
      if (static_cast<int>(clo.size()) == gg.g.order()) keep.push_back(std::move(v));
    }
    out = std::move(keep);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Coboundaries
// ---------------------------------------------------------------------------

/// The coboundary of x: s -> x^-1 * s(x).  This order satisfies the cocycle
/// law for any module; only the set of coboundaries being a group needs the
/// module to be abelian.
inline std::vector<elt> coboundary(const GammaGroup& gg, elt x) {
  std::vector<elt> v(gg.gamma.order());
  for (elt s = 0; s < gg.gamma.order(); ++s)
    v[s] = gg.g.mul(gg.g.inv(x), gg.act(s, x));
  return v;
}

inline std::vector<std::vector<elt>> all_coboundaries(const GammaGroup& gg) {
  std::set<std::vector<elt>> out;
  for (elt x = 0; x < gg.g.order(); ++x) out.insert(coboundary(gg, x));
  return {out.begin(), out.end()};
}

/// For the conjugation action of G on itself, s -> [x, s] = x s x^-1 s^-1 is
/// a cocycle (the inner coboundary of x).
inline std::vector<elt> inner_cocycle(const FiniteGroup& G, elt x) {
  std::vector<elt> v(G.order());
  for (elt s = 0; s < G.order(); ++s) v[s] = G.mul(G.conj(x, s), G.inv(s));
  return v;
}

// ---------------------------------------------------------------------------
// Kernel invariants of a generating cocycle
// ---------------------------------------------------------------------------

struct KernelInvariants {
  Subgroup delta;         // eta^{-1}(1)
  Subgroup delta_prime;   // kernel of the action
  Subgroup delta_second;  // { s : g(eta(s)) = eta(g s g^-1) for all g }
  Subgroup delta_bar;     // delta_prime intersect delta_second
  Subgroup delta_tilde;   // delta intersect delta_prime
};

/// Computes the kernel tower of a generating cocycle and verifies the
/// structural identities it satisfies:
///   - delta_second is a normal subgroup, delta_bar and delta_tilde too;
///   - delta_tilde equals the normal core of delta;
///   - eta(delta_bar) is a central ideal and eta restricted to delta_bar is a
///     homomorphism with kernel delta_tilde;
///   - delta_bar = delta_prime intersect eta^{-1}(center);
///   - for abelian G, delta_bar = delta_prime.
inline KernelInvariants kernel_invariants(const Triple& t) {
  require(t.generating, "NotGenerating", "kernel invariants need a generating cocycle");
  const auto& gamma = t.gamma();
  const auto& g = t.g();
  KernelInvariants k;
  k.delta = t.delta;
  k.delta_prime = t.delta_prime;
  k.delta_tilde = t.delta_tilde;

  std::vector<elt> ds;
  for (elt s = 0; s < gamma.order(); ++s) {
    bool ok = true;
    for (elt gm = 0; gm < gamma.order() && ok; ++gm)
      ok = t.act(gm, t.eta[s]) == t.eta[gamma.conj(gm, s)];
    if (ok) ds.push_back(s);
  }
  k.delta_second = subgroup_from_members(gamma, std::move(ds));
  if (!is_subgroup(gamma, k.delta_second) || !is_normal(gamma, k.delta_second))
    fatal_disagreement("delta_second is not a normal subgroup");
  k.delta_bar = intersect(gamma, k.delta_prime, k.delta_second);
  if (!is_normal(gamma, k.delta_bar)) fatal_disagreement("delta_bar is not normal");
  if (!subgroup_leq(k.delta_tilde, k.delta_bar))
    fatal_disagreement("delta_tilde not contained in delta_bar");

  // Normal core of delta equals delta_tilde for generating cocycles.
  std::vector<elt> core;
  for (elt s : k.delta.members) {
    bool ok = true;
    for (elt gm = 0; gm < gamma.order() && ok; ++gm)
      ok = k.delta.contains(gamma.conj(gm, s));
    if (ok) core.push_back(s);
  }
  if (subgroup_from_members(gamma, std::move(core)).members != k.delta_tilde.members)
    fatal_disagreement("normal core of delta differs from delta_tilde");

  Subgroup cent = center(g);
  // delta_bar = delta_prime intersect eta^{-1}(center)
  for (elt s : k.delta_prime.members) {
    bool central = cent.contains(t.eta[s]);
    if (central != k.delta_bar.contains(s))
      fatal_disagreement("delta_bar differs from delta_prime cap eta^{-1}(center)");
  }
  if (g.abelian() && !(k.delta_bar.members == k.delta_prime.members))
    fatal_disagreement("abelian module but delta_bar != delta_prime");

  // eta restricted to delta_bar is a homomorphism with kernel delta_tilde and
  // central ideal image.
  std::set<elt> img;
  for (elt s : k.delta_bar.members) {
    img.insert(t.eta[s]);
    for (elt u : k.delta_bar.members)
      if (t.eta[gamma.mul(s, u)] != g.mul(t.eta[s], t.eta[u]))
        fatal_disagreement("eta is not multiplicative on delta_bar");
  }
  Subgroup image = subgroup_from_members(g, {img.begin(), img.end()});
  if (!is_subgroup(g, image)) fatal_disagreement("eta(delta_bar) is not a subgroup");
  for (elt x : image.members)
    if (!cent.contains(x)) fatal_disagreement("eta(delta_bar) is not central");
  if (!is_ideal(*t.ctx, image)) fatal_disagreement("eta(delta_bar) is not an ideal");
  if (image.size() * k.delta_tilde.size() != k.delta_bar.size())
    fatal_disagreement("eta(delta_bar) has the wrong order");
  return k;
}

// ---------------------------------------------------------------------------
// Normalization: factor out delta_tilde.  Every cocycle is constant on left
// cosets of delta_tilde and the action descends, so the triple induces one on
// Gamma/delta_tilde with trivial delta_tilde.
// ---------------------------------------------------------------------------

struct NormalizedTriple {
  Triple t;        // on Gamma/delta_tilde
  QuotientData q;  // cosets of delta_tilde in Gamma
};

inline NormalizedTriple normalize(const Triple& t) {
  const auto& gamma = t.gamma();
  QuotientData q = quotient(gamma, t.delta_tilde);
  int k = q.group.order();
  std::vector<std::vector<elt>> rows(k, std::vector<elt>(t.g().order()));
  std::vector<elt> eta(k);
  for (int c = 0; c < k; ++c) {
    for (elt x = 0; x < t.g().order(); ++x) rows[c][x] = t.act(q.reps[c], x);
    eta[c] = t.eta[q.reps[c]];
  }
  // Well-definedness: all members of a coset agree on both the action and eta.
  for (elt s = 0; s < gamma.order(); ++s) {
    int c = q.coset_of[s];
    if (t.eta[s] != eta[c]) fatal_disagreement("eta is not constant on cosets");
    for (elt x = 0; x < t.g().order(); ++x)
      if (t.act(s, x) != rows[c][x])
        fatal_disagreement("action is not constant on cosets");
  }
  NormalizedTriple out;
  out.t = make_triple(make_gamma_group(q.group, t.g(), std::move(rows)), std::move(eta));
  out.q = std::move(q);
  if (out.t.delta_tilde.size() != 1)
    fatal_disagreement("normalized triple still has nontrivial delta_tilde");
  if (out.t.generating != t.generating)
    fatal_disagreement("normalization changed the generating property");
  return out;
}

// ---------------------------------------------------------------------------
// Induced cocycle on G/a for an ideal a
// ---------------------------------------------------------------------------

struct InducedTriple {
  Triple t;        // Gamma acting on G/a with eta_a = (coset map) o eta
  QuotientData q;  // cosets of a in G
};

inline InducedTriple induced_cocycle(const Triple& t, const Subgroup& a) {
  GammaQuotient gq = quotient_gamma(*t.ctx, a);
  std::vector<elt> eta(t.gamma().order());
  for (elt s = 0; s < t.gamma().order(); ++s) eta[s] = gq.q.coset_of[t.eta[s]];
  InducedTriple out;
  out.t = make_triple(std::move(gq.gg), std::move(eta));
  out.q = std::move(gq.q);
  // kernel of eta_a is exactly the preimage eta^{-1}(a)
  for (elt s = 0; s < t.gamma().order(); ++s)
    if ((out.t.eta[s] == 0) != a.contains(t.eta[s]))
      fatal_disagreement("kernel of induced cocycle is not the preimage");
  if (t.generating && !out.t.generating)
    fatal_disagreement("induced cocycle of a generating cocycle must generate");
  return out;
}

// ---------------------------------------------------------------------------
// The twisted section of the semidirect product and surjectivity witnesses
// ---------------------------------------------------------------------------

/// s2(s) = (eta(s), s) is a homomorphism Gamma -> E precisely because eta is
/// a cocycle.  Returns the section and checks s1(Gamma) cap s2(Gamma) is the
/// common image of delta under both sections.
inline std::vector<elt> twisted_section(const Triple& t, const SemidirectData& d) {
  int ng = t.gamma().order();
  std::vector<elt> s2(ng);
  for (elt s = 0; s < ng; ++s) s2[s] = t.eta[s] * ng + s;
  if (!is_homomorphism(t.gamma(), d.e, s2))
    fatal_disagreement("twisted section is not a homomorphism");
  std::set<elt> g1(d.s1.begin(), d.s1.end());
  std::set<elt> g2(s2.begin(), s2.end());
  std::set<elt> want;
  for (elt s : t.delta.members) want.insert(d.s1[s]);
  std::set<elt> got;
  for (elt e : g1)
    if (g2.count(e)) got.insert(e);
  if (got != want)
    fatal_disagreement("section images intersect in more than the kernel");
  return s2;
}

struct SurjectivityReport {
  bool surjective = false;
  bool by_image = false;        // values cover G
  bool by_coset_bijection = false;  // Gamma/delta -> G injective and onto
  bool by_product = false;      // E = s1(Gamma) * s2(Gamma)
  bool by_transitivity = false; // twisted action of Gamma on G transitive
  bool by_index = false;        // (Gamma : delta) = |G|
};

/// Evaluates five independent characterizations of surjectivity and insists
/// they agree.  The optional semidirect data is reused across cocycles of the
/// same operator group.
inline SurjectivityReport is_surjective_multi(const Triple& t,
                                              const SemidirectData* cached = nullptr) {
  const auto& gamma = t.gamma();
  const auto& g = t.g();
  SurjectivityReport r;

  std::set<elt> image(t.eta.begin(), t.eta.end());
  r.by_image = static_cast<int>(image.size()) == g.order();

  // The coset map Gamma/delta -> G, s delta -> eta(s), is always injective;
  // verify that and read surjectivity off the size count.
  for (elt s = 0; s < gamma.order(); ++s)
    for (elt u = 0; u < gamma.order(); ++u) {
      bool same_value = t.eta[s] == t.eta[u];
      bool same_coset = t.delta.contains(gamma.mul(gamma.inv(u), s));
      if (same_value != same_coset)
        fatal_disagreement("coset map is not a bijection onto the image");
    }
  r.by_coset_bijection =
      gamma.order() == g.order() * t.delta.size() && static_cast<int>(image.size()) == g.order();

  SemidirectData local;
  const SemidirectData* d = cached;
  if (!d) {
    local = semidirect(*t.ctx);
    d = &local;
  }
  auto s2 = twisted_section(t, *d);
  std::vector<char> hit(d->e.order(), 0);
  int cnt = 0;
  for (elt a : d->s1)
    for (elt b : s2) {
      elt p = d->e.mul(a, b);
      if (!hit[p]) {
        hit[p] = 1;
        ++cnt;
      }
    }
  r.by_product = cnt == d->e.order();

  // Twisted action s . x = eta(s) * s(x): verify it is an action, that the
  // orbit of 1 is the image, the stabilizer of 1 is delta, then read off
  // transitivity.
  {
    std::vector<std::vector<elt>> phi(gamma.order(), std::vector<elt>(g.order()));
    for (elt s = 0; s < gamma.order(); ++s)
      for (elt x = 0; x < g.order(); ++x) phi[s][x] = g.mul(t.eta[s], t.act(s, x));
    for (elt s = 0; s < gamma.order(); ++s)
      for (elt u = 0; u < gamma.order(); ++u)
        for (elt x = 0; x < g.order(); ++x)
          if (phi[gamma.mul(s, u)][x] != phi[s][phi[u][x]])
            fatal_disagreement("twisted maps do not compose as an action");
    std::set<elt> orbit;
    std::vector<elt> stab;
    for (elt s = 0; s < gamma.order(); ++s) {
      orbit.insert(phi[s][0]);
      if (phi[s][0] == 0) stab.push_back(s);
    }
    if (orbit != image) fatal_disagreement("orbit of 1 differs from the image");
    if (stab != t.delta.members) fatal_disagreement("stabilizer of 1 differs from delta");
    r.by_transitivity = static_cast<int>(orbit.size()) == g.order();
  }

  r.by_index = gamma.order() == g.order() * t.delta.size();

  if (r.by_image != r.by_coset_bijection || r.by_image != r.by_product ||
      r.by_image != r.by_transitivity || r.by_image != r.by_index)
    fatal_disagreement("surjectivity witnesses disagree");
  r.surjective = r.by_image;
  return r;
}

/// Cheap single-route surjectivity (distinct-value count), for hot loops.
inline bool is_surjective(const Triple& t) {
  std::vector<char> seen(t.g().order(), 0);
  int cnt = 0;
  for (elt v : t.eta)
    if (!seen[v]) {
      seen[v] = 1;
      ++cnt;
    }
  return cnt == t.g().order();
}

/// Orbit count of G acting on cocycles by eta -> (x^-1 * eta(.) * .(x)); for
/// abelian G this is the order of the quotient of cocycles by coboundaries,
/// and that equality is asserted.  For nonabelian G the count is reported
/// as-is (experimental).
inline int h1_class_count(const GammaGroup& gg) {
  auto zs = enumerate_cocycles(gg);
  std::map<std::vector<elt>, int> idx;
  for (std::size_t i = 0; i < zs.size(); ++i) idx[zs[i]] = static_cast<int>(i);
  std::vector<int> comp(zs.size(), -1);
  int classes = 0;
  for (std::size_t i = 0; i < zs.size(); ++i) {
    if (comp[i] >= 0) continue;
    std::vector<std::size_t> work{i};
    comp[i] = classes;
    while (!work.empty()) {
      auto j = work.back();
      work.pop_back();
      for (elt x = 0; x < gg.g.order(); ++x) {
        std::vector<elt> tw(gg.gamma.order());
        for (elt s = 0; s < gg.gamma.order(); ++s)
          tw[s] = gg.g.mul(gg.g.inv(x), gg.g.mul(zs[j][s], gg.act(s, x)));
        auto it = idx.find(tw);
        if (it == idx.end()) fatal_disagreement("twist left the cocycle set");
        if (comp[it->second] < 0) {
          comp[it->second] = classes;
          work.push_back(static_cast<std::size_t>(it->second));
        }
      }
    }
    ++classes;
  }
  if (gg.g.abelian()) {
    auto bs = all_coboundaries(gg);
    if (zs.size() % bs.size() != 0 ||
        classes != static_cast<int>(zs.size() / bs.size()))
      fatal_disagreement("orbit count disagrees with the coboundary index");
  }
  return classes;
}

}  // namespace cogalois
