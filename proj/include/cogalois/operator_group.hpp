#pragma once

#include <map>
#include <string>
#include <vector>

#include "cogalois/group.hpp"

namespace cogalois {

// ---------------------------------------------------------------------------
// GroupAction / GammaGroup: a finite group Gamma acting on a finite group G
// by automorphisms, i.e. a homomorphism Gamma -> Aut(G) given row by row.
// ---------------------------------------------------------------------------

struct GroupAction {
  int gamma_order = 0;
  int g_order = 0;
  std::vector<elt> act;  // gamma_order x g_order, row-major

  elt apply(elt gamma, elt x) const {
    return act[static_cast<std::size_t>(gamma) * g_order + x];
  }
  const elt* row(elt gamma) const {
    return act.data() + static_cast<std::size_t>(gamma) * g_order;
  }
};

struct GammaGroup {
  FiniteGroup gamma;
  FiniteGroup g;
  GroupAction action;
  Subgroup fix;  // elements of g fixed by every operator

  elt act(elt gm, elt x) const { return action.apply(gm, x); }
};

/// Kernel of the action: operators acting as the identity automorphism.
inline Subgroup action_kernel(const GammaGroup& gg) {
  std::vector<elt> m;
  for (elt gm = 0; gm < gg.gamma.order(); ++gm) {
    bool id = true;
    for (elt x = 0; x < gg.g.order() && id; ++x) id = gg.act(gm, x) == x;
    if (id) m.push_back(gm);
  }
  return subgroup_from_members(gg.gamma, std::move(m));
}

/// Validates that every row is an automorphism of g (NotAutomorphism, naming
/// the operator) and that rows compose along gamma's multiplication
/// (NotAnAction, naming the first violating pair), then assembles the
/// GammaGroup with its fixed-point subgroup.
inline GammaGroup make_gamma_group(FiniteGroup gamma, FiniteGroup g,
                                   std::vector<std::vector<elt>> action_rows) {
  require(static_cast<int>(action_rows.size()) == gamma.order(), "BadParameters",
          "action needs one row per operator");
  GroupAction A;
  A.gamma_order = gamma.order();
  A.g_order = g.order();
  A.act.reserve(static_cast<std::size_t>(gamma.order()) * g.order());
  for (elt gm = 0; gm < gamma.order(); ++gm) {
    const auto& row = action_rows[gm];
    require(static_cast<int>(row.size()) == g.order(), "BadParameters",
            "action row " + std::to_string(gm) + " has wrong length");
    std::vector<char> seen(g.order(), 0);
    for (elt v : row) {
      require(v >= 0 && v < g.order(), "BadParameters", "action value out of range");
      if (seen[v])
        fail("NotAutomorphism",
             "operator " + std::to_string(gm) + " is not a bijection of the group");
      seen[v] = 1;
    }
    for (elt a = 0; a < g.order(); ++a)
      for (elt b = 0; b < g.order(); ++b)
        if (row[g.mul(a, b)] != g.mul(row[a], row[b]))
          fail("NotAutomorphism", "operator " + std::to_string(gm) +
                                      " does not respect the product at (" +
                                      std::to_string(a) + "," + std::to_string(b) + ")");
    A.act.insert(A.act.end(), row.begin(), row.end());
  }
  for (elt x = 0; x < g.order(); ++x)
    if (A.apply(0, x) != x)
      fail("NotAnAction", "identity operator must act trivially");
  for (elt s = 0; s < gamma.order(); ++s)
    for (elt t = 0; t < gamma.order(); ++t) {
      elt st = gamma.mul(s, t);
      for (elt x = 0; x < g.order(); ++x)
        if (A.apply(st, x) != A.apply(s, A.apply(t, x)))
          fail("NotAnAction", "rows fail to compose at operators (" +
                                  std::to_string(s) + "," + std::to_string(t) + ")");
    }
  GammaGroup gg;
  gg.gamma = std::move(gamma);
  gg.g = std::move(g);
  gg.action = std::move(A);
  std::vector<elt> fixed;
  for (elt x = 0; x < gg.g.order(); ++x) {
    bool f = true;
    for (elt gm = 0; gm < gg.gamma.order() && f; ++gm) f = gg.act(gm, x) == x;
    if (f) fixed.push_back(x);
  }
  gg.fix = subgroup_from_members(gg.g, std::move(fixed));
  if (!is_subgroup(gg.g, gg.fix))
    fatal_disagreement("fixed points failed to form a subgroup");
  return gg;
}

inline GammaGroup trivial_action(FiniteGroup gamma, FiniteGroup g) {
  std::vector<elt> id(g.order());
  for (elt x = 0; x < g.order(); ++x) id[x] = x;
  std::vector<std::vector<elt>> rows(gamma.order(), id);
  return make_gamma_group(std::move(gamma), std::move(g), std::move(rows));
}

/// G acting on itself by conjugation.
inline GammaGroup inner_action(const FiniteGroup& G) {
  std::vector<std::vector<elt>> rows(G.order(), std::vector<elt>(G.order()));
  for (elt gm = 0; gm < G.order(); ++gm)
    for (elt x = 0; x < G.order(); ++x) rows[gm][x] = G.conj(gm, x);
  return make_gamma_group(G, G, std::move(rows));
}

// ---------------------------------------------------------------------------
// Enumerating actions
// ---------------------------------------------------------------------------

/// All actions of gamma on g, i.e. all homomorphisms gamma -> Aut(g),
/// enumerated by backtracking over a greedy generating set of gamma.  Guarded
/// by a candidate bound since Aut(g) can explode.
inline std::vector<GammaGroup> all_actions(const FiniteGroup& gamma, const FiniteGroup& g,
                                           std::size_t max_auts = 20000) {
  auto auts = automorphisms(g);
  require(auts.size() <= max_auts, "BoundExceeded",
          "automorphism group too large for exhaustive action enumeration");
  std::map<std::vector<elt>, int> index;
  for (std::size_t i = 0; i < auts.size(); ++i) index[auts[i]] = static_cast<int>(i);
  auto compose = [&](int f, int h) {  // (f o h)(x) = f(h(x))
    std::vector<elt> c(g.order());
    for (elt x = 0; x < g.order(); ++x) c[x] = auts[f][auts[h][x]];
    auto it = index.find(c);
    if (it == index.end()) fatal_disagreement("automorphism set not closed");
    return it->second;
  };

  auto gens = greedy_generators(gamma);
  std::vector<std::vector<elt>> chain;
  {
    std::vector<elt> prefix;
    for (elt s : gens) {
      prefix.push_back(s);
      chain.push_back(detail::flat_closure(gamma.table(), gamma.order(), prefix));
    }
  }
  std::vector<GammaGroup> out;
  std::vector<int> assign(gamma.order(), -1);  // operator -> automorphism index

  // Extends generator images over the subgroup `domain`; domain is generated
  // by gens[0..k-1], so BFS over right-multiplication covers it.
  auto extend = [&](const std::vector<elt>& domain, int k,
                    const std::vector<int>& imgs) -> bool {
    std::fill(assign.begin(), assign.end(), -1);
    // the identity permutation is the lexicographic minimum, so it sorts to 0
    assign[0] = 0;
    for (int i = 0; i < k; ++i) {
      if (assign[gens[i]] >= 0 && assign[gens[i]] != imgs[i]) return false;
      assign[gens[i]] = imgs[i];
    }
    std::vector<elt> work{0};
    for (int i = 0; i < k; ++i)
      if (gens[i] != 0) work.push_back(gens[i]);
    std::size_t head = 0;
    while (head < work.size()) {
      elt a = work[head++];
      for (int i = 0; i < k; ++i) {
        elt b = gamma.mul(a, gens[i]);
        int v = compose(assign[a], imgs[i]);
        if (assign[b] < 0) {
          assign[b] = v;
          work.push_back(b);
        } else if (assign[b] != v) {
          return false;
        }
      }
    }
    return work.size() >= domain.size();
  };

  std::vector<int> imgs(gens.size(), -1);
  std::vector<std::vector<int>> cand(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    int d = gamma.element_order(gens[i]);
    for (std::size_t a = 0; a < auts.size(); ++a) {
      // order of the automorphism must divide the operator's order
      int o = 1;
      int cur = static_cast<int>(a);
      while (cur != 0) {
        cur = compose(cur, static_cast<int>(a));
        ++o;
      }
      if (d % o == 0) cand[i].push_back(static_cast<int>(a));
    }
  }

  std::vector<std::size_t> pos(gens.size(), 0);
  std::size_t depth = 0;
  if (gens.empty()) {
    out.push_back(trivial_action(gamma, g));
    return out;
  }
  for (;;) {
    if (pos[depth] == cand[depth].size()) {
      if (depth == 0) break;
      pos[depth] = 0;
      imgs[depth] = -1;
      --depth;
      ++pos[depth];
      continue;
    }
    imgs[depth] = cand[depth][pos[depth]];
    std::vector<int> prefix(imgs.begin(), imgs.begin() + depth + 1);
    if (extend(chain[depth], static_cast<int>(depth) + 1, prefix)) {
      if (depth + 1 == gens.size()) {
        std::vector<std::vector<elt>> rows(gamma.order());
        for (elt gm = 0; gm < gamma.order(); ++gm) rows[gm] = auts[assign[gm]];
        out.push_back(make_gamma_group(gamma, g, std::move(rows)));
        ++pos[depth];
      } else {
        ++depth;
      }
    } else {
      ++pos[depth];
    }
  }
  return out;
}

/// Exponent of a group (lcm of element orders).
inline int group_exponent(const FiniteGroup& g) {
  std::int64_t e = 1;
  for (elt x = 0; x < g.order(); ++x) {
    std::int64_t o = g.element_order(x);
    e = e / gcd_i64(e, o) * o;
  }
  return static_cast<int>(e);
}

/// x -> c*x in an abelian group written multiplicatively (c-fold product).
inline std::vector<elt> scalar_map(const FiniteGroup& g, int c) {
  std::vector<elt> m(g.order());
  for (elt x = 0; x < g.order(); ++x) {
    elt y = 0;
    for (int i = 0; i < c; ++i) y = g.mul(y, x);
    m[x] = y;
  }
  return m;
}

/// All actions of gamma on abelian g that factor through a character
/// chi: gamma -> (Z/k)^* with k the exponent of g, the operator gm acting as
/// x -> chi(gm)*x.  Returns pairs (GammaGroup, chi values per operator).
struct CharacterAction {
  GammaGroup gg;
  std::vector<int> chi;  // operator -> unit mod k
  int k = 0;
};

inline std::vector<CharacterAction> character_actions(const FiniteGroup& gamma,
                                                      const FiniteGroup& g) {
  require(g.abelian(), "NotAbelian", "character actions need an abelian module");
  int k = group_exponent(g);
  std::vector<int> units;
  for (int u = 1; u < k || (k == 1 && u == 1); ++u)
    if (gcd_i64(u, k) == 1) units.push_back(u % k);
  if (k == 1) units = {0};  // the zero ring's unit; chi is trivial
  // Unit group of Z/k as a table group, units sorted with 1 first.
  std::sort(units.begin(), units.end(), [k](int a, int b) {
    int aa = (a - 1 % k + k) % k, bb = (b - 1 % k + k) % k;  // rotate so 1 leads
    return aa < bb;
  });
  int m = static_cast<int>(units.size());
  std::vector<int> pos(k == 0 ? 1 : k, -1);
  for (int i = 0; i < m; ++i) pos[units[i]] = i;
  std::vector<elt> t(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      t[static_cast<std::size_t>(i) * m + j] =
          pos[k == 1 ? 0 : static_cast<int>(std::int64_t(units[i]) * units[j] % k)];
  FiniteGroup U = make_group_flat(m, std::move(t), "U" + std::to_string(k));

  std::vector<std::vector<elt>> mult(m);
  for (int i = 0; i < m; ++i) mult[i] = scalar_map(g, k == 1 ? 1 : units[i]);

  std::vector<CharacterAction> out;
  for (const auto& hom : all_homomorphisms(gamma, U)) {
    std::vector<std::vector<elt>> rows(gamma.order());
    std::vector<int> chi(gamma.order());
    for (elt gm = 0; gm < gamma.order(); ++gm) {
      rows[gm] = mult[hom[gm]];
      chi[gm] = k == 1 ? 1 : units[hom[gm]];
    }
    CharacterAction ca;
    ca.gg = make_gamma_group(gamma, g, std::move(rows));
    ca.chi = std::move(chi);
    ca.k = k;
    out.push_back(std::move(ca));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ideals: operator-invariant normal subgroups.  They form a bounded modular
// lattice under intersection and generated join.
// ---------------------------------------------------------------------------

inline bool is_invariant(const GammaGroup& gg, const Subgroup& s) {
  for (elt gm = 0; gm < gg.gamma.order(); ++gm)
    for (elt x : s.members)
      if (!s.contains(gg.act(gm, x))) return false;
  return true;
}

inline bool is_ideal(const GammaGroup& gg, const Subgroup& s) {
  return is_subgroup(gg.g, s) && is_normal(gg.g, s) && is_invariant(gg, s);
}

struct IdealLattice {
  std::vector<Subgroup> ideals;  // sorted lexicographically by member list

  int find(const Subgroup& s) const {
    for (std::size_t i = 0; i < ideals.size(); ++i)
      if (ideals[i].members == s.members) return static_cast<int>(i);
    return -1;
  }
};

/// All ideals of the operator group.  Bottom {1} and top G are always
/// present.  Checks the modular law on the lattice when it has <= 64 nodes.
inline IdealLattice all_ideals(const GammaGroup& gg, int bound = 1024) {
  IdealLattice L;
  for (const auto& s : all_subgroups(gg.g, nullptr, bound))
    if (is_normal(gg.g, s) && is_invariant(gg, s)) L.ideals.push_back(s);
  if (static_cast<int>(L.ideals.size()) <= 64) {
    const auto& G = gg.g;
    for (const auto& a : L.ideals)
      for (const auto& b : L.ideals)
        for (const auto& c : L.ideals) {
          if (!subgroup_leq(a, c)) continue;
          Subgroup lhs = join(G, a, intersect(G, b, c));
          Subgroup rhs = intersect(G, join(G, a, b), c);
          if (!(lhs == rhs)) fatal_disagreement("ideal lattice is not modular");
        }
  }
  return L;
}

// ---------------------------------------------------------------------------
// Semidirect product E = G x| Gamma, pair (x, gm) coded as x*|Gamma| + gm,
// with (x, s)(y, t) = (x * s(y), s t).
// ---------------------------------------------------------------------------

struct SemidirectData {
  FiniteGroup e;
  std::vector<elt> proj;     // E -> Gamma, (x, gm) -> gm
  std::vector<elt> s1;       // Gamma -> E, gm -> (1, gm)
  std::vector<elt> embed_g;  // G -> E, x -> (x, 1)
};

inline SemidirectData semidirect(const GammaGroup& gg) {
  int ng = gg.gamma.order(), nx = gg.g.order();
  int n = ng * nx;
  std::vector<elt> t(static_cast<std::size_t>(n) * n);
  auto code = [ng](elt x, elt gm) { return x * ng + gm; };
  for (elt x = 0; x < nx; ++x)
    for (elt s = 0; s < ng; ++s)
      for (elt y = 0; y < nx; ++y)
        for (elt u = 0; u < ng; ++u)
          t[static_cast<std::size_t>(code(x, s)) * n + code(y, u)] =
              code(gg.g.mul(x, gg.act(s, y)), gg.gamma.mul(s, u));
  SemidirectData d;
  d.e = make_group_flat(n, std::move(t));
  d.proj.resize(n);
  for (elt x = 0; x < nx; ++x)
    for (elt s = 0; s < ng; ++s) d.proj[code(x, s)] = s;
  d.s1.resize(ng);
  for (elt s = 0; s < ng; ++s) d.s1[s] = code(0, s);
  d.embed_g.resize(nx);
  for (elt x = 0; x < nx; ++x) d.embed_g[x] = code(x, 0);
  // The action is recovered by conjugating the normal copy of G with the
  // canonical section: s1(gm) (x,1) s1(gm)^-1 = (gm*x, 1).
  for (elt s = 0; s < ng; ++s)
    for (elt x = 0; x < nx; ++x)
      if (d.e.conj(d.s1[s], d.embed_g[x]) != d.embed_g[gg.act(s, x)])
        fatal_disagreement("semidirect conjugation does not recover the action");
  if (!is_homomorphism(gg.gamma, d.e, d.s1) ||
      !is_homomorphism(d.e, gg.gamma, d.proj))
    fatal_disagreement("semidirect projection/section failed");
  return d;
}

// ---------------------------------------------------------------------------
// Quotient operator groups
// ---------------------------------------------------------------------------

struct GammaQuotient {
  GammaGroup gg;              // Gamma acting on G/a
  QuotientData q;             // coset data for G -> G/a
};

/// G/a with the induced action, a an ideal.  Representatives are the least
/// member of each coset.
inline GammaQuotient quotient_gamma(const GammaGroup& gg, const Subgroup& a) {
  require(is_ideal(gg, a), "NotAnIdeal", "quotient_gamma needs an ideal");
  QuotientData q = quotient(gg.g, a);
  int k = q.group.order();
  std::vector<std::vector<elt>> rows(gg.gamma.order(), std::vector<elt>(k));
  for (elt gm = 0; gm < gg.gamma.order(); ++gm)
    for (int c = 0; c < k; ++c) rows[gm][c] = q.coset_of[gg.act(gm, q.reps[c])];
  GammaQuotient out;
  out.gg = make_gamma_group(gg.gamma, q.group, std::move(rows));
  out.q = std::move(q);
  return out;
}

}  // namespace cogalois
