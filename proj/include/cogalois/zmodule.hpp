#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "cogalois/cocycle.hpp"

namespace cogalois {

// ---------------------------------------------------------------------------
// For an abelian module A the cocycles form a group Z1 under pointwise
// product, the coboundary map theta: A -> Z1 is a homomorphism with kernel
// the fixed points, and Gamma acts on Z1 by s.alpha = alpha * theta(alpha(s)).
// ---------------------------------------------------------------------------

struct Z1Module {
  std::shared_ptr<const GammaGroup> ctx;
  std::vector<std::vector<elt>> cocycles;  // sorted; index 0 is the zero cocycle
  FiniteGroup z1;
  std::map<std::vector<elt>, int> index;
  std::vector<elt> theta;  // A-element -> z1 index of its coboundary
  Subgroup b1;             // image of theta inside z1
  int h1 = 1;              // |Z1| / |B1|
  GroupAction act;         // the twisted Gamma-action on Z1

  elt twist(elt gm, elt alpha) const { return act.apply(gm, alpha); }
};

inline Z1Module build_z1_module(std::shared_ptr<const GammaGroup> gg) {
  require(gg->g.abelian(), "NotAbelian", "cocycle module needs an abelian module");
  Z1Module m;
  m.ctx = gg;
  m.cocycles = enumerate_cocycles(*gg);
  int n = static_cast<int>(m.cocycles.size());
  for (int i = 0; i < n; ++i) m.index[m.cocycles[i]] = i;
  std::vector<elt> table(static_cast<std::size_t>(n) * n);
  int ng = gg->gamma.order();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<elt> sum(ng);
      for (elt s = 0; s < ng; ++s)
        sum[s] = gg->g.mul(m.cocycles[i][s], m.cocycles[j][s]);
      auto it = m.index.find(sum);
      if (it == m.index.end())
        fatal_disagreement("pointwise product left the cocycle set");
      table[static_cast<std::size_t>(i) * n + j] = it->second;
    }
  m.z1 = make_group_flat(n, std::move(table), "Z1");
  if (!m.z1.abelian()) fatal_disagreement("cocycle group is not abelian");

  m.theta.resize(gg->g.order());
  for (elt x = 0; x < gg->g.order(); ++x) {
    auto it = m.index.find(coboundary(*gg, x));
    if (it == m.index.end()) fatal_disagreement("coboundary is not a cocycle");
    m.theta[x] = it->second;
    if ((m.theta[x] == 0) != gg->fix.contains(x))
      fatal_disagreement("kernel of theta differs from the fixed points");
  }
  for (elt x = 0; x < gg->g.order(); ++x)
    for (elt y = 0; y < gg->g.order(); ++y)
      if (m.theta[gg->g.mul(x, y)] != m.z1.mul(m.theta[x], m.theta[y]))
        fatal_disagreement("theta is not a homomorphism");
  std::set<elt> img(m.theta.begin(), m.theta.end());
  m.b1 = subgroup_from_members(m.z1, {img.begin(), img.end()});
  if (!is_subgroup(m.z1, m.b1)) fatal_disagreement("coboundaries do not form a subgroup");
  if (static_cast<int>(img.size()) * gg->fix.size() != gg->g.order())
    fatal_disagreement("coboundary count differs from the fixed-point index");
  if (n % m.b1.size() != 0) fatal_disagreement("coboundary subgroup order must divide");
  m.h1 = n / m.b1.size();

  // Twisted action s.alpha = alpha * theta(alpha(s)); rows are validated as
  // automorphisms composing along Gamma by the operator-group constructor,
  // and theta is checked equivariant.
  std::vector<std::vector<elt>> rows(ng, std::vector<elt>(n));
  for (elt s = 0; s < ng; ++s)
    for (int i = 0; i < n; ++i)
      rows[s][i] = m.z1.mul(i, m.theta[m.cocycles[i][s]]);
  GammaGroup za = make_gamma_group(gg->gamma, m.z1, std::move(rows));
  for (elt s = 0; s < ng; ++s)
    for (elt x = 0; x < gg->g.order(); ++x)
      if (za.act(s, m.theta[x]) != m.theta[gg->act(s, x)])
        fatal_disagreement("theta is not equivariant for the twisted action");
  m.act = std::move(za.action);
  return m;
}

// ---------------------------------------------------------------------------
// Perpendicular maps between subgroups of Gamma and subgroups of Z1
// ---------------------------------------------------------------------------

/// { alpha : alpha vanishes on lam }, a subgroup of Z1.
inline Subgroup upper_perp(const Z1Module& m, const Subgroup& lam) {
  std::vector<elt> keep;
  for (int i = 0; i < m.z1.order(); ++i) {
    bool ok = true;
    for (elt s : lam.members)
      if (m.cocycles[i][s] != 0) {
        ok = false;
        break;
      }
    if (ok) keep.push_back(i);
  }
  Subgroup s = subgroup_from_members(m.z1, std::move(keep));
  if (!is_subgroup(m.z1, s)) fatal_disagreement("perp is not a subgroup");
  return s;
}

/// { s : alpha(s) = 0 for all alpha in G }, a subgroup of Gamma.
inline Subgroup lower_perp(const Z1Module& m, const Subgroup& zsub) {
  std::vector<elt> keep;
  for (elt s = 0; s < m.ctx->gamma.order(); ++s) {
    bool ok = true;
    for (elt i : zsub.members)
      if (m.cocycles[i][s] != 0) {
        ok = false;
        break;
      }
    if (ok) keep.push_back(s);
  }
  Subgroup r = subgroup_from_members(m.ctx->gamma, std::move(keep));
  if (!is_subgroup(m.ctx->gamma, r)) fatal_disagreement("perp is not a subgroup");
  return r;
}

// ---------------------------------------------------------------------------
// The dual module: the subgroup of Hom(Z1, A) generated by the evaluation
// maps e_s(alpha) = alpha(s).  It carries two Gamma-actions
//   (first)   (s.phi)(alpha)  = s(phi(alpha))
//   (second)  (s^phi)(alpha)  = s(phi(s^-1.alpha))
// and s -> e_s is a generating cocycle for the first action.
// ---------------------------------------------------------------------------

struct DualModule {
  std::vector<std::vector<elt>> maps;  // each: z1-index -> A-element; sorted
  FiniteGroup dual;
  std::map<std::vector<elt>, int> index;
  std::vector<elt> eval;  // s -> index of e_s
  std::shared_ptr<const GammaGroup> first;   // Gamma on dual, postcomposition
  GroupAction second;
  Triple eval_triple;
  Subgroup delta_star;  // kernel of the evaluation cocycle, normal in Gamma
};

inline DualModule build_dual_module(const Z1Module& m, int bound = 4096) {
  const GammaGroup& gg = *m.ctx;
  int nz = m.z1.order(), ng = gg.gamma.order();
  std::set<std::vector<elt>> closure;
  std::vector<std::vector<elt>> gens;
  for (elt s = 0; s < ng; ++s) {
    std::vector<elt> v(nz);
    for (int i = 0; i < nz; ++i) v[i] = m.cocycles[i][s];
    gens.push_back(std::move(v));
  }
  closure.insert(std::vector<elt>(nz, 0));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<elt>> snapshot(closure.begin(), closure.end());
    for (const auto& a : snapshot)
      for (const auto& b : gens) {
        std::vector<elt> c(nz);
        for (int i = 0; i < nz; ++i) c[i] = gg.g.mul(a[i], b[i]);
        if (closure.insert(std::move(c)).second) grew = true;
        require(static_cast<int>(closure.size()) <= bound, "BoundExceeded",
                "dual module exceeded the size bound");
      }
  }
  DualModule d;
  d.maps.assign(closure.begin(), closure.end());
  int nd = static_cast<int>(d.maps.size());
  for (int i = 0; i < nd; ++i) d.index[d.maps[i]] = i;
  std::vector<elt> table(static_cast<std::size_t>(nd) * nd);
  for (int i = 0; i < nd; ++i)
    for (int j = 0; j < nd; ++j) {
      std::vector<elt> sum(nz);
      for (int q = 0; q < nz; ++q) sum[q] = gg.g.mul(d.maps[i][q], d.maps[j][q]);
      auto it = d.index.find(sum);
      if (it == d.index.end()) fatal_disagreement("dual module is not closed");
      table[static_cast<std::size_t>(i) * nd + j] = it->second;
    }
  d.dual = make_group_flat(nd, std::move(table), "dual");

  d.eval.resize(ng);
  for (elt s = 0; s < ng; ++s) {
    auto it = d.index.find(gens[s]);
    if (it == d.index.end()) fatal_disagreement("evaluation map missing from dual");
    d.eval[s] = it->second;
  }

  std::vector<std::vector<elt>> rows1(ng, std::vector<elt>(nd));
  std::vector<std::vector<elt>> rows2(ng, std::vector<elt>(nd));
  for (elt s = 0; s < ng; ++s) {
    elt si = gg.gamma.inv(s);
    for (int j = 0; j < nd; ++j) {
      std::vector<elt> w1(nz), w2(nz);
      for (int q = 0; q < nz; ++q) {
        w1[q] = gg.act(s, d.maps[j][q]);
        w2[q] = gg.act(s, d.maps[j][m.twist(si, q)]);
      }
      auto i1 = d.index.find(w1);
      auto i2 = d.index.find(w2);
      if (i1 == d.index.end() || i2 == d.index.end())
        fatal_disagreement("Gamma-action leaves the dual module");
      rows1[s][j] = i1->second;
      rows2[s][j] = i2->second;
    }
  }
  GammaGroup first = make_gamma_group(gg.gamma, d.dual, std::move(rows1));
  GammaGroup second = make_gamma_group(gg.gamma, d.dual, std::move(rows2));
  // The second action sends e_t to e_{s t s^-1}.
  for (elt s = 0; s < ng; ++s)
    for (elt t = 0; t < ng; ++t)
      if (second.act(s, d.eval[t]) != d.eval[gg.gamma.conj(s, t)])
        fatal_disagreement("second action misplaces an evaluation map");
  d.second = std::move(second.action);
  d.first = std::make_shared<const GammaGroup>(std::move(first));
  d.eval_triple = make_triple(d.first, d.eval);
  if (!d.eval_triple.generating)
    fatal_disagreement("evaluation cocycle fails to generate the dual module");
  d.delta_star = d.eval_triple.delta;
  if (!is_normal(gg.gamma, d.delta_star))
    fatal_disagreement("kernel of the evaluation cocycle is not normal");
  if (!(d.delta_star.members == lower_perp(m, full_subgroup(m.z1)).members))
    fatal_disagreement("kernel of evaluation differs from the perp of Z1");
  return d;
}

/// { alpha : phi(alpha) = 0 for all phi in a }, a subgroup of Z1.
inline Subgroup dual_lower_perp(const Z1Module& m, const DualModule& d, const Subgroup& a) {
  std::vector<elt> keep;
  for (int i = 0; i < m.z1.order(); ++i) {
    bool ok = true;
    for (elt j : a.members)
      if (d.maps[j][i] != 0) {
        ok = false;
        break;
      }
    if (ok) keep.push_back(i);
  }
  Subgroup s = subgroup_from_members(m.z1, std::move(keep));
  if (!is_subgroup(m.z1, s)) fatal_disagreement("perp is not a subgroup");
  return s;
}

/// { phi : phi(alpha) = 0 for all alpha in G }, a subgroup of the dual.
inline Subgroup dual_upper_perp(const Z1Module& m, const DualModule& d, const Subgroup& zsub) {
  std::vector<elt> keep;
  for (int j = 0; j < d.dual.order(); ++j) {
    bool ok = true;
    for (elt i : zsub.members)
      if (d.maps[j][i] != 0) {
        ok = false;
        break;
      }
    if (ok) keep.push_back(j);
  }
  Subgroup s = subgroup_from_members(d.dual, std::move(keep));
  if (!is_subgroup(d.dual, s)) fatal_disagreement("perp is not a subgroup");
  return s;
}

/// Homomorphisms dual -> A equivariant for (first action, module action),
/// counted by backtracking without materializing the plain hom set.
inline std::int64_t count_equivariant_homs(const DualModule& d, const GammaGroup& gg) {
  const FiniteGroup& D = d.dual;
  const FiniteGroup& A = gg.g;
  auto gens = greedy_generators(D);
  if (gens.empty()) return 1;
  std::vector<std::vector<elt>> chain;
  {
    std::vector<elt> prefix;
    for (elt s : gens) {
      prefix.push_back(s);
      chain.push_back(detail::flat_closure(D.table(), D.order(), prefix));
    }
  }
  auto gamma_gens = greedy_generators(gg.gamma);
  std::vector<elt> map(D.order(), -1);
  std::int64_t count = 0;
  std::vector<elt> img(gens.size(), 0);
  std::vector<std::vector<elt>> saved(gens.size());
  std::vector<elt> base(D.order(), -1);
  base[0] = 0;
  auto extend = [&](int depth) -> bool {
    std::vector<elt>& v = saved[depth];
    std::vector<elt> work;
    for (elt a = 0; a < D.order(); ++a)
      if (v[a] >= 0) work.push_back(a);
    std::size_t head = 0;
    while (head < work.size()) {
      elt a = work[head++];
      for (int j = 0; j <= depth; ++j) {
        elt b = D.mul(a, gens[j]);
        elt need = A.mul(v[a], v[gens[j]]);
        if (v[b] < 0) {
          v[b] = need;
          work.push_back(b);
        } else if (v[b] != need) {
          return false;
        }
      }
    }
    return true;
  };
  int depth = 0;
  for (;;) {
    if (img[depth] == A.order()) {
      if (depth == 0) break;
      --depth;
      ++img[depth];
      continue;
    }
    if (D.element_order(gens[depth]) % A.element_order(img[depth]) != 0) {
      ++img[depth];
      continue;
    }
    saved[depth] = depth == 0 ? base : saved[depth - 1];
    if (saved[depth][gens[depth]] >= 0 && saved[depth][gens[depth]] != img[depth]) {
      ++img[depth];
      continue;
    }
    saved[depth][gens[depth]] = img[depth];
    if (extend(depth)) {
      if (depth + 1 == static_cast<int>(gens.size())) {
        bool eq = true;
        const std::vector<elt>& v = saved[depth];
        for (elt s : gamma_gens) {
          for (int j = 0; j < D.order() && eq; ++j)
            eq = v[d.first->act(s, j)] == gg.act(s, v[j]);
          if (!eq) break;
        }
        if (eq) ++count;
        ++img[depth];
      } else {
        ++depth;
        img[depth] = 0;
      }
    } else {
      ++img[depth];
    }
  }
  return count;
}

// ---------------------------------------------------------------------------
// GF(p) tools and the augmentation-ideal comparison
// ---------------------------------------------------------------------------

struct ElementaryBasis {
  int p = 0, k = 0;
  std::vector<elt> basis;
  std::vector<std::vector<int>> coords;  // element -> F_p^k
};

/// Coordinates for an elementary abelian p-group; nullopt otherwise.
inline std::optional<ElementaryBasis> elementary_basis(const FiniteGroup& A) {
  if (!A.abelian() || A.order() == 1) return std::nullopt;
  int p = group_exponent(A);
  auto pf = prime_factors(p);
  if (pf.size() != 1 || pf[0] != p) return std::nullopt;
  ElementaryBasis eb;
  eb.p = p;
  eb.coords.assign(A.order(), {});
  std::map<elt, std::vector<int>> span;
  span[0] = {};
  for (elt x = 0; x < A.order(); ++x) {
    if (span.count(x)) continue;
    eb.basis.push_back(x);
    std::map<elt, std::vector<int>> next = span;
    for (const auto& [y, cy] : span) {
      elt cur = y;
      for (int c = 1; c < p; ++c) {
        cur = A.mul(cur, x);
        auto vec = cy;
        vec.resize(eb.basis.size(), 0);
        vec.back() = c;
        next[cur] = vec;
      }
    }
    span = std::move(next);
  }
  eb.k = static_cast<int>(eb.basis.size());
  if (static_cast<int>(span.size()) != A.order()) return std::nullopt;
  for (auto& [x, v] : span) {
    v.resize(eb.k, 0);
    eb.coords[x] = v;
  }
  return eb;
}

/// Rank of a matrix over F_p (rows modified in place).
inline int gf_rank(std::vector<std::vector<int>> rows, int p) {
  int rank = 0;
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols; ++c) {
    int pivot = -1;
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (rows[r][c] % p != 0) {
        pivot = static_cast<int>(r);
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    int inv = 1;
    for (int t = 1; t < p; ++t)
      if (rows[rank][c] * t % p == 1) inv = t;
    for (auto& x : rows[rank]) x = x * inv % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<int>(r) == rank) continue;
      int f = rows[r][c] % p;
      if (!f) continue;
      for (std::size_t cc = 0; cc < cols; ++cc)
        rows[r][cc] = ((rows[r][cc] - f * rows[rank][cc]) % p + p) % p;
    }
    ++rank;
    if (rank == static_cast<int>(rows.size())) break;
  }
  return rank;
}

struct AugmentationReport {
  bool applicable = false;       // module is elementary abelian p
  std::int64_t solver_count = 0; // cocycles predicted by the linear system
  std::int64_t table_checked = 0;// cocycles verified against the ideal model
  bool table_model = false;      // ideal built as an explicit operator group
};

/// For an elementary abelian module, the cocycles correspond to equivariant
/// homomorphisms from the augmentation ideal of the mod-p group algebra.
/// This solves the equivariance constraints as a linear system (independent
/// route) and, when small enough, also builds the ideal as an explicit table
/// module and checks each cocycle's extension really is equivariant there.
inline AugmentationReport augmentation_comparison(const Z1Module& m, int table_bound = 1024) {
  const GammaGroup& gg = *m.ctx;
  AugmentationReport rep;
  auto eb = elementary_basis(gg.g);
  if (!eb) return rep;
  rep.applicable = true;
  int p = eb->p, k = eb->k, ng = gg.gamma.order();

  // Action matrices on A in the chosen basis.
  std::vector<std::vector<std::vector<int>>> M(ng);
  for (elt s = 0; s < ng; ++s) {
    M[s].assign(k, std::vector<int>(k, 0));
    for (int j = 0; j < k; ++j) {
      auto img = eb->coords[gg.act(s, eb->basis[j])];
      for (int i = 0; i < k; ++i) M[s][i][j] = img[i];
    }
  }

  // Unknowns h_t in F_p^k for t != 1; constraints h_{s t} - h_s = M_s h_t.
  int vars = (ng - 1) * k;
  auto var = [k](elt t, int c) { return (t - 1) * k + c; };
  std::vector<std::vector<int>> rows;
  for (elt s = 0; s < ng; ++s)
    for (elt t = 1; t < ng; ++t) {
      elt st = gg.gamma.mul(s, t);
      for (int i = 0; i < k; ++i) {
        std::vector<int> row(vars, 0);
        if (st != 0) row[var(st, i)] = (row[var(st, i)] + 1) % p;
        if (s != 0) row[var(s, i)] = (row[var(s, i)] - 1 + p) % p;
        for (int j = 0; j < k; ++j)
          row[var(t, j)] = ((row[var(t, j)] - M[s][i][j]) % p + p) % p;
        rows.push_back(std::move(row));
      }
    }
  int dim = vars - gf_rank(std::move(rows), p);
  rep.solver_count = 1;
  for (int i = 0; i < dim; ++i) rep.solver_count *= p;
  if (rep.solver_count != static_cast<std::int64_t>(m.cocycles.size()))
    fatal_disagreement("linear count of cocycles disagrees with enumeration");

  // Table model of the ideal: coordinates d_t over t != 1, the operator s
  // sending the basis vector of t to (basis of s t) - (basis of s).
  double sz = 1;
  for (int i = 1; i < ng && sz <= table_bound; ++i) sz *= p;
  if (ng == 1 || sz > table_bound) return rep;
  rep.table_model = true;
  int ni = static_cast<int>(sz);
  auto digits = [&](int x) {
    std::vector<int> dg(ng - 1);
    for (int i = 0; i < ng - 1; ++i) {
      dg[i] = x % p;
      x /= p;
    }
    return dg;
  };
  auto code = [&](const std::vector<int>& dg) {
    int x = 0;
    for (int i = ng - 2; i >= 0; --i) x = x * p + dg[i];
    return x;
  };
  std::vector<std::vector<elt>> act_rows(ng, std::vector<elt>(ni));
  for (elt s = 0; s < ng; ++s)
    for (int x = 0; x < ni; ++x) {
      auto dg = digits(x);
      std::vector<int> out(ng - 1, 0);
      for (elt t = 1; t < ng; ++t) {
        int c = dg[t - 1];
        if (!c) continue;
        elt st = gg.gamma.mul(s, t);
        if (st != 0) out[st - 1] = (out[st - 1] + c) % p;
        if (s != 0) out[s - 1] = ((out[s - 1] - c) % p + p) % p;
      }
      act_rows[s][x] = code(out);
    }
  std::vector<elt> itab(static_cast<std::size_t>(ni) * ni);
  for (int x = 0; x < ni; ++x)
    for (int y = 0; y < ni; ++y) {
      auto a = digits(x), b = digits(y);
      for (int i = 0; i < ng - 1; ++i) a[i] = (a[i] + b[i]) % p;
      itab[static_cast<std::size_t>(x) * ni + y] = code(a);
    }
  FiniteGroup I = make_group_flat(ni, std::move(itab), "aug");
  GammaGroup ig = make_gamma_group(gg.gamma, I, std::move(act_rows));

  for (const auto& eta : m.cocycles) {
    // Linear extension h of eta over the ideal, then a full equivariance and
    // additivity check against the table model.
    std::vector<elt> h(ni);
    for (int x = 0; x < ni; ++x) {
      auto dg = digits(x);
      elt acc = 0;
      for (elt t = 1; t < ng; ++t)
        for (int c = 0; c < dg[t - 1]; ++c) acc = gg.g.mul(acc, eta[t]);
      h[x] = acc;
    }
    for (int x = 0; x < ni; ++x)
      for (int y = 0; y < ni; ++y)
        if (h[I.mul(x, y)] != gg.g.mul(h[x], h[y]))
          fatal_disagreement("ideal extension of a cocycle is not additive");
    for (elt s = 0; s < ng; ++s)
      for (int x = 0; x < ni; ++x)
        if (h[ig.act(s, x)] != gg.act(s, h[x]))
          fatal_disagreement("ideal extension of a cocycle is not equivariant");
    ++rep.table_checked;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// The quotient of a module by its fixed submodule embeds in the cocycle
// group through the coboundary map; it is all of Z1 exactly when every
// cocycle is a coboundary.
// ---------------------------------------------------------------------------

struct CogModule {
  Subgroup fixed;           // fixed submodule of A
  FiniteGroup cog;          // A / fixed
  std::vector<elt> proj;    // A-element -> coset index in cog
  std::vector<elt> embed;   // coset index -> z1 index of its coboundary
  Subgroup image;           // coboundaries inside z1
  bool fills_z1 = false;    // embed is onto all of Z1
};

/// Quotient of the module by its fixed points together with the injection
/// into the cocycle group induced by taking coboundaries.
inline CogModule cog_group(const Z1Module& m) {
  const GammaGroup& gg = *m.ctx;
  CogModule c;
  c.fixed = gg.fix;
  QuotientData q = quotient(gg.g, gg.fix);
  c.cog = q.group;
  c.proj = q.coset_of;
  c.image = m.b1;

  // theta factors exactly through the projection: equal cosets, equal
  // coboundaries, and conversely.
  for (elt x = 0; x < gg.g.order(); ++x)
    for (elt y = 0; y < gg.g.order(); ++y)
      if ((m.theta[x] == m.theta[y]) != (c.proj[x] == c.proj[y]))
        fatal_disagreement("coboundary map does not factor through the quotient");

  c.embed.resize(c.cog.order());
  for (int i = 0; i < c.cog.order(); ++i) c.embed[i] = m.theta[q.reps[i]];
  for (int i = 0; i < c.cog.order(); ++i)
    for (int j = 0; j < c.cog.order(); ++j)
      if (c.embed[c.cog.mul(i, j)] != m.z1.mul(c.embed[i], c.embed[j]))
        fatal_disagreement("quotient embedding is not a homomorphism");
  std::set<elt> img(c.embed.begin(), c.embed.end());
  if (static_cast<int>(img.size()) != c.cog.order())
    fatal_disagreement("quotient embedding is not injective");
  if (!std::equal(img.begin(), img.end(), c.image.members.begin(),
                  c.image.members.end()))
    fatal_disagreement("quotient embedding misses the coboundary subgroup");
  c.fills_z1 = (c.cog.order() == m.z1.order());
  if (c.fills_z1 != (m.h1 == 1))
    fatal_disagreement("quotient fills the cocycle group but classes remain");
  return c;
}

}  // namespace cogalois
