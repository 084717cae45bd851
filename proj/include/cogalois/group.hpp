#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cogalois/common.hpp"

namespace cogalois {

// ---------------------------------------------------------------------------
// FiniteGroup: a group given by its full multiplication table.  Elements are
// indices 0..n-1 and index 0 is the identity.  Construction validates the
// axioms (exhaustively up to order 256, via Light's associativity test over a
// generating set above that) and precomputes inverses and element orders.
// ---------------------------------------------------------------------------

class FiniteGroup {
public:
  FiniteGroup() = default;

  int order() const { return n_; }
  const std::string& name() const { return name_; }
  void set_name(std::string s) { name_ = std::move(s); }

  elt mul(elt a, elt b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  elt inv(elt a) const { return inv_[a]; }
  elt conj(elt g, elt x) const { return mul(mul(g, x), inv_[g]); }

  int element_order(elt a) const { return elt_order_[a]; }
  bool abelian() const { return abelian_; }

  const std::vector<elt>& table() const { return table_; }

  /// Sorted multiset of element orders; cheap isomorphism prescreen.
  const std::vector<int>& order_profile() const { return order_profile_; }

private:
  friend FiniteGroup make_group(const std::vector<std::vector<elt>>&, const std::string&);
  friend FiniteGroup make_group_flat(int, std::vector<elt>, const std::string&);

  int n_ = 0;
  std::vector<elt> table_;  // row-major n*n
  std::vector<elt> inv_;
  std::vector<int> elt_order_;
  std::vector<int> order_profile_;
  bool abelian_ = true;
  std::string name_;
};

namespace detail {

/// Greedy generating set used by Light's test and by the backtracking
/// searches: repeatedly add the highest-order element not yet generated
/// (ties broken by smallest index).  Deterministic.
std::vector<elt> greedy_generators_impl(int n,
                                        const std::vector<elt>& table,
                                        const std::vector<int>& orders);

inline elt flat_mul(const std::vector<elt>& t, int n, elt a, elt b) {
  return t[static_cast<std::size_t>(a) * n + b];
}

/// Closure of a seed set under the table operation, as a sorted element list.
inline std::vector<elt> flat_closure(const std::vector<elt>& t, int n,
                                     const std::vector<elt>& seed) {
  std::vector<char> in(n, 0);
  std::vector<elt> members;
  auto add = [&](elt x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
    }
  };
  add(0);
  for (elt s : seed) add(s);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j) {
      add(flat_mul(t, n, members[i], members[j]));
      add(flat_mul(t, n, members[j], members[i]));
    }
  // The loop above misses products of elements appended later; iterate until
  // stable.  (For the orders used here this converges in one or two rounds.)
  for (;;) {
    std::size_t before = members.size();
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = 0; j < members.size(); ++j)
        add(flat_mul(t, n, members[i], members[j]));
    if (members.size() == before) break;
  }
  std::sort(members.begin(), members.end());
  return members;
}

inline std::vector<elt> greedy_generators_impl(int n, const std::vector<elt>& table,
                                               const std::vector<int>& orders) {
  std::vector<elt> gens;
  std::vector<char> covered(n, 0);
  covered[0] = 1;
  int covered_count = 1;
  // Element indices sorted by (order desc, index asc).
  std::vector<elt> by_order(n);
  for (int i = 0; i < n; ++i) by_order[i] = i;
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](elt a, elt b) { return orders[a] > orders[b]; });
  while (covered_count < n) {
    elt pick = -1;
    for (elt c : by_order)
      if (!covered[c]) {
        pick = c;
        break;
      }
    gens.push_back(pick);
    auto cl = flat_closure(table, n, gens);
    std::fill(covered.begin(), covered.end(), 0);
    for (elt x : cl) covered[x] = 1;
    covered_count = static_cast<int>(cl.size());
  }
  return gens;
}

}  // namespace detail

/// Validates `table` as a group with identity at index 0 and builds the
/// FiniteGroup.  Throws Error with codes NoIdentity, NoInverse,
/// NotAssociative (naming the first violating elements) or BadParameters.
inline FiniteGroup make_group_flat(int n, std::vector<elt> flat,
                                   const std::string& name = "") {
  require(n >= 1, "BadParameters", "group order must be >= 1");
  require(static_cast<int>(flat.size()) == n * n, "BadParameters",
          "multiplication table must be order x order");
  for (elt v : flat)
    require(v >= 0 && v < n, "BadParameters",
            "table entry out of range: " + std::to_string(v));

  auto mul = [&](elt a, elt b) { return detail::flat_mul(flat, n, a, b); };

  // Identity at index 0.
  for (elt a = 0; a < n; ++a) {
    if (mul(0, a) != a)
      fail("NoIdentity", "0*" + std::to_string(a) + " = " +
                             std::to_string(mul(0, a)) + ", expected " +
                             std::to_string(a));
    if (mul(a, 0) != a)
      fail("NoIdentity", std::to_string(a) + "*0 = " +
                             std::to_string(mul(a, 0)) + ", expected " +
                             std::to_string(a));
  }

  // Two-sided inverses.
  std::vector<elt> inv(n, -1);
  for (elt a = 0; a < n; ++a) {
    for (elt b = 0; b < n; ++b)
      if (mul(a, b) == 0 && mul(b, a) == 0) {
        inv[a] = b;
        break;
      }
    if (inv[a] < 0)
      fail("NoInverse", "element " + std::to_string(a) + " has no two-sided inverse");
  }

  // Associativity: exhaustive for n <= 256; Light's test above that.
  if (n <= 256) {
    for (elt a = 0; a < n; ++a)
      for (elt b = 0; b < n; ++b)
        for (elt c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            fail("NotAssociative", "(" + std::to_string(a) + "*" + std::to_string(b) +
                                       ")*" + std::to_string(c) + " != " +
                                       std::to_string(a) + "*(" + std::to_string(b) +
                                       "*" + std::to_string(c) + ")");
  } else {
    // Light's associativity test: with an identity present it suffices to
    // check a(gb) == (ag)b for all a, b and g in a generating set.
    std::vector<int> ord(n, 1);  // provisional orders for the greedy pick
    for (elt a = 0; a < n; ++a) {
      elt x = a;
      int k = 1;
      while (x != 0 && k <= n) {
        x = mul(x, a);
        ++k;
      }
      require(k <= n, "BadParameters", "power sequence failed to reach identity");
      ord[a] = k;
    }
    auto gens = detail::greedy_generators_impl(n, flat, ord);
    for (elt g : gens)
      for (elt a = 0; a < n; ++a)
        for (elt b = 0; b < n; ++b)
          if (mul(a, mul(g, b)) != mul(mul(a, g), b))
            fail("NotAssociative", "(" + std::to_string(a) + "*" + std::to_string(g) +
                                       ")*" + std::to_string(b) + " != " +
                                       std::to_string(a) + "*(" + std::to_string(g) +
                                       "*" + std::to_string(b) + ")");
  }

  FiniteGroup G;
  G.n_ = n;
  G.table_ = std::move(flat);
  G.inv_ = std::move(inv);
  G.name_ = name;
  G.elt_order_.assign(n, 0);
  for (elt a = 0; a < n; ++a) {
    elt x = a;
    int k = 1;
    while (x != 0) {
      x = G.mul(x, a);
      ++k;
    }
    G.elt_order_[a] = k;
  }
  G.abelian_ = true;
  for (elt a = 0; a < n && G.abelian_; ++a)
    for (elt b = a + 1; b < n; ++b)
      if (G.mul(a, b) != G.mul(b, a)) {
        G.abelian_ = false;
        break;
      }
  G.order_profile_ = G.elt_order_;
  std::sort(G.order_profile_.begin(), G.order_profile_.end());
  return G;
}

inline FiniteGroup make_group(const std::vector<std::vector<elt>>& table,
                              const std::string& name = "") {
  int n = static_cast<int>(table.size());
  std::vector<elt> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : table) {
    require(static_cast<int>(row.size()) == n, "BadParameters",
            "multiplication table must be square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return make_group_flat(n, std::move(flat), name);
}

// ---------------------------------------------------------------------------
// Subgroups
// ---------------------------------------------------------------------------

struct Subgroup {
  std::vector<elt> members;        // sorted ascending; always contains 0
  std::vector<std::uint64_t> mask; // bit i set iff element i is a member
  int parent_order = 0;

  int size() const { return static_cast<int>(members.size()); }
  bool contains(elt x) const { return (mask[x >> 6] >> (x & 63)) & 1; }
  bool trivial() const { return members.size() == 1; }
  bool full() const { return size() == parent_order; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_order == b.parent_order && a.members == b.members;
  }
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    return a.members < b.members;  // lexicographic canonical order
  }
};

inline Subgroup subgroup_from_members(const FiniteGroup& G, std::vector<elt> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Subgroup s;
  s.parent_order = G.order();
  s.mask.assign((G.order() + 63) / 64, 0);
  for (elt x : members) s.mask[x >> 6] |= 1ULL << (x & 63);
  s.members = std::move(members);
  return s;
}

/// Subgroup generated by `seed` (closure under products; inverses follow by
/// finiteness).
inline Subgroup generated_subgroup(const FiniteGroup& G, const std::vector<elt>& seed) {
  return subgroup_from_members(G, detail::flat_closure(G.table(), G.order(), seed));
}

inline bool is_subgroup(const FiniteGroup& G, const Subgroup& s) {
  if (!s.contains(0)) return false;
  for (elt a : s.members)
    for (elt b : s.members)
      if (!s.contains(G.mul(a, b))) return false;
  return true;
}

inline bool is_normal(const FiniteGroup& G, const Subgroup& s) {
  for (elt g = 0; g < G.order(); ++g)
    for (elt h : s.members)
      if (!s.contains(G.conj(g, h))) return false;
  return true;
}

inline Subgroup intersect(const FiniteGroup& G, const Subgroup& a, const Subgroup& b) {
  std::vector<elt> m;
  for (elt x : a.members)
    if (b.contains(x)) m.push_back(x);
  return subgroup_from_members(G, std::move(m));
}

inline Subgroup join(const FiniteGroup& G, const Subgroup& a, const Subgroup& b) {
  std::vector<elt> seed = a.members;
  seed.insert(seed.end(), b.members.begin(), b.members.end());
  return generated_subgroup(G, seed);
}

inline bool subgroup_leq(const Subgroup& a, const Subgroup& b) {
  for (std::size_t w = 0; w < a.mask.size(); ++w)
    if (a.mask[w] & ~b.mask[w]) return false;
  return true;
}

inline Subgroup trivial_subgroup(const FiniteGroup& G) {
  return subgroup_from_members(G, {0});
}

inline Subgroup full_subgroup(const FiniteGroup& G) {
  std::vector<elt> all(G.order());
  for (int i = 0; i < G.order(); ++i) all[i] = i;
  return subgroup_from_members(G, std::move(all));
}

inline Subgroup center(const FiniteGroup& G) {
  std::vector<elt> m;
  for (elt z = 0; z < G.order(); ++z) {
    bool central = true;
    for (elt a = 0; a < G.order() && central; ++a)
      central = G.mul(z, a) == G.mul(a, z);
    if (central) m.push_back(z);
  }
  return subgroup_from_members(G, std::move(m));
}

/// All subgroups, enumerated by cyclic extension: starting from the `above`
/// subgroup (default trivial), repeatedly adjoin one element and close.
/// Output is sorted lexicographically by member list.  Throws
/// OrderBoundExceeded if |G| > bound (default 1024).
inline std::vector<Subgroup> all_subgroups(const FiniteGroup& G,
                                           const Subgroup* above = nullptr,
                                           int bound = 1024) {
  require(G.order() <= bound, "OrderBoundExceeded",
          "subgroup enumeration bound " + std::to_string(bound) +
              " exceeded by group of order " + std::to_string(G.order()));
  Subgroup base = above ? *above : trivial_subgroup(G);
  require(is_subgroup(G, base), "BadParameters",
          "`above` must be a subgroup for lattice enumeration");
  std::set<std::vector<elt>> seen;
  std::vector<Subgroup> out;
  std::vector<Subgroup> frontier{base};
  seen.insert(base.members);
  out.push_back(base);
  while (!frontier.empty()) {
    std::vector<Subgroup> next;
    for (const Subgroup& H : frontier) {
      for (elt g = 0; g < G.order(); ++g) {
        if (H.contains(g)) continue;
        std::vector<elt> seed = H.members;
        seed.push_back(g);
        Subgroup K = generated_subgroup(G, seed);
        if (seen.insert(K.members).second) {
          out.push_back(K);
          next.push_back(K);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Quotients
// ---------------------------------------------------------------------------

struct QuotientData {
  FiniteGroup group;          // the quotient, cosets indexed 0..k-1
  std::vector<int> coset_of;  // parent element -> coset index
  std::vector<elt> reps;      // least-member representative per coset
};

/// G/N with canonical least-member coset representatives.  The coset of the
/// identity has least member 0, so it lands at index 0 as required.  Throws
/// NotNormal if N is not normal in G.
inline QuotientData quotient(const FiniteGroup& G, const Subgroup& N) {
  require(is_subgroup(G, N), "BadParameters", "quotient by a non-subgroup");
  if (!is_normal(G, N)) {
    for (elt g = 0; g < G.order(); ++g)
      for (elt h : N.members)
        if (!N.contains(G.conj(g, h)))
          fail("NotNormal", "conjugate " + std::to_string(g) + "*" + std::to_string(h) +
                                "*" + std::to_string(g) + "^-1 leaves the subgroup");
  }
  int n = G.order();
  std::vector<int> coset_of(n, -1);
  std::vector<elt> reps;
  for (elt x = 0; x < n; ++x) {
    if (coset_of[x] >= 0) continue;
    int idx = static_cast<int>(reps.size());
    reps.push_back(x);  // x is the least member of its coset by scan order
    for (elt h : N.members) coset_of[G.mul(x, h)] = idx;
  }
  int k = static_cast<int>(reps.size());
  std::vector<elt> table(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      table[static_cast<std::size_t>(i) * k + j] = coset_of[G.mul(reps[i], reps[j])];
  QuotientData q;
  q.group = make_group_flat(k, std::move(table),
                            G.name().empty() ? "" : G.name() + "/N");
  q.coset_of = std::move(coset_of);
  q.reps = std::move(reps);
  return q;
}

// ---------------------------------------------------------------------------
// Morphisms, automorphisms, isomorphisms
// ---------------------------------------------------------------------------

struct GroupMorphism {
  int source_order = 0;
  int target_order = 0;
  std::vector<elt> map;  // source element -> target element
};

inline bool is_homomorphism(const FiniteGroup& G, const FiniteGroup& H,
                            const std::vector<elt>& map) {
  if (static_cast<int>(map.size()) != G.order()) return false;
  if (map[0] != 0) return false;
  for (elt a = 0; a < G.order(); ++a)
    for (elt b = 0; b < G.order(); ++b)
      if (map[G.mul(a, b)] != H.mul(map[a], map[b])) return false;
  return true;
}

inline std::vector<elt> greedy_generators(const FiniteGroup& G) {
  std::vector<int> orders(G.order());
  for (elt a = 0; a < G.order(); ++a) orders[a] = G.element_order(a);
  return detail::greedy_generators_impl(G.order(), G.table(), orders);
}

namespace detail {

/// Extends gens -> imgs to a map on the subgroup `domain` (which must be
/// generated by gens).  Checks map[a*g] == map[a]*img(g) for every a in the
/// domain and every generator; by induction on word length that implies the
/// full homomorphism property on the domain.  Returns false on conflict.
inline bool extend_on(const FiniteGroup& G, const FiniteGroup& H,
                      const std::vector<elt>& gens, const std::vector<elt>& imgs,
                      const std::vector<elt>& domain, std::vector<elt>& map) {
  std::fill(map.begin(), map.end(), -1);
  map[0] = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (map[gens[i]] >= 0 && map[gens[i]] != imgs[i]) return false;
    map[gens[i]] = imgs[i];
  }
  std::vector<elt> work{0};
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i] != 0) work.push_back(gens[i]);
  std::size_t head = 0;
  std::size_t reached = work.size();
  while (head < work.size()) {
    elt a = work[head++];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      elt b = G.mul(a, gens[i]);
      elt v = H.mul(map[a], imgs[i]);
      if (map[b] < 0) {
        map[b] = v;
        work.push_back(b);
        ++reached;
      } else if (map[b] != v) {
        return false;
      }
    }
  }
  return reached >= domain.size();  // gens generate the domain, so all covered
}

struct HomSearch {
  const FiniteGroup& G;
  const FiniteGroup& H;
  std::vector<elt> gens;
  std::vector<std::vector<elt>> chain;       // chain[i] = elements of <gens[0..i]>
  std::vector<std::vector<elt>> candidates;  // candidates[i] for gens[i]
  bool want_bijective = false;
  bool first_only = false;
  std::vector<std::vector<elt>> found;

  void run() {
    std::vector<elt> imgs(gens.size(), -1);
    dfs(0, imgs);
  }

  void dfs(std::size_t depth, std::vector<elt>& imgs) {
    if (first_only && !found.empty()) return;
    if (depth == gens.size()) {
      std::vector<elt> map(G.order(), -1);
      std::vector<elt> all(G.order());
      for (int i = 0; i < G.order(); ++i) all[i] = i;
      if (!extend_on(G, H, gens, imgs, all, map)) return;
      if (want_bijective) {
        std::vector<char> seen(H.order(), 0);
        for (elt v : map) {
          if (seen[v]) return;
          seen[v] = 1;
        }
      }
      found.push_back(map);
      return;
    }
    std::vector<elt> map(G.order(), -1);
    for (elt c : candidates[depth]) {
      imgs[depth] = c;
      std::vector<elt> partial_gens(gens.begin(), gens.begin() + depth + 1);
      std::vector<elt> partial_imgs(imgs.begin(), imgs.begin() + depth + 1);
      if (extend_on(G, H, partial_gens, partial_imgs, chain[depth], map))
        dfs(depth + 1, imgs);
      if (first_only && !found.empty()) return;
    }
    imgs[depth] = -1;
  }
};

inline std::vector<std::vector<elt>> hom_search(const FiniteGroup& G, const FiniteGroup& H,
                                                bool bijective_only, bool order_preserving,
                                                bool first_only) {
  HomSearch s{G, H};
  s.gens = greedy_generators(G);
  if (s.gens.empty()) {  // trivial group
    if (bijective_only && H.order() != 1) return {};
    std::vector<elt> map{0};
    return {map};
  }
  s.chain.resize(s.gens.size());
  std::vector<elt> prefix;
  for (std::size_t i = 0; i < s.gens.size(); ++i) {
    prefix.push_back(s.gens[i]);
    s.chain[i] = flat_closure(G.table(), G.order(), prefix);
  }
  s.candidates.resize(s.gens.size());
  for (std::size_t i = 0; i < s.gens.size(); ++i) {
    int d = G.element_order(s.gens[i]);
    for (elt c = 0; c < H.order(); ++c) {
      int oc = H.element_order(c);
      if (order_preserving ? (oc == d) : (d % oc == 0)) s.candidates[i].push_back(c);
    }
  }
  s.want_bijective = bijective_only;
  s.first_only = first_only;
  s.run();
  return s.found;
}

}  // namespace detail

/// All automorphisms of G, each as a permutation of element indices.
/// The result always contains the identity; for modest sizes the set is
/// verified to be closed under composition and inverses.
inline std::vector<std::vector<elt>> automorphisms(const FiniteGroup& G) {
  auto maps = detail::hom_search(G, G, /*bijective_only=*/true,
                                 /*order_preserving=*/true, /*first_only=*/false);
  std::sort(maps.begin(), maps.end());
  if (G.order() <= 64 && maps.size() <= 1024) {
    // Closure sanity check: Aut(G) must itself be a group.
    std::set<std::vector<elt>> have(maps.begin(), maps.end());
    for (const auto& f : maps)
      for (const auto& g : maps) {
        std::vector<elt> fg(G.order());
        for (elt x = 0; x < G.order(); ++x) fg[x] = f[g[x]];
        if (!have.count(fg))
          fatal_disagreement("automorphism set not closed under composition");
      }
  }
  return maps;
}

/// All homomorphisms G -> H (not necessarily injective or surjective).
inline std::vector<std::vector<elt>> all_homomorphisms(const FiniteGroup& G,
                                                       const FiniteGroup& H) {
  auto maps = detail::hom_search(G, H, false, false, false);
  std::sort(maps.begin(), maps.end());
  return maps;
}

/// First isomorphism G -> H in the deterministic search order, if any.
inline std::optional<std::vector<elt>> find_isomorphism(const FiniteGroup& G,
                                                        const FiniteGroup& H) {
  if (G.order() != H.order()) return std::nullopt;
  if (G.abelian() != H.abelian()) return std::nullopt;
  if (G.order_profile() != H.order_profile()) return std::nullopt;
  if (center(G).size() != center(H).size()) return std::nullopt;
  auto maps = detail::hom_search(G, H, true, true, /*first_only=*/true);
  if (maps.empty()) return std::nullopt;
  return maps.front();
}

inline bool isomorphic(const FiniteGroup& G, const FiniteGroup& H) {
  return find_isomorphism(G, H).has_value();
}

// ---------------------------------------------------------------------------
// Basic constructions
// ---------------------------------------------------------------------------

inline FiniteGroup cyclic_group(int n, const std::string& name = "") {
  require(n >= 1, "BadParameters", "cyclic group order must be >= 1");
  std::vector<elt> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  return make_group_flat(n, std::move(t), name.empty() ? "Z" + std::to_string(n) : name);
}

/// Direct product with pair coding (a, b) -> a*|H| + b.
inline FiniteGroup direct_product(const FiniteGroup& G, const FiniteGroup& H) {
  int n = G.order() * H.order();
  std::vector<elt> t(static_cast<std::size_t>(n) * n);
  for (int a1 = 0; a1 < G.order(); ++a1)
    for (int b1 = 0; b1 < H.order(); ++b1)
      for (int a2 = 0; a2 < G.order(); ++a2)
        for (int b2 = 0; b2 < H.order(); ++b2) {
          int x = a1 * H.order() + b1, y = a2 * H.order() + b2;
          t[static_cast<std::size_t>(x) * n + y] =
              G.mul(a1, a2) * H.order() + H.mul(b1, b2);
        }
  std::string nm;
  if (!G.name().empty() && !H.name().empty()) nm = G.name() + "x" + H.name();
  return make_group_flat(n, std::move(t), nm);
}

/// Subgroup of G on its own element set, re-coded as a standalone group with
/// elements renumbered 0..k-1 in member order.  Returns the group plus the
/// member list (new index -> parent element).
inline std::pair<FiniteGroup, std::vector<elt>> as_group(const FiniteGroup& G,
                                                         const Subgroup& S) {
  require(is_subgroup(G, S), "BadParameters", "as_group needs a subgroup");
  int k = S.size();
  std::vector<int> pos(G.order(), -1);
  for (int i = 0; i < k; ++i) pos[S.members[i]] = i;
  std::vector<elt> t(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      t[static_cast<std::size_t>(i) * k + j] = pos[G.mul(S.members[i], S.members[j])];
  return {make_group_flat(k, std::move(t)), S.members};
}

}  // namespace cogalois
