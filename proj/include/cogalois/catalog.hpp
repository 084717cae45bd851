#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cogalois/group.hpp"

namespace cogalois {

// ---------------------------------------------------------------------------
// Concrete families.  Element codings all place the identity at index 0.
// ---------------------------------------------------------------------------

/// Dihedral group of order 2m: r of order m, s of order 2, s r s = r^-1.
/// Coding: r^i s^j -> j*m + i.
inline FiniteGroup dihedral_group(int m, const std::string& name = "") {
  require(m >= 1, "BadParameters", "dihedral parameter must be >= 1");
  int n = 2 * m;
  std::vector<elt> t(static_cast<std::size_t>(n) * n);
  auto code = [m](int i, int j) { return j * m + i; };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < 2; ++l) {
          int ii = j == 0 ? (i + k) % m : (i - k + m) % m;
          int jj = (j + l) % 2;
          t[static_cast<std::size_t>(code(i, j)) * n + code(k, l)] = code(ii, jj);
        }
  return make_group_flat(n, std::move(t),
                         name.empty() ? "D" + std::to_string(n) : name);
}

/// Dicyclic group of order 4m: a of order 2m, b^2 = a^m, b a b^-1 = a^-1.
/// Coding: a^i b^j -> j*2m + i.  dicyclic_group(2) is the quaternion group.
inline FiniteGroup dicyclic_group(int m, const std::string& name = "") {
  require(m >= 1, "BadParameters", "dicyclic parameter must be >= 1");
  int mm = 2 * m, n = 4 * m;
  std::vector<elt> t(static_cast<std::size_t>(n) * n);
  auto code = [mm](int i, int j) { return j * mm + i; };
  for (int i = 0; i < mm; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < mm; ++k)
        for (int l = 0; l < 2; ++l) {
          int ii, jj;
          if (j == 0) {
            ii = (i + k) % mm;
            jj = l;
          } else if (l == 0) {
            ii = (i - k + mm) % mm;
            jj = 1;
          } else {
            ii = (i - k + m + mm) % mm;  // b^2 = a^m
            jj = 0;
          }
          t[static_cast<std::size_t>(code(i, j)) * n + code(k, l)] = code(ii, jj);
        }
  return make_group_flat(n, std::move(t),
                         name.empty() ? "Dic" + std::to_string(n) : name);
}

/// Z/n semidirect Z/m where the generator of Z/m acts by x -> u*x mod n.
/// Requires gcd(u, n) = 1 and u^m = 1 mod n.  Coding: (x, y) -> x*m + y.
inline FiniteGroup semidirect_cyclic(int n, int m, std::int64_t u,
                                     const std::string& name = "") {
  require(n >= 1 && m >= 1, "BadParameters", "orders must be >= 1");
  u = ((u % n) + n) % n;
  require(gcd_i64(u, n) == 1, "BadParameters", "unit required for semidirect action");
  require(powmod_i64(u, m, n) == 1 % n, "BadParameters",
          "u^m must be 1 mod n for a well-defined action of Z" + std::to_string(m));
  std::vector<std::int64_t> upow(m);
  upow[0] = 1 % n;
  for (int y = 1; y < m; ++y) upow[y] = upow[y - 1] * u % n;
  int N = n * m;
  std::vector<elt> t(static_cast<std::size_t>(N) * N);
  for (int x1 = 0; x1 < n; ++x1)
    for (int y1 = 0; y1 < m; ++y1)
      for (int x2 = 0; x2 < n; ++x2)
        for (int y2 = 0; y2 < m; ++y2) {
          int x = static_cast<int>((x1 + upow[y1] * x2) % n);
          int y = (y1 + y2) % m;
          t[static_cast<std::size_t>(x1 * m + y1) * N + (x2 * m + y2)] = x * m + y;
        }
  return make_group_flat(N, std::move(t), name);
}

/// N semidirect H with an explicit action: act[h] is the permutation of N's
/// elements by which h acts.  Coding: (x, h) -> x*|H| + h.  The group axioms
/// validated at construction certify that act is a hom into Aut(N).
inline FiniteGroup semidirect_explicit(const FiniteGroup& N, const FiniteGroup& H,
                                       const std::vector<std::vector<elt>>& act,
                                       const std::string& name = "") {
  require(static_cast<int>(act.size()) == H.order(), "BadParameters",
          "one permutation of N per element of H required");
  int n = N.order() * H.order();
  std::vector<elt> t(static_cast<std::size_t>(n) * n);
  for (int x1 = 0; x1 < N.order(); ++x1)
    for (int h1 = 0; h1 < H.order(); ++h1)
      for (int x2 = 0; x2 < N.order(); ++x2)
        for (int h2 = 0; h2 < H.order(); ++h2) {
          int x = N.mul(x1, act[h1][x2]);
          int h = H.mul(h1, h2);
          t[static_cast<std::size_t>(x1 * H.order() + h1) * n + (x2 * H.order() + h2)] =
              x * H.order() + h;
        }
  return make_group_flat(n, std::move(t), name);
}

/// Direct product of cyclic groups of the given orders.
inline FiniteGroup abelian_group(const std::vector<int>& invariants,
                                 const std::string& name = "") {
  require(!invariants.empty(), "BadParameters", "need at least one factor");
  FiniteGroup G = cyclic_group(invariants[0]);
  for (std::size_t i = 1; i < invariants.size(); ++i)
    G = direct_product(G, cyclic_group(invariants[i]));
  if (!name.empty()) G.set_name(name);
  return G;
}

namespace detail {

inline FiniteGroup pauli_group_16() {
  // Central product D8 * Z4 identifying the central involutions: quotient of
  // D8 x Z4 by the order-2 subgroup generated by (r^2, z^2).
  FiniteGroup d8 = dihedral_group(4);
  FiniteGroup big = direct_product(d8, cyclic_group(4));
  elt r2 = 2;                      // r^2 in the dihedral coding j*m + i
  elt z2 = 2;                      // z^2 in Z4
  elt c = r2 * 4 + z2;             // (r^2, z^2) in the product coding
  Subgroup N = generated_subgroup(big, {c});
  FiniteGroup q = quotient(big, N).group;
  q.set_name("Pauli16");
  return q;
}

inline FiniteGroup group_16_3() {
  // (Z4 x Z2) : Z2 where the involution sends a -> a*b, b -> b.
  FiniteGroup N = direct_product(cyclic_group(4), cyclic_group(2));
  std::vector<elt> id(N.order());
  for (elt x = 0; x < N.order(); ++x) id[x] = x;
  std::vector<elt> phi(N.order());
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 2; ++b) phi[a * 2 + b] = a * 2 + ((b + a) % 2);
  FiniteGroup g = semidirect_explicit(N, cyclic_group(2), {id, phi}, "(Z4xZ2):Z2");
  return g;
}

inline FiniteGroup alternating_4() {
  // (Z2 x Z2) : Z3 with the 3-cycle permuting the involutions 1 -> 2 -> 3.
  FiniteGroup V = direct_product(cyclic_group(2), cyclic_group(2));
  std::vector<elt> id{0, 1, 2, 3};
  std::vector<elt> rho{0, 2, 3, 1};
  std::vector<elt> rho2{0, 3, 1, 2};
  return semidirect_explicit(V, cyclic_group(3), {id, rho, rho2}, "A4");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Catalog: every group of order <= 16, by explicit construction.  Entries are
// ordered by group order, then by the fixed per-order list below; names are
// stable identifiers used in reports.
// ---------------------------------------------------------------------------

inline const std::vector<FiniteGroup>& small_groups_catalog() {
  static const std::vector<FiniteGroup> cat = [] {
    std::vector<FiniteGroup> v;
    auto add = [&v](FiniteGroup g, const std::string& nm = "") {
      if (!nm.empty()) g.set_name(nm);
      v.push_back(std::move(g));
    };
    add(cyclic_group(1), "Z1");
    add(cyclic_group(2));
    add(cyclic_group(3));
    add(cyclic_group(4));
    add(abelian_group({2, 2}, "Z2xZ2"));
    add(cyclic_group(5));
    add(cyclic_group(6));
    add(dihedral_group(3), "S3");
    add(cyclic_group(7));
    add(cyclic_group(8));
    add(abelian_group({4, 2}, "Z4xZ2"));
    add(abelian_group({2, 2, 2}, "Z2xZ2xZ2"));
    add(dihedral_group(4), "D8");
    add(dicyclic_group(2), "Q8");
    add(cyclic_group(9));
    add(abelian_group({3, 3}, "Z3xZ3"));
    add(cyclic_group(10));
    add(dihedral_group(5), "D10");
    add(cyclic_group(11));
    add(cyclic_group(12));
    add(abelian_group({6, 2}, "Z6xZ2"));
    add(dihedral_group(6), "D12");
    add(dicyclic_group(3), "Dic12");
    add(detail::alternating_4(), "A4");
    add(cyclic_group(13));
    add(cyclic_group(14));
    add(dihedral_group(7), "D14");
    add(cyclic_group(15));
    add(cyclic_group(16));
    add(abelian_group({8, 2}, "Z8xZ2"));
    add(abelian_group({4, 4}, "Z4xZ4"));
    add(abelian_group({4, 2, 2}, "Z4xZ2xZ2"));
    add(abelian_group({2, 2, 2, 2}, "Z2^4"));
    add(dihedral_group(8), "D16");
    add(semidirect_cyclic(8, 2, 3, "QD16"));   // semidihedral
    add(dicyclic_group(4), "Q16");
    add(semidirect_cyclic(8, 2, 5, "M16"));    // modular group of order 16
    add(direct_product(dihedral_group(4), cyclic_group(2)), "D8xZ2");
    add(direct_product(dicyclic_group(2), cyclic_group(2)), "Q8xZ2");
    add(detail::pauli_group_16(), "Pauli16");
    add(semidirect_cyclic(4, 4, 3, "Z4:Z4"));
    add(detail::group_16_3(), "(Z4xZ2):Z2");
    return v;
  }();
  return cat;
}

inline std::vector<FiniteGroup> catalog_upto(int max_order) {
  std::vector<FiniteGroup> out;
  for (const auto& g : small_groups_catalog())
    if (g.order() <= max_order) out.push_back(g);
  return out;
}

inline std::vector<FiniteGroup> abelian_catalog_upto(int max_order) {
  std::vector<FiniteGroup> out;
  for (const auto& g : small_groups_catalog())
    if (g.order() <= max_order && g.abelian()) out.push_back(g);
  return out;
}

inline const FiniteGroup& catalog_group(const std::string& name) {
  for (const auto& g : small_groups_catalog())
    if (g.name() == name) return g;
  fail("BadParameters", "no catalog group named '" + name + "'");
}

/// Nilpotent groups of order <= max_order whose order has at least two prime
/// divisors, synthesized as direct products of catalog p-groups.  (A finite
/// group is nilpotent iff it is the direct product of its Sylow subgroups.)
inline std::vector<FiniteGroup> nilpotent_non_primary_upto(int max_order) {
  std::vector<FiniteGroup> out;
  const auto& cat = small_groups_catalog();
  auto is_p_group = [](const FiniteGroup& g, std::int64_t p) {
    std::int64_t n = g.order();
    while (n % p == 0) n /= p;
    return n == 1;
  };
  // Collect p-groups per prime, then form products over distinct primes.
  std::vector<std::int64_t> primes{2, 3, 5, 7, 11, 13};
  std::vector<std::vector<const FiniteGroup*>> by_prime(primes.size());
  for (const auto& g : cat)
    if (g.order() > 1)
      for (std::size_t i = 0; i < primes.size(); ++i)
        if (is_p_group(g, primes[i])) by_prime[i].push_back(&g);
  // Products of two p-groups with distinct primes (order <= 16 factors give
  // everything nilpotent and non-primary up to order 255; callers bound it).
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = i + 1; j < primes.size(); ++j)
      for (const auto* a : by_prime[i])
        for (const auto* b : by_prime[j])
          if (a->order() * b->order() <= max_order) {
            FiniteGroup g = direct_product(*a, *b);
            g.set_name(a->name() + "x" + b->name());
            out.push_back(std::move(g));
          }
  std::sort(out.begin(), out.end(), [](const FiniteGroup& x, const FiniteGroup& y) {
    return x.order() != y.order() ? x.order() < y.order() : x.name() < y.name();
  });
  return out;
}

}  // namespace cogalois
