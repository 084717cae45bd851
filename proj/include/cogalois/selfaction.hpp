#pragma once

// Deforming a group law along a self-action by automorphisms: when the
// twisted product x*y = x . w(x)^-1(y) is associative, the identity map is a
// bijective cocycle between the original group and its deformation, in both
// directions.

#include <numeric>

#include "cogalois/cocycle.hpp"

namespace cogalois {

/// A self-action is an operator group whose operators and module carry the
/// same coded group.
inline void require_self_action(const GammaGroup& om) {
  require(om.gamma.order() == om.g.order() && om.gamma.table() == om.g.table(),
          "BadParameters", "a self-action acts on the group itself");
}

namespace detail {
inline std::vector<std::vector<elt>> inverse_rows(const GammaGroup& om) {
  int n = om.gamma.order();
  std::vector<std::vector<elt>> inv(n, std::vector<elt>(n));
  for (elt x = 0; x < n; ++x)
    for (elt y = 0; y < n; ++y) inv[x][om.act(x, y)] = y;
  return inv;
}
}  // namespace detail

/// Adequacy of a self-action, decided two ways and cross-checked: the image
/// of gamma -> (gamma, w(gamma)^-1) must be closed under the twisted product,
/// which amounts to w(w(b)(c)) = w(b) o w(c) o w(b)^-1, and equivalently the
/// twisted product itself must be associative.
inline bool is_adequate(const GammaGroup& om) {
  require_self_action(om);
  const int n = om.gamma.order();
  auto inv = detail::inverse_rows(om);

  bool conj_rule = true;
  for (elt b = 0; b < n && conj_rule; ++b)
    for (elt c = 0; c < n && conj_rule; ++c)
      for (elt d = 0; d < n; ++d)
        if (om.act(om.act(b, c), d) != om.act(b, om.act(c, inv[b][d]))) {
          conj_rule = false;
          break;
        }

  auto bullet = [&](elt x, elt y) { return om.g.mul(x, inv[x][y]); };
  bool assoc = true;
  for (elt x = 0; x < n && assoc; ++x)
    for (elt y = 0; y < n && assoc; ++y)
      for (elt z = 0; z < n; ++z)
        if (bullet(bullet(x, y), z) != bullet(x, bullet(y, z))) {
          assoc = false;
          break;
        }

  if (conj_rule != assoc) fatal_disagreement("adequacy criteria disagree");
  return assoc;
}

/// The deformed group (same element set, twisted product).  The identity and
/// inverses are revalidated by the group constructor.
inline FiniteGroup deform(const GammaGroup& om, const std::string& name = "") {
  require(is_adequate(om), "NotAdequate",
          "only adequate self-actions deform the group law");
  const int n = om.gamma.order();
  auto inv = detail::inverse_rows(om);
  std::vector<elt> tab(static_cast<std::size_t>(n) * n);
  for (elt x = 0; x < n; ++x)
    for (elt y = 0; y < n; ++y)
      tab[static_cast<std::size_t>(x) * n + y] = om.g.mul(x, inv[x][y]);
  return make_group_flat(n, std::move(tab),
                         name.empty() ? om.g.name() + "_deformed" : name);
}

/// The original group acting on its deformation through the self-action, with
/// the identity map as cocycle.  That the action rows are automorphisms of the
/// twisted law, and that the identity satisfies the cocycle law, are theorems
/// for adequate self-actions; the constructors revalidate both.
inline Triple forward_triple(const GammaGroup& om) {
  FiniteGroup x = deform(om);
  const int n = om.gamma.order();
  std::vector<std::vector<elt>> rows(n, std::vector<elt>(n));
  for (elt s = 0; s < n; ++s)
    for (elt y = 0; y < n; ++y) rows[s][y] = om.act(s, y);
  auto gg = std::make_shared<const GammaGroup>(
      make_gamma_group(om.gamma, std::move(x), std::move(rows)));
  std::vector<elt> id(n);
  std::iota(id.begin(), id.end(), 0);
  return make_triple(gg, std::move(id));
}

/// The deformation acting back on the original group through the inverted
/// automorphisms, again with the identity map as cocycle.  That x -> w(x)^-1
/// is an action of the twisted law follows from adequacy (the twisted product
/// maps to w(y) o w(x) under w); validated by the constructors.
inline Triple backward_triple(const GammaGroup& om) {
  FiniteGroup x = deform(om);
  const int n = om.gamma.order();
  auto gg = std::make_shared<const GammaGroup>(
      make_gamma_group(std::move(x), om.gamma, detail::inverse_rows(om)));
  std::vector<elt> id(n);
  std::iota(id.begin(), id.end(), 0);
  return make_triple(gg, std::move(id));
}

/// The self-action x -> (y -> u^x y) of Z/n.  Well-definedness forces
/// u^n = 1 mod n; the constructor rejects other units.
inline GammaGroup cyclic_self_action(int n, std::int64_t u) {
  require(n >= 1, "BadParameters", "modulus must be positive");
  require(gcd_i64(((u % n) + n) % n, n) == 1, "BadParameters",
          "multiplier must be a unit");
  FiniteGroup zn = cyclic_group(n);
  std::vector<std::vector<elt>> rows(n, std::vector<elt>(n));
  std::int64_t pw = 1;
  for (elt x = 0; x < n; ++x) {
    for (elt y = 0; y < n; ++y)
      rows[x][y] = static_cast<elt>((pw * y) % n);
    pw = (pw * (((u % n) + n) % n)) % n;
  }
  return make_gamma_group(zn, zn, std::move(rows));
}

/// The units u of Z/n whose self-action deforms the group law, computed by
/// three independent routes that must agree:
///   (a) u^gcd(n, u-1) = 1 mod n,
///   (b) the prime-local reading of (a): with P the odd primes dividing the
///       modulus plus 2 when 4 divides it, and r = gcd(n, u-1), require r > 1;
///       v_p(n) <= 2 v_p(r) for p in P_r; for odd p in P_n outside P_r the
///       order of u mod p^v_p(n) must be in [2, gcd(r, p-1)] and divide it;
///       and if 2 is in P_n outside P_r then u = -1 mod 2^(v_2(n)-1),
///   (c) associativity of the twisted product in exponent form:
///       u^y = u^(u^-x y) mod n for all x, y (only units with u^n = 1 act).
/// For small moduli a fourth route builds the self-action and tests adequacy
/// directly.
inline std::vector<int> adequate_units(int n, bool with_brute = true) {
  require(n >= 1, "BadParameters", "modulus must be positive");
  if (n == 1) return {0};  // the zero residue: the only unit mod 1
  std::vector<int> via_criterion, via_local, via_assoc;

  auto pset = [](std::int64_t m) {
    std::vector<std::int64_t> ps;
    for (std::int64_t p : prime_factors(m))
      if (p != 2) ps.push_back(p);
    if (m % 4 == 0) ps.push_back(2);
    return ps;
  };
  const auto pn = pset(n);

  for (int u = 1; u < n; ++u) {
    if (gcd_i64(u, n) != 1) continue;
    const std::int64_t r = gcd_i64(n, u - 1);

    if (powmod_i64(u, r, n) == 1) via_criterion.push_back(u);

    bool ok = r != 1;
    const auto pr = pset(r);
    for (std::int64_t p : pn) {
      if (!ok) break;
      bool in_pr = std::find(pr.begin(), pr.end(), p) != pr.end();
      if (in_pr) {
        ok = valuation(n, p) <= 2 * valuation(r, p);
      } else if (p != 2) {
        std::int64_t pv = 1;
        for (int i = 0; i < valuation(n, p); ++i) pv *= p;
        std::int64_t o = mul_order_mod(u % pv, pv);
        ok = o >= 2 && gcd_i64(r, p - 1) % o == 0;
      } else {
        std::int64_t half = std::int64_t(1) << (valuation(n, 2) - 1);
        ok = (u % half) == half - 1;
      }
    }
    if (ok) via_local.push_back(u);

    if (powmod_i64(u, n, n) == 1) {
      // u^n = 1, so exponents of u live mod n and u^-1 = u^(n-1)
      std::vector<int> pw(n);
      pw[0] = 1;
      for (int k = 1; k < n; ++k)
        pw[k] = static_cast<int>((static_cast<std::int64_t>(pw[k - 1]) * u) % n);
      const int uinv = pw[n - 1];
      bool assoc = true;
      std::int64_t ux = 1;  // u^-x = uinv^x
      for (int x = 0; x < n && assoc; ++x) {
        for (int y = 0; y < n; ++y)
          if (pw[y] != pw[static_cast<int>((ux * y) % n)]) {
            assoc = false;
            break;
          }
        ux = (ux * uinv) % n;
      }
      if (assoc) via_assoc.push_back(u);
    }
  }

  if (via_criterion != via_local)
    fatal_disagreement("prime-local description of the adequate units is off");
  if (via_criterion != via_assoc)
    fatal_disagreement("twisted associativity disagrees with the unit criterion");
  if (with_brute && n <= 64) {
    std::vector<int> via_group;
    for (int u = 1; u < n; ++u) {
      if (gcd_i64(u, n) != 1 || powmod_i64(u, n, n) != 1) continue;
      if (is_adequate(cyclic_self_action(n, u))) via_group.push_back(u);
    }
    if (via_criterion != via_group)
      fatal_disagreement("direct adequacy sweep disagrees with the unit criterion");
  }
  return via_criterion;
}

struct DeformationClasses {
  std::vector<FiniteGroup> reps;  // pairwise non-isomorphic deformations
  std::vector<int> rep_of;        // per self-action: index into reps, -1 if inadequate
};

/// Every self-action of G (hom into Aut G), filtered for adequacy, with the
/// deformed groups collected up to isomorphism.  The identity action always
/// contributes G itself.
inline DeformationClasses deformation_classes(const FiniteGroup& G) {
  DeformationClasses out;
  for (const GammaGroup& om : all_actions(G, G)) {
    if (!is_adequate(om)) {
      out.rep_of.push_back(-1);
      continue;
    }
    FiniteGroup d = deform(om);
    int found = -1;
    for (std::size_t i = 0; i < out.reps.size() && found < 0; ++i)
      if (isomorphic(out.reps[i], d)) found = static_cast<int>(i);
    if (found < 0) {
      found = static_cast<int>(out.reps.size());
      out.reps.push_back(std::move(d));
    }
    out.rep_of.push_back(found);
  }
  bool has_self = false;
  for (const FiniteGroup& r : out.reps)
    if (isomorphic(r, G)) has_self = true;
  if (!has_self) fatal_disagreement("the trivial self-action went missing");
  return out;
}

}  // namespace cogalois
