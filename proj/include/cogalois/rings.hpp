#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "cogalois/families.hpp"
#include "cogalois/kneser.hpp"

namespace cogalois {

// ---------------------------------------------------------------------------
// Finite commutative rings.  Elements are indices 0..size-1 with the zero
// element at index 0; the additive group is a FiniteGroup and multiplication
// a flattened table.  The chain-ring builder produces the rings
//
//     (Z/p^n)[x] / (x^e - p(a_{e-1} x^{e-1} + ... + a_0),  p^{n-1} x^t)
//
// with a_0 a unit, in the coefficient normal form c_0 + c_1 T + ... +
// c_{e-1} T^{e-1} where c_i runs over Z/p^n for i < t and over Z/p^{n-1} for
// i >= t.  Indices encode the coefficient vector in little-endian mixed
// radix, so element 1 is the unity and (for e >= 2) element p^n is T.
// ---------------------------------------------------------------------------

struct FiniteRing {
  FiniteGroup add;               // additive group, zero at index 0
  std::vector<elt> mul_flat;     // multiplication, row-major
  elt one = -1;                  // unity
  std::vector<char> unit;        // unit[a] != 0 iff a is invertible
  std::string name;

  int size() const { return add.order(); }
  elt plus(elt a, elt b) const { return add.mul(a, b); }
  elt minus(elt a) const { return add.inv(a); }
  elt times(elt a, elt b) const {
    return mul_flat[static_cast<std::size_t>(a) * add.order() + b];
  }
  bool is_unit(elt a) const { return unit[a] != 0; }
};

/// Validates the tables as a commutative ring with unity and assembles the
/// FiniteRing.  The additive group must be abelian with its identity at
/// index 0 (NotAbelian), multiplication must be commutative (NotAbelian),
/// associative (NotAssociative) and distribute over addition
/// (BadParameters), and a unity must exist (NoIdentity).
inline FiniteRing make_ring(FiniteGroup add,
                            const std::vector<std::vector<elt>>& mul_rows,
                            const std::string& name = "") {
  const int n = add.order();
  require(n >= 2, "BadParameters", "ring must have at least two elements");
  for (elt a = 0; a < n; ++a)
    for (elt b = 0; b < a; ++b)
      require(add.mul(a, b) == add.mul(b, a), "NotAbelian",
              "addition must be commutative");
  require(static_cast<int>(mul_rows.size()) == n, "BadParameters",
          "multiplication needs one row per element");
  std::vector<elt> flat;
  flat.reserve(static_cast<std::size_t>(n) * n);
  for (const auto& row : mul_rows) {
    require(static_cast<int>(row.size()) == n, "BadParameters",
            "multiplication rows must have one entry per element");
    for (elt v : row) {
      require(v >= 0 && v < n, "BadParameters",
              "multiplication entry out of range: " + std::to_string(v));
      flat.push_back(v);
    }
  }
  auto times = [&](elt a, elt b) {
    return flat[static_cast<std::size_t>(a) * n + b];
  };
  for (elt a = 0; a < n; ++a)
    for (elt b = 0; b < a; ++b)
      require(times(a, b) == times(b, a), "NotAbelian",
              "multiplication must be commutative");
  for (elt a = 0; a < n; ++a)
    for (elt b = 0; b < n; ++b)
      for (elt c = 0; c < n; ++c)
        require(times(times(a, b), c) == times(a, times(b, c)),
                "NotAssociative",
                "(" + std::to_string(a) + "*" + std::to_string(b) + ")*" +
                    std::to_string(c) + " != " + std::to_string(a) + "*(" +
                    std::to_string(b) + "*" + std::to_string(c) + ")");
  for (elt a = 0; a < n; ++a)
    for (elt b = 0; b < n; ++b)
      for (elt c = 0; c < n; ++c)
        require(times(a, add.mul(b, c)) == add.mul(times(a, b), times(a, c)),
                "BadParameters",
                "multiplication does not distribute over addition at " +
                    std::to_string(a) + ", " + std::to_string(b) + ", " +
                    std::to_string(c));
  elt one = -1;
  for (elt e = 0; e < n && one < 0; ++e) {
    bool ok = true;
    for (elt x = 0; x < n && ok; ++x) ok = times(e, x) == x;
    if (ok) one = e;
  }
  require(one >= 0, "NoIdentity", "ring has no unity");

  FiniteRing R;
  R.add = std::move(add);
  R.mul_flat = std::move(flat);
  R.one = one;
  R.name = name.empty() ? "ring of order " + std::to_string(n) : name;
  R.unit.assign(n, 0);
  for (elt a = 0; a < n; ++a)
    for (elt b = 0; b < n; ++b)
      if (R.times(a, b) == one) {
        R.unit[a] = 1;
        break;
      }
  return R;
}

/// The ring Z/n with the natural coding.
inline FiniteRing ring_z_mod(int n) {
  require(n >= 2, "BadParameters", "modulus must be >= 2");
  std::vector<std::vector<elt>> rows(n, std::vector<elt>(n));
  for (elt a = 0; a < n; ++a)
    for (elt b = 0; b < n; ++b)
      rows[a][b] = static_cast<elt>((static_cast<long long>(a) * b) % n);
  return make_ring(cyclic_group(n), rows, "Z/" + std::to_string(n));
}

/// Chain ring (Z/p^n)[x]/(x^e - p(a_{e-1}x^{e-1}+...+a_0), p^{n-1}x^t) with
/// a_0 a unit mod p.  Requires 1 <= t <= e and, when n = 1, t = e (otherwise
/// the truncation relation would collapse the quotient below degree e).  The
/// result is a local ring of order p^(nt+(n-1)(e-t)) whose maximal ideal is
/// generated by the class T of x and has nilpotency index (n-1)e + t; those
/// facts are re-derived from the finished tables and any mismatch aborts.
inline FiniteRing ring_from_eisenstein(int p, int n, int e, int t,
                                       const std::vector<int>& a) {
  require(p >= 2, "BadParameters", "characteristic base must be >= 2");
  for (int d = 2; d * d <= p; ++d)
    require(p % d != 0, "BadParameters",
            std::to_string(p) + " is not prime");
  require(n >= 1, "BadParameters", "coefficient exponent must be >= 1");
  require(e >= 1, "BadParameters", "degree must be >= 1");
  require(t >= 1 && t <= e, "BadParameters",
          "truncation level must lie between 1 and the degree");
  require(n >= 2 || t == e, "BadParameters",
          "truncation below the degree needs coefficient exponent >= 2");
  require(static_cast<int>(a.size()) == e, "BadParameters",
          "need one lower coefficient per degree");
  require(a[0] % p != 0, "BadParameters",
          "constant lower coefficient must be a unit");

  int64_t pn = 1;
  for (int i = 0; i < n; ++i) pn *= p;
  std::vector<int64_t> rad(e);
  int64_t size64 = 1;
  for (int i = 0; i < e; ++i) {
    rad[i] = i < t ? pn : pn / p;
    size64 *= rad[i];
    require(size64 <= 4096, "OrderBoundExceeded",
            "ring order exceeds 4096");
  }
  const int sz = static_cast<int>(size64);

  auto decode = [&](elt idx) {
    std::vector<int64_t> c(e);
    int64_t v = idx;
    for (int i = 0; i < e; ++i) {
      c[i] = v % rad[i];
      v /= rad[i];
    }
    return c;
  };
  auto encode = [&](const std::vector<int64_t>& c) {
    int64_t idx = 0;
    for (int i = e - 1; i >= 0; --i) idx = idx * rad[i] + (((c[i] % rad[i]) + rad[i]) % rad[i]);
    return static_cast<elt>(idx);
  };

  // Addition is coefficientwise.
  std::vector<elt> add_flat(static_cast<std::size_t>(sz) * sz);
  for (elt x = 0; x < sz; ++x) {
    auto cx = decode(x);
    for (elt y = 0; y < sz; ++y) {
      auto cy = decode(y);
      std::vector<int64_t> s(e);
      for (int i = 0; i < e; ++i) s[i] = cx[i] + cy[i];
      add_flat[static_cast<std::size_t>(x) * sz + y] = encode(s);
    }
  }

  // Multiplication: polynomial product, then substitute
  // T^d -> p * sum_i a_i T^(d-e+i) from the top degree down.
  std::vector<std::vector<elt>> mul_rows(sz, std::vector<elt>(sz));
  std::vector<int64_t> am(e);
  for (int i = 0; i < e; ++i) am[i] = ((a[i] % pn) + pn) % pn;
  for (elt x = 0; x < sz; ++x) {
    auto cx = decode(x);
    for (elt y = 0; y <= x; ++y) {
      auto cy = decode(y);
      std::vector<int64_t> buf(2 * e - 1, 0);
      for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j)
          buf[i + j] = (buf[i + j] + cx[i] * cy[j]) % pn;
      for (int d = 2 * e - 2; d >= e; --d) {
        int64_t c = buf[d] % pn;
        buf[d] = 0;
        if (c == 0) continue;
        for (int i = 0; i < e; ++i)
          buf[d - e + i] = (buf[d - e + i] + c * p % pn * am[i]) % pn;
      }
      buf.resize(e);
      elt v = encode(buf);
      mul_rows[x][y] = v;
      mul_rows[y][x] = v;
    }
  }

  std::string name;
  if (n == 1) {
    name = "F" + std::to_string(p) + "[x]/(x^" + std::to_string(e) + ")";
  } else if (e == 1) {
    name = "Z/" + std::to_string(pn);
  } else {
    name = "chain(p=" + std::to_string(p) + ",n=" + std::to_string(n) +
           ",e=" + std::to_string(e) + ",t=" + std::to_string(t) + ")";
  }
  FiniteRing R = make_ring(
      make_group_flat(sz, std::move(add_flat), name + " additive"),
      mul_rows, name);

  // Independent re-derivation of the chain-ring facts from the tables.
  std::vector<elt> nonunits;
  for (elt v = 0; v < sz; ++v)
    if (!R.is_unit(v)) nonunits.push_back(v);
  if (static_cast<int>(nonunits.size()) * p != sz)
    fatal_disagreement("chain ring residue field is not of prime order");
  elt theta = e >= 2 ? static_cast<elt>(pn)
                     : static_cast<elt>((static_cast<int64_t>(p) * am[0]) % pn);
  std::vector<elt> principal;
  for (elt v = 0; v < sz; ++v) principal.push_back(R.times(theta, v));
  std::sort(principal.begin(), principal.end());
  principal.erase(std::unique(principal.begin(), principal.end()),
                  principal.end());
  if (principal != nonunits)
    fatal_disagreement("chain ring maximal ideal is not generated by T");
  int m = (n - 1) * e + t;
  std::vector<elt> pw{R.one};
  int k = 0;
  while (!(pw.size() == 1 && pw[0] == 0)) {
    for (auto& v : pw) v = R.times(v, theta);
    std::sort(pw.begin(), pw.end());
    pw.erase(std::unique(pw.begin(), pw.end()), pw.end());
    ++k;
    if (k > m + 1) break;
  }
  if (k != m)
    fatal_disagreement("chain ring nilpotency index is " + std::to_string(k) +
                       ", expected " + std::to_string(m));
  return R;
}

/// The field with p^f elements as F_p[x]/(g) for the first monic irreducible
/// g of degree f in coefficient-code order.  Elements are coded little-endian
/// base p, so element 1 is the unity and element p the class of x when
/// f >= 2.  Irreducibility is established by the derangement of x under the
/// p-power map (no fixed subfield below degree f) and then cross-checked on
/// the finished tables: every nonzero element must be invertible.
inline FiniteRing finite_field(int p, int f, int bound = 1024) {
  require(p >= 2, "BadParameters", "characteristic must be >= 2");
  for (int d = 2; d * d <= p; ++d)
    require(p % d != 0, "BadParameters", std::to_string(p) + " is not prime");
  require(f >= 1, "BadParameters", "degree must be >= 1");
  std::int64_t q = 1;
  for (int i = 0; i < f; ++i) {
    q *= p;
    require(q <= bound, "OrderBoundExceeded",
            "field order exceeds " + std::to_string(bound));
  }
  if (f == 1) return ring_z_mod(p);
  const int sz = static_cast<int>(q);

  using Poly = std::vector<int>;  // degree < f, coefficients mod p
  auto mulmod = [&](const Poly& u, const Poly& v, const Poly& g) {
    std::vector<int> buf(2 * f - 1, 0);
    for (int i = 0; i < f; ++i)
      for (int j = 0; j < f; ++j) buf[i + j] = (buf[i + j] + u[i] * v[j]) % p;
    for (int d = 2 * f - 2; d >= f; --d) {
      int c = buf[d];
      buf[d] = 0;
      if (!c) continue;
      for (int i = 0; i < f; ++i)
        buf[d - f + i] = ((buf[d - f + i] - c * g[i]) % p + p) % p;
    }
    buf.resize(f);
    return buf;
  };
  auto frobenius = [&](Poly u, const Poly& g) {  // u^p mod g
    Poly acc(f, 0);
    acc[0] = 1;
    int k = p;
    while (k) {
      if (k & 1) acc = mulmod(acc, u, g);
      u = mulmod(u, u, g);
      k >>= 1;
    }
    return acc;
  };
  auto degree = [&](const Poly& u) {
    for (int d = static_cast<int>(u.size()) - 1; d >= 0; --d)
      if (u[d]) return d;
    return -1;
  };
  auto coprime_with_g = [&](Poly u, const Poly& g) {
    // gcd(u, x^f + g_low) over F_p; g enters once as the top modulus.
    Poly a(f + 1);
    for (int i = 0; i < f; ++i) a[i] = g[i];
    a[f] = 1;
    Poly b = u;
    b.resize(f + 1, 0);
    while (true) {
      int db = degree(b);
      if (db < 0) return degree(a) == 0;
      int da = degree(a);
      if (da < db) std::swap(a, b);
      da = degree(a);
      db = degree(b);
      int scale =
          static_cast<int>(a[da] * powmod_i64(b[db], p - 2, p) % p);
      for (int i = 0; i <= db; ++i)
        a[da - db + i] = ((a[da - db + i] - scale * b[i]) % p + p) % p;
    }
  };

  for (int code = 1; code < sz; ++code) {
    Poly g(f);
    int v = code;
    for (int i = 0; i < f; ++i) {
      g[i] = v % p;
      v /= p;
    }
    if (g[0] == 0) continue;  // x divides
    // x^(p^k) mod g for k = 1..f
    Poly x(f, 0);
    x[1] = 1;
    bool ok = true;
    std::vector<Poly> at(f + 1);
    at[0] = x;
    for (int k = 1; k <= f; ++k) at[k] = frobenius(at[k - 1], g);
    if (at[f] != x) continue;  // x not fixed by the degree-f power map
    for (std::int64_t ell : prime_factors(f)) {
      Poly diff = at[f / ell];
      diff[1] = ((diff[1] - 1) % p + p) % p;
      if (degree(diff) < 0 || !coprime_with_g(diff, g)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;

    // Build the quotient tables for the winner and validate them fully.
    auto decode = [&](elt idx) {
      Poly c(f);
      int w = idx;
      for (int i = 0; i < f; ++i) {
        c[i] = w % p;
        w /= p;
      }
      return c;
    };
    auto encode = [&](const Poly& c) {
      int idx = 0;
      for (int i = f - 1; i >= 0; --i) idx = idx * p + c[i];
      return static_cast<elt>(idx);
    };
    std::vector<std::vector<elt>> rows(sz, std::vector<elt>(sz));
    for (elt u = 0; u < sz; ++u) {
      auto cu = decode(u);
      for (elt w = 0; w <= u; ++w) {
        elt prod = encode(mulmod(cu, decode(w), g));
        rows[u][w] = prod;
        rows[w][u] = prod;
      }
    }
    FiniteRing R = make_ring(abelian_group(std::vector<int>(f, p)), rows,
                             "F" + std::to_string(q));
    for (elt u = 1; u < sz; ++u)
      if (!R.is_unit(u))
        fatal_disagreement("irreducibility test passed but a nonzero "
                           "element is not invertible");
    return R;
  }
  fatal_disagreement("no irreducible polynomial of the requested degree");
}

/// The set of nonunits, provided it is closed under addition and hence the
/// unique maximal ideal; throws NotLocal otherwise.  Sorted ascending.
inline std::vector<elt> maximal_ideal(const FiniteRing& R) {
  std::vector<elt> nonunits;
  for (elt v = 0; v < R.size(); ++v)
    if (!R.is_unit(v)) nonunits.push_back(v);
  for (elt x : nonunits)
    for (elt y : nonunits)
      require(!R.is_unit(R.plus(x, y)), "NotLocal",
              R.name + ": nonunits " + std::to_string(x) + " and " +
                  std::to_string(y) + " sum to a unit");
  return nonunits;
}

/// Least k with I^k = 0, where I is given as a sorted ideal (the powers are
/// closed additively because I is an ideal, so plain products suffice).
inline int nilpotency_index(const FiniteRing& R, const std::vector<elt>& ideal) {
  std::vector<elt> cur = ideal;
  int k = 1;
  while (!(cur.size() == 1 && cur[0] == 0)) {
    std::vector<elt> next;
    for (elt x : cur)
      for (elt y : ideal) next.push_back(R.times(x, y));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (next == cur)
      fatal_disagreement("ideal power chain stalls before reaching zero");
    cur = std::move(next);
    ++k;
  }
  return k;
}

/// Elements killing every member of the given set.
inline std::vector<elt> annihilator(const FiniteRing& R,
                                    const std::vector<elt>& set) {
  std::vector<elt> out;
  for (elt v = 0; v < R.size(); ++v) {
    bool kills = true;
    for (elt x : set)
      if (R.times(v, x) != 0) {
        kills = false;
        break;
      }
    if (kills) out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// The unit action of a finite local ring: the group 1 + m of principal units
// acts on the additive group by multiplication.  This is the setting in
// which the minimal non-Kneser classification for abelian p-groups lives,
// with the additive group playing the module and 1 + m the operator group.
// ---------------------------------------------------------------------------

struct RingContext {
  FiniteRing ring;
  std::shared_ptr<const GammaGroup> ctx;
  std::vector<elt> gamma_elems;  // operator index -> ring element 1 + lambda
};

/// Operator group on the listed unit elements (the identity must come
/// first), acting on the additive group by ring multiplication.
inline GammaGroup multiplicative_operator_group(const FiniteRing& R,
                                                const std::vector<elt>& elems,
                                                const std::string& gname) {
  const int k = static_cast<int>(elems.size());
  std::vector<int> pos(R.size(), -1);
  for (int i = 0; i < k; ++i) pos[elems[i]] = i;
  std::vector<elt> flat(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int p = pos[R.times(elems[i], elems[j])];
      if (p < 0)
        fatal_disagreement("unit set fails to close under product");
      flat[static_cast<std::size_t>(i) * k + j] = p;
    }
  FiniteGroup gamma = make_group_flat(k, std::move(flat), gname);
  std::vector<std::vector<elt>> rows(k, std::vector<elt>(R.size()));
  for (int i = 0; i < k; ++i)
    for (elt x = 0; x < R.size(); ++x) rows[i][x] = R.times(elems[i], x);
  FiniteGroup g = R.add;
  g.set_name(R.name + " additive");
  return make_gamma_group(std::move(gamma), std::move(g), std::move(rows));
}

/// Operator-group context with Gamma = 1 + m acting on the additive group by
/// ring multiplication.  Operator index 0 is the unity; the remaining
/// principal units follow in increasing element order.
inline RingContext ring_context(FiniteRing R) {
  auto mid = maximal_ideal(R);
  std::vector<elt> gamma_elems;
  gamma_elems.push_back(R.one);
  for (elt lam : mid)
    if (lam != 0) gamma_elems.push_back(R.plus(R.one, lam));
  std::sort(gamma_elems.begin() + 1, gamma_elems.end());

  RingContext rc;
  rc.ctx = std::make_shared<const GammaGroup>(multiplicative_operator_group(
      R, gamma_elems, R.name + " principal units"));
  rc.ring = std::move(R);
  rc.gamma_elems = std::move(gamma_elems);
  return rc;
}

/// All homomorphisms from the operator group into the annihilator of the
/// maximal ideal (the fixed submodule of the unit action), as value vectors
/// over operator indices.  Built by extending generator images along the
/// Cayley graph and re-validated pointwise.
inline std::vector<std::vector<elt>> socle_homs(const RingContext& rc) {
  const FiniteRing& R = rc.ring;
  const FiniteGroup& gamma = rc.ctx->gamma;
  auto soc = annihilator(R, maximal_ideal(R));
  auto gens = greedy_generators(gamma);
  const int n = gamma.order();

  std::vector<std::vector<elt>> out;
  std::vector<std::size_t> pick(gens.size(), 0);
  for (;;) {
    std::vector<elt> chi(n, -1);
    chi[0] = 0;
    std::vector<elt> frontier{0};
    bool ok = true;
    while (ok && !frontier.empty()) {
      elt x = frontier.back();
      frontier.pop_back();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        elt y = gamma.mul(x, gens[i]);
        elt v = R.plus(chi[x], soc[pick[i]]);
        if (chi[y] < 0) {
          chi[y] = v;
          frontier.push_back(y);
        } else if (chi[y] != v) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      for (elt x = 0; x < n && ok; ++x)
        for (elt y = 0; y < n && ok; ++y)
          ok = chi[gamma.mul(x, y)] == R.plus(chi[x], chi[y]);
      if (ok) out.push_back(std::move(chi));
    }
    std::size_t i = 0;
    while (i < gens.size() && pick[i] + 1 == soc.size()) pick[i++] = 0;
    if (i == gens.size()) break;
    ++pick[i];
  }
  return out;
}

/// Unit-subgroup triple over a finite field: Gamma is the order-r subgroup
/// of the multiplicative group of F_q, where q = p^f and f is the order of
/// p modulo r, acting on the additive group by multiplication with
/// eta(u) = u - 1.  Because f is minimal, no proper subfield contains the
/// subgroup, the cocycle generates, and the triple is always minimal
/// non-Kneser; that is asserted on the finished triple.
inline Triple field_triple(int p, int r, int bound = 1024) {
  require(p >= 2, "BadParameters", "characteristic must be >= 2");
  for (int d = 2; d * d <= p; ++d)
    require(p % d != 0, "BadParameters", std::to_string(p) + " is not prime");
  require(r >= 2, "BadParameters", "subgroup order must be >= 2");
  require(gcd_i64(p, r) == 1, "BadParameters",
          "subgroup order must be coprime to the characteristic");
  const int f = static_cast<int>(mul_order_mod(p, r));
  require(p != 2 || f >= 2, "BadParameters",
          "characteristic 2 needs a proper extension field");
  FiniteRing R = finite_field(p, f, bound);

  std::vector<elt> mu{R.one};
  for (elt x = 1; x < R.size(); ++x) {
    if (x == R.one) continue;
    elt pw = R.one;
    for (int i = 0; i < r; ++i) pw = R.times(pw, x);
    if (pw == R.one) mu.push_back(x);
  }
  std::sort(mu.begin() + 1, mu.end());
  if (static_cast<int>(mu.size()) != r)
    fatal_disagreement("unit subgroup has the wrong order");

  GammaGroup gg = multiplicative_operator_group(
      R, mu, "mu" + std::to_string(r) + " in " + R.name);
  std::vector<elt> eta(r);
  for (int i = 0; i < r; ++i) eta[i] = R.plus(mu[i], R.minus(R.one));
  Triple t = make_triple(gg, eta);
  auto lat = all_ideals(*t.ctx);
  if (!is_mnk(t, &lat))
    fatal_disagreement("field unit triple is not minimal non-Kneser");
  return t;
}

/// All homomorphisms from a finite abelian group into Z/e, with e the group
/// exponent, as value vectors with entries in 0..e-1.  The count must equal
/// the group order and that is asserted (finite abelian groups are their
/// own character duals).
inline std::vector<std::vector<elt>> additive_characters(const FiniteGroup& A) {
  require(A.abelian(), "NotAbelian", "characters need an abelian group");
  const int n = A.order();
  std::int64_t e = 1;
  for (elt x = 0; x < n; ++x) e = std::lcm(e, std::int64_t(A.element_order(x)));
  const int ord = static_cast<int>(e);
  auto gens = greedy_generators(A);
  std::vector<std::vector<elt>> out;
  if (gens.empty()) {
    out.push_back(std::vector<elt>(n, 0));
    return out;
  }
  std::vector<int> pick(gens.size(), 0);
  for (;;) {
    std::vector<elt> chi(n, -1);
    chi[0] = 0;
    std::vector<elt> frontier{0};
    bool ok = true;
    while (ok && !frontier.empty()) {
      elt x = frontier.back();
      frontier.pop_back();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        elt y = A.mul(x, gens[i]);
        elt v = static_cast<elt>((chi[x] + pick[i]) % ord);
        if (chi[y] < 0) {
          chi[y] = v;
          frontier.push_back(y);
        } else if (chi[y] != v) {
          ok = false;
          break;
        }
      }
    }
    if (ok) {
      for (elt x = 0; x < n && ok; ++x)
        for (elt y = 0; y < n && ok; ++y)
          ok = chi[A.mul(x, y)] == (chi[x] + chi[y]) % ord;
      if (ok) out.push_back(std::move(chi));
    }
    std::size_t i = 0;
    while (i < gens.size() && pick[i] + 1 == ord) pick[i++] = 0;
    if (i == gens.size()) break;
    ++pick[i];
  }
  if (static_cast<int>(out.size()) != n)
    fatal_disagreement("character count differs from the group order");
  return out;
}

/// A character of the additive group whose multiplication pairing
/// (x, y) -> chi(xy) is nondegenerate, or empty when none exists.  Such a
/// character exhibits the additive group as its own character dual as a
/// module over the ring, which is what the abelian minimal non-Kneser
/// structure theory demands of the module.
inline std::vector<elt> dual_pairing_character(const FiniteRing& R) {
  for (const auto& chi : additive_characters(R.add)) {
    bool faithful = true;
    for (elt x = 1; x < R.size() && faithful; ++x) {
      bool hit = false;
      for (elt y = 0; y < R.size() && !hit; ++y) hit = chi[R.times(x, y)] != 0;
      faithful = hit;
    }
    if (faithful) return chi;
  }
  return {};
}

// ---------------------------------------------------------------------------
// Minimal non-Kneser census for the unit action.  Two cocycles land in the
// same class when they differ by a unit scaling or by adding a hom into the
// fixed submodule; unit scaling is an isomorphism of triples, so it can
// never leave the minimal set, and that invariance is asserted.
// ---------------------------------------------------------------------------

struct RingMnkReport {
  int cocycles = 0;
  int injective = 0;
  int mnk = 0;
  int orbits = 0;
  std::vector<std::vector<elt>> minimal;  // sorted lexicographically
};

inline RingMnkReport ring_mnk_report(const RingContext& rc) {
  const FiniteRing& R = rc.ring;
  auto zs = enumerate_cocycles(*rc.ctx);
  auto lat = all_ideals(*rc.ctx);

  RingMnkReport rep;
  rep.cocycles = static_cast<int>(zs.size());
  for (const auto& eta : zs) {
    std::set<elt> values(eta.begin(), eta.end());
    if (static_cast<int>(values.size()) == rc.ctx->gamma.order())
      ++rep.injective;
    Triple t = make_triple(rc.ctx, eta);
    bool minimal_nk = is_mnk(t, &lat);
    if (minimal_nk && static_cast<int>(values.size()) != rc.ctx->gamma.order())
      fatal_disagreement("a minimal non-Kneser unit cocycle must be injective");
    if (minimal_nk) rep.minimal.push_back(eta);
  }
  rep.mnk = static_cast<int>(rep.minimal.size());
  if (rep.mnk == 0) return rep;

  std::map<std::vector<elt>, int> index;
  for (int i = 0; i < rep.mnk; ++i) index[rep.minimal[i]] = i;
  std::vector<elt> units;
  for (elt u = 0; u < R.size(); ++u)
    if (R.is_unit(u)) units.push_back(u);
  auto homs = socle_homs(rc);

  const int n = rc.ctx->gamma.order();
  std::vector<std::vector<int>> adj(rep.mnk);
  for (int i = 0; i < rep.mnk; ++i) {
    for (elt u : units) {
      std::vector<elt> scaled(n);
      for (int s = 0; s < n; ++s) scaled[s] = R.times(u, rep.minimal[i][s]);
      auto it = index.find(scaled);
      if (it == index.end())
        fatal_disagreement("unit scaling left the minimal non-Kneser set");
      adj[i].push_back(it->second);
    }
    for (const auto& chi : homs) {
      std::vector<elt> shifted(n);
      for (int s = 0; s < n; ++s) shifted[s] = R.plus(rep.minimal[i][s], chi[s]);
      auto it = index.find(shifted);
      if (it != index.end()) adj[i].push_back(it->second);
    }
  }
  std::vector<char> seen(rep.mnk, 0);
  for (int i = 0; i < rep.mnk; ++i) {
    if (seen[i]) continue;
    ++rep.orbits;
    std::vector<int> stack{i};
    seen[i] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
  }
  return rep;
}

inline RingMnkReport ring_mnk_report(const FiniteRing& R) {
  return ring_mnk_report(ring_context(R));
}

// ---------------------------------------------------------------------------
// Full census of injective unit cocycles, partitioned into redundancy
// classes: two cocycles are redundant when one arises from the other by a
// unit scaling eta -> u*eta or by adding a homomorphism into the fixed
// submodule.  The minimal non-Kneser cocycles, when any exist, must occupy
// exactly one class, and when the ring has prime characteristic exceeding
// its nilpotency degree the class must contain the canonical cocycle that
// sends the generator 1 + theta^i to theta^(i-1).
// ---------------------------------------------------------------------------

struct PrincipalBucket {
  std::vector<elt> representative;  // lexicographically least member
  int size = 0;                     // injective cocycles in the class
  int mnk = 0;                      // members that are minimal non-Kneser
};

struct PrincipalCensus {
  RingContext rc;
  int cocycles = 0;   // all cocycles for the principal-unit action
  int injective = 0;  // those with pairwise distinct values
  int mnk = 0;        // minimal non-Kneser cocycles (always injective)
  std::vector<PrincipalBucket> buckets;  // ordered by representative

  Triple triple(std::size_t i) const {
    return make_triple(rc.ctx, buckets.at(i).representative);
  }
};

inline PrincipalCensus principal_unit_triples(FiniteRing R, int bound = 512) {
  require(R.size() <= bound, "BoundExceeded",
          "ring too large for the unit cocycle census");
  PrincipalCensus c{ring_context(std::move(R)), 0, 0, 0, {}};
  const FiniteRing& S = c.rc.ring;
  const GammaGroup& gg = *c.rc.ctx;
  const int k = gg.gamma.order();

  auto zs = enumerate_cocycles(gg);
  auto lat = all_ideals(gg);
  c.cocycles = static_cast<int>(zs.size());

  std::vector<std::vector<elt>> inj;  // sorted, enumeration is lexicographic
  for (auto& eta : zs) {
    std::set<elt> values(eta.begin(), eta.end());
    if (static_cast<int>(values.size()) == k) inj.push_back(std::move(eta));
  }
  c.injective = static_cast<int>(inj.size());

  std::map<std::vector<elt>, int> index;
  for (int i = 0; i < c.injective; ++i) index[inj[i]] = i;

  std::vector<char> minimal(inj.size(), 0);
  for (int i = 0; i < c.injective; ++i) {
    Triple t = make_triple(c.rc.ctx, inj[i]);
    minimal[i] = is_mnk(t, &lat) ? 1 : 0;
    if (minimal[i]) ++c.mnk;
  }

  std::vector<elt> units;
  for (elt u = 0; u < S.size(); ++u)
    if (S.is_unit(u)) units.push_back(u);
  auto homs = socle_homs(c.rc);

  std::vector<std::vector<int>> adj(inj.size());
  for (int i = 0; i < c.injective; ++i) {
    for (elt u : units) {
      std::vector<elt> scaled(k);
      for (int s = 0; s < k; ++s) scaled[s] = S.times(u, inj[i][s]);
      auto it = index.find(scaled);
      if (it == index.end())
        fatal_disagreement("unit scaling left the injective cocycle set");
      adj[i].push_back(it->second);
    }
    for (const auto& chi : homs) {
      std::vector<elt> shifted(k);
      for (int s = 0; s < k; ++s) shifted[s] = S.plus(inj[i][s], chi[s]);
      auto it = index.find(shifted);
      if (it != index.end()) adj[i].push_back(it->second);
    }
  }

  std::vector<int> comp(inj.size(), -1);
  for (int i = 0; i < c.injective; ++i) {
    if (comp[i] >= 0) continue;
    const int id = static_cast<int>(c.buckets.size());
    PrincipalBucket b;
    b.representative = inj[i];  // seeds ascend, so the seed is the class min
    comp[i] = id;
    std::vector<int> stack{i};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      ++b.size;
      if (minimal[x]) ++b.mnk;
      for (int y : adj[x])
        if (comp[y] < 0) {
          comp[y] = id;
          stack.push_back(y);
        }
    }
    c.buckets.push_back(std::move(b));
  }

  if (c.mnk > 0) {
    int carrying = 0;
    for (const auto& b : c.buckets)
      if (b.mnk > 0) ++carrying;
    if (carrying != 1)
      fatal_disagreement(
          "minimal non-Kneser cocycles split across redundancy classes");
    if (dual_pairing_character(S).empty())
      fatal_disagreement(
          "minimal non-Kneser census over a ring without a nondegenerate "
          "multiplication pairing");
  }

  // Canonical cocycle check: prime characteristic p, residue field of order
  // p, principal maximal ideal, and p larger than the nilpotency degree.
  const int p_char = S.add.element_order(S.one);
  bool prime_char = p_char >= 2;
  for (int d = 2; d * d <= p_char; ++d)
    if (p_char % d == 0) prime_char = false;
  auto mi = maximal_ideal(S);
  const int mdeg = nilpotency_index(S, mi);
  if (c.mnk > 0 && prime_char && p_char > mdeg && mdeg >= 2 &&
      static_cast<int>(mi.size()) * p_char == S.size()) {
    elt theta = -1;
    std::set<elt> mset(mi.begin(), mi.end());
    for (elt cand : mi) {
      std::set<elt> gen;
      for (elt x = 0; x < S.size(); ++x) gen.insert(S.times(cand, x));
      if (gen == mset) {
        theta = cand;
        break;
      }
    }
    if (theta >= 0) {
      std::vector<elt> gens, vals;
      elt low = S.one;    // theta^(i-1)
      elt high = theta;   // theta^i
      for (int i = 1; i < mdeg; ++i) {
        elt gcode = S.plus(S.one, high);
        int gidx = -1;
        for (int s = 0; s < k; ++s)
          if (c.rc.gamma_elems[s] == gcode) gidx = s;
        if (gidx < 0)
          fatal_disagreement("1 + theta^i is not a principal unit");
        gens.push_back(gidx);
        vals.push_back(low);
        low = high;
        high = S.times(high, theta);
      }
      auto eta0 = cocycle_from_generators(gg, gens, vals);
      Triple t0 = make_triple(c.rc.ctx, eta0);
      if (!is_mnk(t0, &lat))
        fatal_disagreement("canonical cocycle is not minimal non-Kneser");
      auto it = index.find(eta0);
      if (it == index.end())
        fatal_disagreement("canonical cocycle is not injective");
      if (c.buckets[comp[it->second]].mnk == 0)
        fatal_disagreement("canonical cocycle misses the minimal class");
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Finite quotients of a complete discrete valuation ring: the congruence
// unit group 1 + pi^n O taken at precision m + n acts on O / pi^m by
// multiplication through the projection.  At that precision the quotient
// (x - 1) / pi^n is exact, so eta(x) = alpha(x) + ((x - 1) / pi^n) a
// satisfies the cocycle law on the nose for every parameter a; truncating
// the operators at precision m instead would break the law whenever a has
// small valuation.  Two coefficient rings are available: "poly" builds
// F_p[T] / (T^j) and "padic" builds Z / p^j.  Both encode elements so that
// reduction is a plain remainder and the exact division is integer
// arithmetic on codes.
// ---------------------------------------------------------------------------

struct LocalModel {
  FiniteRing big;    // precision m + n
  FiniteRing small;  // precision m
  int p = 0;
  int n = 0;
  int m = 0;
  std::shared_ptr<const GammaGroup> ctx;
  std::vector<elt> gamma_elems;  // operator index -> code in the big ring
  std::vector<elt> cdiv;         // operator index -> (code - 1) / p^n, reduced
  std::vector<int> gamma_level;  // operator index -> congruence level, <= m
  std::vector<int> small_level;  // small code -> valuation, m at zero
};

inline LocalModel local_model(const std::string& kind, int p, int n, int m,
                              int bound = 1024) {
  require(kind == "poly" || kind == "padic", "ModelUnavailable",
          "coefficient ring kind must be poly or padic");
  require(p >= 2, "BadParameters", "residue characteristic must be >= 2");
  for (int d = 2; d * d <= p; ++d)
    require(p % d != 0, "BadParameters", std::to_string(p) + " is not prime");
  require(n >= 1 && m > n, "BadParameters",
          "precision levels must satisfy m > n >= 1");
  std::int64_t big_size = 1;
  for (int i = 0; i < m + n; ++i) {
    big_size *= p;
    require(big_size <= bound, "OrderBoundExceeded",
            "precision m + n exceeds the ring size bound");
  }

  LocalModel L;
  L.p = p;
  L.n = n;
  L.m = m;
  auto quotient_ring = [&](int j) {
    if (kind == "padic") {
      int sz = 1;
      for (int i = 0; i < j; ++i) sz *= p;
      return ring_z_mod(sz);
    }
    std::vector<int> coeffs(j, 0);
    coeffs[0] = 1;
    return ring_from_eisenstein(p, 1, j, j, coeffs);
  };
  L.big = quotient_ring(m + n);
  L.small = quotient_ring(m);
  const int B = L.big.size();
  const int S = L.small.size();
  int pn = 1;
  for (int i = 0; i < n; ++i) pn *= p;

  // Reduction to the lower precision must be a plain remainder; check that
  // it is a ring map before anything downstream relies on it.
  if (L.big.one % S != L.small.one)
    fatal_disagreement("reduction does not preserve unity");
  for (elt a = 0; a < B; ++a)
    for (elt b = 0; b < B; ++b) {
      if (L.small.plus(a % S, b % S) != L.big.plus(a, b) % S)
        fatal_disagreement("reduction is not additive");
      if (L.small.times(a % S, b % S) != L.big.times(a, b) % S)
        fatal_disagreement("reduction is not multiplicative");
    }

  for (elt c = 0; c < B; ++c)
    if (c % pn == 1) L.gamma_elems.push_back(c);
  const int k = static_cast<int>(L.gamma_elems.size());
  if (k != S) fatal_disagreement("congruence unit count is off");

  std::vector<int> pos(B, -1);
  for (int i = 0; i < k; ++i) pos[L.gamma_elems[i]] = i;
  std::vector<elt> flat(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int q = pos[L.big.times(L.gamma_elems[i], L.gamma_elems[j])];
      if (q < 0)
        fatal_disagreement("congruence units fail to close under product");
      flat[static_cast<std::size_t>(i) * k + j] = q;
    }
  FiniteGroup gamma = make_group_flat(
      k, std::move(flat),
      "units 1 + pi^" + std::to_string(n) + " of " + L.big.name);
  FiniteGroup g = L.small.add;
  g.set_name(L.small.name + " additive");

  std::vector<std::vector<elt>> rows(k, std::vector<elt>(S));
  for (int i = 0; i < k; ++i) {
    elt proj = L.gamma_elems[i] % S;
    for (elt x = 0; x < S; ++x) rows[i][x] = L.small.times(proj, x);
  }
  L.ctx = std::make_shared<const GammaGroup>(
      make_gamma_group(std::move(gamma), std::move(g), std::move(rows)));

  L.cdiv.resize(k);
  L.gamma_level.resize(k);
  for (int i = 0; i < k; ++i) {
    elt c = L.gamma_elems[i];
    L.cdiv[i] = static_cast<elt>(((c - 1) / pn) % S);
    L.gamma_level[i] = c == 1 ? m : std::min(m, valuation(c - 1, p));
  }
  L.small_level.resize(S);
  for (elt s = 0; s < S; ++s)
    L.small_level[s] = s == 0 ? m : valuation(s, p);
  return L;
}

// ---------------------------------------------------------------------------
// The parametrized cocycle eta(x) = alpha(x) + ((x - 1) / pi^n) a on a local
// model.  The vanishing locus is a subgroup contained in the congruence
// subgroup of level r(a) = max(n, m - v(a)); the locus where eta takes
// values of level >= m - n is exactly that congruence subgroup and eta is
// additive there; eta is a global homomorphism precisely when v(a) >= m - n.
// All of these are recomputed from the tables and cross-checked.
// ---------------------------------------------------------------------------

struct LocalKernelReport {
  int v_a = 0;              // valuation of the parameter, m at zero
  int r_a = 0;              // congruence level max(n, m - v_a)
  bool hom = false;         // eta is a homomorphism on all operators
  std::vector<elt> eta;     // cocycle values by operator index
  std::vector<elt> kernel;  // operator indices where eta vanishes
};

inline LocalKernelReport eta_param_kernel(const LocalModel& L, elt a,
                                          std::vector<elt> alpha = {}) {
  const FiniteRing& S = L.small;
  const FiniteGroup& gamma = L.ctx->gamma;
  const int k = gamma.order();
  require(a >= 0 && a < S.size(), "BadParameters",
          "parameter must be an element of the small ring");
  if (alpha.empty()) alpha.assign(k, 0);
  require(static_cast<int>(alpha.size()) == k, "BadParameters",
          "twist must assign one value per operator");
  for (elt v : alpha) {
    require(v >= 0 && v < S.size(), "BadParameters",
            "twist values must be elements of the small ring");
    require(L.small_level[v] >= L.m - L.n, "BadParameters",
            "twist values must be fixed by every operator");
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      require(alpha[gamma.mul(i, j)] == S.plus(alpha[i], alpha[j]),
              "BadParameters", "twist must be additive");

  LocalKernelReport rep;
  rep.v_a = L.small_level[a];
  rep.r_a = std::max(L.n, L.m - rep.v_a);
  rep.eta.resize(k);
  for (int i = 0; i < k; ++i)
    rep.eta[i] = S.plus(alpha[i], S.times(L.cdiv[i], a));
  Triple checked = make_triple(L.ctx, rep.eta);  // validates the law
  (void)checked;

  for (int i = 0; i < k; ++i)
    if (rep.eta[i] == 0) rep.kernel.push_back(i);
  for (int i = 0; i < k; ++i) {
    bool formula = alpha[i] == S.minus(S.times(L.cdiv[i], a));
    if (formula != (rep.eta[i] == 0))
      fatal_disagreement("kernel formula disagrees with the vanishing set");
  }
  if (!is_subgroup(gamma, subgroup_from_members(gamma, rep.kernel)))
    fatal_disagreement("vanishing set is not a subgroup");
  for (elt i : rep.kernel)
    if (L.gamma_level[i] < rep.r_a)
      fatal_disagreement("kernel escapes its congruence level");

  std::vector<elt> additive_locus;
  for (int i = 0; i < k; ++i) {
    bool in_locus = L.small_level[rep.eta[i]] >= L.m - L.n;
    if (in_locus != (L.gamma_level[i] >= rep.r_a))
      fatal_disagreement(
          "additive locus differs from the congruence subgroup");
    if (in_locus) additive_locus.push_back(i);
  }
  for (elt x : additive_locus)
    for (elt y : additive_locus)
      if (rep.eta[gamma.mul(x, y)] != S.plus(rep.eta[x], rep.eta[y]))
        fatal_disagreement("restriction to the congruence subgroup is not "
                           "additive");

  rep.hom = true;
  for (int i = 0; i < k && rep.hom; ++i)
    for (int j = 0; j < k && rep.hom; ++j)
      rep.hom = rep.eta[gamma.mul(i, j)] == S.plus(rep.eta[i], rep.eta[j]);
  if (rep.hom != (rep.v_a >= L.m - L.n))
    fatal_disagreement("homomorphism criterion disagrees with the parameter "
                       "level");
  return rep;
}

}  // namespace cogalois
