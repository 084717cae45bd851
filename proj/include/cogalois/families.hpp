#pragma once

// Explicit triples that anchor the classification sweeps: the three character
// families of minimal non-duality triples, the canonical minimal non-Kneser
// character triples, the dihedral/quaternion pair, and the quadratic family
// over a square-zero local ring.

#include <numeric>

#include "cogalois/catalog.hpp"
#include "cogalois/cocycle.hpp"
#include "cogalois/zmodule.hpp"

namespace cogalois {

/// Extends prescribed generator values to a full cocycle by breadth-first
/// closure of the law eta(x g) = eta(x) . x(eta(g)).  Throws when the values
/// admit no consistent extension, which is exactly how invalid parameter
/// choices in the families below surface.
inline std::vector<elt> cocycle_from_generators(const GammaGroup& gg,
                                                const std::vector<elt>& gens,
                                                const std::vector<elt>& values) {
  require(gens.size() == values.size(), "BadParameters",
          "one value per generator required");
  const int n = gg.gamma.order();
  std::vector<elt> eta(n, -1);
  eta[0] = 0;
  std::vector<elt> queue{0};
  while (!queue.empty()) {
    elt x = queue.back();
    queue.pop_back();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      elt y = gg.gamma.mul(x, gens[i]);
      elt v = gg.g.mul(eta[x], gg.act(x, values[i]));
      if (eta[y] < 0) {
        eta[y] = v;
        queue.push_back(y);
      } else {
        require(eta[y] == v, "CocycleLawViolated",
                "generator values admit no cocycle extension");
      }
    }
  }
  for (elt x = 0; x < n; ++x)
    require(eta[x] >= 0, "BadParameters", "generators do not generate the group");
  return eta;
}

// ---------------------------------------------------------------------------
// Character triples on cyclic and near-cyclic modules
// ---------------------------------------------------------------------------

/// Negation as a module action: the exponent-k character sending the listed
/// operators to -1 and everything else to +1 is encoded directly by rows.
namespace detail {
inline std::vector<elt> negation_row(const FiniteGroup& A) {
  std::vector<elt> r(A.order());
  for (elt x = 0; x < A.order(); ++x) r[x] = A.inv(x);
  return r;
}
inline std::vector<elt> identity_row(const FiniteGroup& A) {
  std::vector<elt> r(A.order());
  std::iota(r.begin(), r.end(), 0);
  return r;
}
}  // namespace detail

/// The Klein group on Z/4: sigma inverts and maps to 1, tau fixes and maps
/// to 2.  The smallest minimal non-duality triple.
inline Triple mncg_family_i() {
  FiniteGroup k4 = abelian_group({2, 2});
  FiniteGroup z4 = cyclic_group(4);
  // coding (i, j) -> 2i + j: sigma = 2, tau = 1; element (i, j) negates iff i=1
  std::vector<std::vector<elt>> rows;
  for (elt x = 0; x < 4; ++x)
    rows.push_back(x >= 2 ? detail::negation_row(z4) : detail::identity_row(z4));
  auto gg = std::make_shared<const GammaGroup>(
      make_gamma_group(std::move(k4), std::move(z4), std::move(rows)));
  return make_triple(gg, cocycle_from_generators(*gg, {2, 1}, {1, 2}));
}

/// The dihedral group of order 8 on (Z/2)e1 + (Z/4)e2: the reflection sigma
/// negates and maps to e2, the rotation tau fixes and maps to e1 + e2.
inline Triple mncg_family_ii() {
  FiniteGroup d8 = dihedral_group(4);
  FiniteGroup a = abelian_group({2, 4});
  // dihedral coding r^i s^j -> 4j + i; module coding (i, j) -> 4i + j
  std::vector<std::vector<elt>> rows;
  for (elt x = 0; x < 8; ++x)
    rows.push_back(x >= 4 ? detail::negation_row(a) : detail::identity_row(a));
  auto gg = std::make_shared<const GammaGroup>(
      make_gamma_group(std::move(d8), std::move(a), std::move(rows)));
  return make_triple(gg, cocycle_from_generators(*gg, {4, 1}, {1, 5}));
}

/// The multiplier for the metacyclic family: the least unit mod p*r whose
/// order mod p is exactly r, congruent to 1 modulo every odd prime divisor
/// of r and modulo 4 when 4 divides r.
inline int mncg_family_iii_multiplier(int p, int r) {
  require(p > 2 && prime_factors(p) == std::vector<std::int64_t>{p},
          "BadParameters", "p must be an odd prime");
  require(r > 1 && (p - 1) % r == 0, "BadParameters",
          "r must be a nontrivial divisor of p - 1");
  for (int u = 2; u < p * r; ++u) {
    if (gcd_i64(u, static_cast<std::int64_t>(p) * r) != 1) continue;
    if (mul_order_mod(u % p, p) != r) continue;
    bool ok = true;
    for (std::int64_t l : prime_factors(r))
      if (l != 2 && (u - 1) % l != 0) ok = false;
    if (r % 4 == 0 && (u - 1) % 4 != 0) ok = false;
    if (ok) return u;
  }
  fatal_disagreement("no multiplier found for the metacyclic family");
}

/// The metacyclic family: Gamma = Z/p semidirect_u Z/r acting on Z/pr through
/// the character sigma -> u, tau -> 1, with eta(sigma) = p, eta(tau) = r.
inline Triple mncg_family_iii(int p, int r, int u = 0) {
  if (u == 0) u = mncg_family_iii_multiplier(p, r);
  const int k = p * r;
  require(gcd_i64(u, k) == 1 && mul_order_mod(u % p, p) == r, "BadParameters",
          "multiplier must be a unit of order r mod p");
  // coding (x, y) = tau^x sigma^y -> x*r + y: sigma = 1, tau = r
  FiniteGroup gamma = semidirect_cyclic(p, r, u % p);
  FiniteGroup zk = cyclic_group(k);
  std::vector<std::vector<elt>> rows;
  for (int x = 0; x < p; ++x)
    for (int y = 0; y < r; ++y) {
      std::vector<elt> row(k);
      std::int64_t m = powmod_i64(u, y, k);
      for (elt c = 0; c < k; ++c) row[c] = static_cast<elt>(m * c % k);
      rows.push_back(std::move(row));
    }
  auto gg = std::make_shared<const GammaGroup>(
      make_gamma_group(std::move(gamma), std::move(zk), std::move(rows)));
  return make_triple(gg, cocycle_from_generators(*gg, {1, static_cast<elt>(r)},
                                                 {static_cast<elt>(p),
                                                  static_cast<elt>(r)}));
}

/// The canonical minimal non-Kneser character triple at an odd prime: the
/// order-r subgroup of the units mod p acting on Z/p by multiplication, with
/// the cocycle u -> u - 1.
inline Triple mnk_char_canonical(int p, int r) {
  require(p > 2 && prime_factors(p) == std::vector<std::int64_t>{p},
          "BadParameters", "p must be an odd prime");
  require(r > 1 && (p - 1) % r == 0, "BadParameters",
          "r must be a nontrivial divisor of p - 1");
  int w = 0;
  for (int c = 2; c < p && w == 0; ++c)
    if (mul_order_mod(c, p) == r) w = c;
  require(w != 0, "BadParameters", "no element of order r mod p");
  FiniteGroup zr = cyclic_group(r);
  FiniteGroup zp = cyclic_group(p);
  std::vector<std::vector<elt>> rows(r, std::vector<elt>(p));
  std::vector<elt> eta(r);
  std::int64_t pw = 1;
  for (int x = 0; x < r; ++x) {
    for (elt c = 0; c < p; ++c) rows[x][c] = static_cast<elt>(pw * c % p);
    eta[x] = static_cast<elt>(((pw - 1) % p + p) % p);
    pw = pw * w % p;
  }
  auto gg = std::make_shared<const GammaGroup>(
      make_gamma_group(std::move(zr), std::move(zp), std::move(rows)));
  return make_triple(gg, std::move(eta));
}

/// The one minimal non-Kneser character triple at exponent 4: Z/2 inverting
/// Z/4 with eta(1) = 1.
inline Triple mnk_char_z2_z4() {
  auto gg = std::make_shared<const GammaGroup>(make_gamma_group(
      cyclic_group(2), cyclic_group(4), {{0, 1, 2, 3}, {0, 3, 2, 1}}));
  return make_triple(gg, {0, 1});
}

// ---------------------------------------------------------------------------
// The dihedral/quaternion pair
// ---------------------------------------------------------------------------

struct DihedralQuaternionPair {
  Triple forward;   // D8 on Q, eta(sigma) = rho, eta(tau) = theta
  Triple backward;  // Q on D8, the inverse bijection
};

/// The mutually inverse bijective cocycles between the dihedral and the
/// quaternion group of order 8.  sigma inverts rho and fixes theta; rho sends
/// sigma to tau^2 sigma and fixes tau; all other generator pairs commute.
inline DihedralQuaternionPair dihedral_quaternion_pair() {
  FiniteGroup d8 = dihedral_group(4);    // r^i s^j -> 4j + i: tau = 1, sigma = 4
  FiniteGroup q = dicyclic_group(2);     // a^i b^j -> 4j + i: theta = 1, rho = 4

  // sigma: theta -> theta, rho -> rho^-1, i.e. a^i b -> a^(i+2) b
  std::vector<elt> phi(8);
  for (elt i = 0; i < 4; ++i) {
    phi[i] = i;
    phi[4 + i] = 4 + (i + 2) % 4;
  }
  std::vector<std::vector<elt>> fwd_rows;
  for (elt x = 0; x < 8; ++x)
    fwd_rows.push_back(x >= 4 ? phi : detail::identity_row(q));
  auto fwd_gg = std::make_shared<const GammaGroup>(
      make_gamma_group(d8, q, std::move(fwd_rows)));
  Triple forward =
      make_triple(fwd_gg, cocycle_from_generators(*fwd_gg, {4, 1}, {4, 1}));

  std::vector<elt> inverse(8, -1);
  for (elt s = 0; s < 8; ++s) {
    require(inverse[forward.eta[s]] < 0, "NotSurjective",
            "forward cocycle must be bijective");
    inverse[forward.eta[s]] = s;
  }

  // rho: tau -> tau, sigma -> tau^2 sigma, i.e. r^i s -> r^(i+2) s
  std::vector<elt> psi(8);
  for (elt i = 0; i < 4; ++i) {
    psi[i] = i;
    psi[4 + i] = 4 + (i + 2) % 4;
  }
  std::vector<std::vector<elt>> bwd_rows;
  for (elt x = 0; x < 8; ++x)
    bwd_rows.push_back(x >= 4 ? psi : detail::identity_row(d8));
  auto bwd_gg = std::make_shared<const GammaGroup>(
      make_gamma_group(q, d8, std::move(bwd_rows)));
  return {std::move(forward), make_triple(bwd_gg, std::move(inverse))};
}

// ---------------------------------------------------------------------------
// The quadratic family over F_p + W with W^2 = 0
// ---------------------------------------------------------------------------

/// One-plus-nilpotents (Z/p)^s acting on the dual module (Z/p)^(s+1): the
/// basis operator gamma_i adds the i-th higher coordinate to coordinate zero.
/// Element codings are big-endian base p in both groups.
struct QuadFamily {
  int p = 0, s = 0;
  std::shared_ptr<const GammaGroup> ctx;
  std::vector<elt> gens;  // gamma_1 .. gamma_s
};

inline QuadFamily quad_family(int p, int s) {
  require(p > 2 && prime_factors(p) == std::vector<std::int64_t>{p},
          "BadParameters", "p must be an odd prime");
  require(s >= 1, "BadParameters", "need at least one nilpotent direction");
  int ng = 1, nm = 1;
  for (int i = 0; i < s; ++i) ng *= p;
  nm = ng * p;
  require(nm <= 4096, "OrderBoundExceeded", "quadratic family too large");
  FiniteGroup gamma = abelian_group(std::vector<int>(s, p));
  FiniteGroup mod = abelian_group(std::vector<int>(s + 1, p));

  // digit i of a Gamma element x (1-based direction i): x / p^(s-i) mod p
  std::vector<int> gpow(s + 1, 1);
  for (int i = 1; i <= s; ++i) gpow[i] = gpow[i - 1] * p;
  auto gamma_digit = [&](elt x, int i) { return x / gpow[s - i] % p; };

  std::vector<std::vector<elt>> rows(ng, std::vector<elt>(nm));
  for (elt x = 0; x < ng; ++x)
    for (elt c = 0; c < nm; ++c) {
      int c0 = c / gpow[s] % p, shift = 0;
      for (int i = 1; i <= s; ++i)
        shift += gamma_digit(x, i) * (c / gpow[s - i] % p);
      rows[x][c] = c + ((c0 + shift) % p - c0) * gpow[s];
    }
  QuadFamily qf;
  qf.p = p;
  qf.s = s;
  qf.ctx = std::make_shared<const GammaGroup>(
      make_gamma_group(std::move(gamma), std::move(mod), std::move(rows)));
  for (int i = 1; i <= s; ++i) qf.gens.push_back(gpow[s - i]);
  return qf;
}

/// The cocycle with eta(gamma_i) = lambda0[i] at coordinate zero and row i of
/// lam elsewhere.  Extension succeeds exactly when lam is symmetric.
inline Triple quad_cocycle(const QuadFamily& qf, const std::vector<int>& lambda0,
                           const std::vector<std::vector<int>>& lam) {
  require(static_cast<int>(lambda0.size()) == qf.s &&
              static_cast<int>(lam.size()) == qf.s,
          "BadShape", "need one row per nilpotent direction");
  std::vector<int> gpow(qf.s + 1, 1);
  for (int i = 1; i <= qf.s; ++i) gpow[i] = gpow[i - 1] * qf.p;
  std::vector<elt> values;
  for (int i = 0; i < qf.s; ++i) {
    require(static_cast<int>(lam[i].size()) == qf.s, "BadShape",
            "square coefficient matrix required");
    int v = ((lambda0[i] % qf.p) + qf.p) % qf.p * gpow[qf.s];
    for (int j = 0; j < qf.s; ++j)
      v += ((lam[i][j] % qf.p) + qf.p) % qf.p * gpow[qf.s - 1 - j];
    values.push_back(v);
  }
  return make_triple(qf.ctx, cocycle_from_generators(*qf.ctx, qf.gens, values));
}

/// Number of orbits of nonsingular symmetric s x s matrices over F_p under
/// congruence combined with unit scaling, found by closure under elementary
/// transformations.  The family's isomorphism classes of minimal triples
/// biject with these orbits.
inline int quad_matrix_classes(int p, int s) {
  require(p > 2 && s >= 1 && s <= 3, "BadParameters",
          "orbit enumeration is sized for s <= 3");
  int total = 1;
  for (int i = 0; i < s * (s + 1) / 2; ++i) total *= p;

  auto encode = [&](const std::vector<std::vector<int>>& m) {
    int code = 0;
    for (int i = 0; i < s; ++i)
      for (int j = i; j < s; ++j) code = code * p + m[i][j];
    return code;
  };
  auto decode = [&](int code) {
    std::vector<int> digits(s * (s + 1) / 2);
    for (int k = static_cast<int>(digits.size()) - 1; k >= 0; --k) {
      digits[k] = code % p;
      code /= p;
    }
    std::vector<std::vector<int>> m(s, std::vector<int>(s));
    int k = 0;
    for (int i = 0; i < s; ++i)
      for (int j = i; j < s; ++j) m[i][j] = m[j][i] = digits[k++];
    return m;
  };

  // generators of the congruence action: transvections, one diagonal scale,
  // and the global unit multiple
  std::vector<std::vector<std::vector<int>>> gens;
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) {
      if (i == j) continue;
      std::vector<std::vector<int>> a(s, std::vector<int>(s, 0));
      for (int d = 0; d < s; ++d) a[d][d] = 1;
      a[i][j] = 1;
      gens.push_back(std::move(a));
    }
  {
    int g = 2;  // least primitive root, so the closure reaches all of GL
    while (mul_order_mod(g, p) != p - 1) ++g;
    std::vector<std::vector<int>> a(s, std::vector<int>(s, 0));
    for (int d = 0; d < s; ++d) a[d][d] = 1;
    a[0][0] = g;
    gens.push_back(std::move(a));
  }

  auto transform = [&](const std::vector<std::vector<int>>& m,
                       const std::vector<std::vector<int>>& a, int b0) {
    std::vector<std::vector<int>> am(s, std::vector<int>(s, 0));
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j)
        for (int k = 0; k < s; ++k) am[i][j] = (am[i][j] + a[i][k] * m[k][j]) % p;
    std::vector<std::vector<int>> out(s, std::vector<int>(s, 0));
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) {
        for (int k = 0; k < s; ++k) out[i][j] = (out[i][j] + am[i][k] * a[j][k]) % p;
        out[i][j] = out[i][j] * b0 % p;
      }
    return out;
  };

  std::vector<char> seen(total, 0);
  int classes = 0;
  for (int start = 0; start < total; ++start) {
    if (seen[start]) continue;
    std::vector<std::vector<int>> m0 = decode(start);
    if (gf_rank(m0, p) != s) {
      seen[start] = 1;
      continue;
    }
    ++classes;
    std::vector<int> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
      int code = queue.back();
      queue.pop_back();
      auto m = decode(code);
      for (const auto& a : gens)
        for (int b0 = 1; b0 < p; ++b0) {
          int next = encode(transform(m, a, b0));
          if (!seen[next]) {
            seen[next] = 1;
            queue.push_back(next);
          }
        }
    }
  }
  return classes;
}

}  // namespace cogalois
