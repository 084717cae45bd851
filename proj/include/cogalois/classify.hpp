#pragma once
// Classification layer: certified minimality verdicts, isomorphism of
// operator-group triples, exhaustive sweeps over the small-group catalogue,
// and structural audits of the classes those sweeps discover.
//
// Sweeps are deterministic: jobs are cut along the (operator group, module)
// grid in catalogue order, and results are reduced in that same order no
// matter how many worker threads ran the jobs.

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "cogalois/catalog.hpp"
#include "cogalois/cogalois_ideals.hpp"
#include "cogalois/kneser.hpp"
#include "cogalois/rings.hpp"

namespace cogalois {

// ---------------------------------------------------------------------------
// Certificates
//
// A certificate re-derives a minimality verdict from raw index data so that a
// reader can audit it without trusting the boolean test.  Both certificate
// builders recompute the verdict through an independent route and fail hard
// if the two disagree.
// ---------------------------------------------------------------------------

/// One row of a covering certificate: an ideal with its index in the module
/// and the index of its cocycle preimage in the operator group.  The two
/// agree exactly when the induced cocycle on the quotient is surjective.
struct IdealIndexPair {
  std::vector<elt> members;
  int module_index = 0;    // (G : a)
  int operator_index = 0;  // (Gamma : eta^{-1}(a))
};

struct MnkCertificate {
  bool minimal = false;
  bool surjective = false;
  bool normalized = false;
  std::vector<IdealIndexPair> pairs;  // one row per ideal above the trivial one
};

/// Certified test for a minimal non-Kneser triple: the cocycle must not be
/// surjective, must have trivial kernel core, and every ideal above the
/// trivial one must have matching module and operator indices.  Requires a
/// generating cocycle (NotGenerating).
inline MnkCertificate mnk_certificate(const Triple& t,
                                      const IdealLattice* lattice = nullptr) {
  require(t.generating, "NotGenerating",
          "index certificates need a generating cocycle");
  const GammaGroup& gg = *t.ctx;
  IdealLattice local;
  if (!lattice) {
    local = all_ideals(gg);
    lattice = &local;
  }
  MnkCertificate cert;
  cert.surjective = is_surjective(t);
  cert.normalized = t.delta_tilde.trivial();

  KneserReport covering = kneser_ideals(t, *lattice);
  bool all_match = true;
  for (std::size_t i = 0; i < lattice->ideals.size(); ++i) {
    const Subgroup& a = lattice->ideals[i];
    if (a.trivial()) continue;
    std::vector<elt> preimage;
    for (elt s = 0; s < gg.gamma.order(); ++s)
      if (a.contains(t.eta[s])) preimage.push_back(s);
    if (!is_subgroup(gg.gamma, subgroup_from_members(gg.gamma, preimage)))
      fatal_disagreement("ideal preimage under the cocycle is not a subgroup");
    IdealIndexPair row;
    row.members = a.members;
    row.module_index = gg.g.order() / a.size();
    row.operator_index = gg.gamma.order() / static_cast<int>(preimage.size());
    bool match = row.module_index == row.operator_index;
    if (match != static_cast<bool>(covering.kneser[i]))
      fatal_disagreement("index pairs disagree with the coset-covering route");
    all_match = all_match && match;
    cert.pairs.push_back(std::move(row));
  }
  cert.minimal = !cert.surjective && cert.normalized && all_match;
  if (cert.minimal != is_mnk(t, lattice))
    fatal_disagreement("certificate verdict disagrees with the direct test");
  return cert;
}

struct MncgCertificate {
  bool minimal = false;
  bool normalized = false;
  std::vector<elt> witness;  // subgroup above the kernel whose image is not an
                             // ideal; empty when every image is one
  std::vector<std::vector<elt>> ideals;  // the ideals above the trivial one
  std::vector<char> cogalois;            // duality flag per listed ideal
};

/// Certified test for a minimal non-duality triple: some subgroup above the
/// kernel must map onto a non-ideal (the witness), while every ideal above
/// the trivial one must induce a duality-realising triple on its quotient.
/// Requires a surjective cocycle (NotSurjective).
inline MncgCertificate mncg_certificate(const Triple& t,
                                        const IdealLattice* lattice = nullptr) {
  require(is_surjective(t), "NotSurjective",
          "duality certificates need a surjective cocycle");
  const GammaGroup& gg = *t.ctx;
  IdealLattice local;
  if (!lattice) {
    local = all_ideals(gg);
    lattice = &local;
  }
  MncgCertificate cert;
  cert.normalized = t.delta_tilde.trivial();

  for (const Subgroup& lam : all_subgroups(gg.gamma, &t.delta)) {
    std::set<elt> image;
    for (elt s : lam.members) image.insert(t.eta[s]);
    Subgroup sub = subgroup_from_members(
        gg.g, std::vector<elt>(image.begin(), image.end()));
    if (!is_subgroup(gg.g, sub) || !is_ideal(gg, sub)) {
      cert.witness = lam.members;
      break;
    }
  }

  CoGaloisReport duality = cogalois_ideals(t, *lattice);
  bool all_cogalois = true;
  for (std::size_t i = 0; i < lattice->ideals.size(); ++i) {
    const Subgroup& a = lattice->ideals[i];
    if (a.trivial()) {
      // the triple itself fails the duality iff a witness subgroup exists
      if (static_cast<bool>(duality.cogalois[i]) != cert.witness.empty())
        fatal_disagreement("witness search disagrees with the duality flags");
      continue;
    }
    cert.ideals.push_back(a.members);
    cert.cogalois.push_back(duality.cogalois[i]);
    all_cogalois = all_cogalois && duality.cogalois[i];
  }
  cert.minimal = cert.normalized && !cert.witness.empty() && all_cogalois;
  if (cert.minimal != is_mncg(t, lattice))
    fatal_disagreement("certificate verdict disagrees with the direct test");
  return cert;
}

// ---------------------------------------------------------------------------
// Isomorphism of triples
// ---------------------------------------------------------------------------

/// An isomorphism of triples: phi maps operators, psi maps module elements,
/// both bijectively, with psi equivariant over phi and psi . eta = eta' . phi.
struct TripleIso {
  std::vector<elt> phi;
  std::vector<elt> psi;
};

namespace detail {

/// Extends a partial multiplicative map A -> B to its product closure.
/// Returns false when the law forces a contradiction or a collision.
inline bool close_map(const FiniteGroup& A, const FiniteGroup& B,
                      std::vector<elt>& f, std::vector<char>& used) {
  for (bool grew = true; grew;) {
    grew = false;
    for (elt x = 0; x < A.order(); ++x) {
      if (f[x] < 0) continue;
      for (elt y = 0; y < A.order(); ++y) {
        if (f[y] < 0) continue;
        elt z = A.mul(x, y), need = B.mul(f[x], f[y]);
        if (f[z] < 0) {
          if (used[need]) return false;
          f[z] = need;
          used[need] = 1;
          grew = true;
        } else if (f[z] != need) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace detail

/// Searches for an isomorphism between two triples.  Cheap invariants
/// (orders, kernel sizes, ideal-lattice shape, fixed-point counts, value
/// orders) prune first; then a backtracking search assigns operator images,
/// derives the module map from the cocycle values, and completes it by
/// product closure.  Deterministic: the first witness in ascending image
/// order is returned.
inline std::optional<TripleIso> triples_isomorphic(const Triple& t1,
                                                   const Triple& t2) {
  const FiniteGroup &ga = t1.gamma(), &gb = t2.gamma();
  const FiniteGroup &ma = t1.g(), &mb = t2.g();
  const int n = ga.order(), m = ma.order();
  if (n != gb.order() || m != mb.order()) return std::nullopt;
  if (t1.generating != t2.generating) return std::nullopt;
  if (is_surjective(t1) != is_surjective(t2)) return std::nullopt;
  if (t1.delta.size() != t2.delta.size() ||
      t1.delta_prime.size() != t2.delta_prime.size() ||
      t1.delta_tilde.size() != t2.delta_tilde.size())
    return std::nullopt;
  if (t1.fix().size() != t2.fix().size()) return std::nullopt;
  auto lattice_shape = [](const Triple& t) {
    std::vector<int> sizes;
    for (const Subgroup& a : all_ideals(*t.ctx).ideals) sizes.push_back(a.size());
    std::sort(sizes.begin(), sizes.end());
    return sizes;
  };
  if (lattice_shape(t1) != lattice_shape(t2)) return std::nullopt;
  auto value_orders = [](const Triple& t) {
    std::vector<std::pair<int, int>> v;
    for (elt s = 0; s < t.gamma().order(); ++s)
      v.emplace_back(t.gamma().element_order(s), t.g().element_order(t.eta[s]));
    std::sort(v.begin(), v.end());
    return v;
  };
  if (value_orders(t1) != value_orders(t2)) return std::nullopt;
  if (!isomorphic(ga, gb) || !isomorphic(ma, mb)) return std::nullopt;

  // completes the module map after the cocycle values seeded it
  auto extend_psi = [&](auto&& self, std::vector<elt> psi, std::vector<char> used,
                        const std::vector<elt>& phi)
      -> std::optional<std::vector<elt>> {
    if (!detail::close_map(ma, mb, psi, used)) return std::nullopt;
    elt open = -1;
    for (elt x = 0; x < m; ++x)
      if (psi[x] < 0) {
        open = x;
        break;
      }
    if (open < 0) {
      for (elt s = 0; s < n; ++s)
        if (psi[t1.eta[s]] != t2.eta[phi[s]]) return std::nullopt;
      for (elt s = 0; s < n; ++s)
        for (elt x = 0; x < m; ++x)
          if (psi[t1.act(s, x)] != t2.act(phi[s], psi[x])) return std::nullopt;
      return psi;
    }
    for (elt img = 0; img < m; ++img) {
      if (used[img] || mb.element_order(img) != ma.element_order(open)) continue;
      auto next_psi = psi;
      auto next_used = used;
      next_psi[open] = img;
      next_used[img] = 1;
      if (auto done = self(self, std::move(next_psi), std::move(next_used), phi))
        return done;
    }
    return std::nullopt;
  };

  auto attempt_psi =
      [&](const std::vector<elt>& phi) -> std::optional<std::vector<elt>> {
    std::vector<elt> psi(m, -1);
    std::vector<char> used(m, 0);
    psi[0] = 0;
    used[0] = 1;
    for (elt s = 0; s < n; ++s) {
      elt x = t1.eta[s], y = t2.eta[phi[s]];
      if (psi[x] < 0) {
        if (used[y]) return std::nullopt;
        psi[x] = y;
        used[y] = 1;
      } else if (psi[x] != y) {
        return std::nullopt;
      }
    }
    return extend_psi(extend_psi, std::move(psi), std::move(used), phi);
  };

  auto search_phi = [&](auto&& self, std::vector<elt> phi, std::vector<char> used)
      -> std::optional<TripleIso> {
    if (!detail::close_map(ga, gb, phi, used)) return std::nullopt;
    elt open = -1;
    for (elt s = 0; s < n; ++s)
      if (phi[s] < 0) {
        open = s;
        break;
      }
    if (open < 0) {
      if (auto psi = attempt_psi(phi))
        return TripleIso{std::move(phi), std::move(*psi)};
      return std::nullopt;
    }
    for (elt img = 0; img < n; ++img) {
      if (used[img] || gb.element_order(img) != ga.element_order(open)) continue;
      auto next_phi = phi;
      auto next_used = used;
      next_phi[open] = img;
      next_used[img] = 1;
      if (auto done = self(self, std::move(next_phi), std::move(next_used)))
        return done;
    }
    return std::nullopt;
  };

  std::vector<elt> phi(n, -1);
  std::vector<char> used(n, 0);
  phi[0] = 0;
  used[0] = 1;
  return search_phi(search_phi, std::move(phi), std::move(used));
}

// ---------------------------------------------------------------------------
// Catalogue sweeps
// ---------------------------------------------------------------------------

/// One isomorphism class found by a sweep.  Only the certificate matching the
/// run's kind is populated.
struct ClassEntry {
  Triple rep;       // first representative in sweep order
  int members = 0;  // enumerated triples that landed in this class
  MnkCertificate mnk;
  MncgCertificate mncg;
};

struct ClassificationRun {
  std::string kind;    // "mnk" or "mncg"
  std::string filter;  // "all", "abelian", or "character"
  int max_gamma = 16;
  int max_g = 16;
  std::vector<ClassEntry> classes;  // in first-discovery order
  long long triples_seen = 0;       // generating cocycles inspected
  long long triples_found = 0;      // verdict-positive triples bucketed
};

namespace detail {

struct SweepHit {
  int context = 0;  // slot in SweepCell::contexts
  std::vector<elt> eta;
};

struct SweepCell {
  std::vector<std::shared_ptr<const GammaGroup>> contexts;
  std::vector<SweepHit> hits;
  long long seen = 0;
};

inline SweepCell sweep_pair(const FiniteGroup& gamma, const FiniteGroup& g,
                            const std::string& filter, bool kneser_side) {
  SweepCell cell;
  std::vector<GammaGroup> actions;
  if (filter == "character") {
    for (CharacterAction& ca : character_actions(gamma, g))
      actions.push_back(std::move(ca.gg));
  } else {
    actions = all_actions(gamma, g);
  }
  for (GammaGroup& action : actions) {
    auto ctx = std::make_shared<const GammaGroup>(std::move(action));
    IdealLattice lat = all_ideals(*ctx);
    int slot = -1;
    for (const auto& eta : enumerate_cocycles(*ctx, true)) {
      ++cell.seen;
      Triple t = make_triple(ctx, eta);
      if (!(kneser_side ? is_mnk(t, &lat) : is_mncg(t, &lat))) continue;
      // a minimal triple's defect set must be exactly the trivial ideal
      int defects = 0;
      bool at_trivial = false;
      if (kneser_side) {
        KneserReport kr = kneser_ideals(t, lat);
        for (std::size_t i = 0; i < lat.ideals.size(); ++i)
          if (!kr.kneser[i]) {
            ++defects;
            at_trivial = at_trivial || lat.ideals[i].trivial();
          }
      } else {
        CoGaloisReport cr = cogalois_ideals(t, lat);
        for (std::size_t i = 0; i < lat.ideals.size(); ++i)
          if (!cr.cogalois[i]) {
            ++defects;
            at_trivial = at_trivial || lat.ideals[i].trivial();
          }
      }
      if (defects != 1 || !at_trivial)
        fatal_disagreement("minimal triple has a defect away from the trivial ideal");
      if (slot < 0) {
        cell.contexts.push_back(ctx);
        slot = static_cast<int>(cell.contexts.size()) - 1;
      }
      cell.hits.push_back({slot, eta});
    }
  }
  return cell;
}

inline ClassificationRun run_sweep(bool kneser_side, int max_gamma, int max_g,
                                   const std::string& filter, int workers) {
  require(max_gamma >= 1 && max_g >= 1 && max_gamma <= 16 && max_g <= 16,
          "BoundExceeded", "catalogue sweeps cover group orders up to 16");
  require(filter == "all" || filter == "abelian" || filter == "character",
          "BadParameters", "filter must be all, abelian, or character");
  require(workers >= 1, "BadParameters", "worker count must be positive");

  std::vector<FiniteGroup> gammas = filter == "abelian"
                                        ? abelian_catalog_upto(max_gamma)
                                        : catalog_upto(max_gamma);
  std::vector<FiniteGroup> mods = filter == "all" ? catalog_upto(max_g)
                                                  : abelian_catalog_upto(max_g);
  const std::size_t jobs = gammas.size() * mods.size();
  std::vector<SweepCell> cells(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  std::atomic<std::size_t> cursor{0};
  auto work = [&] {
    for (;;) {
      std::size_t k = cursor.fetch_add(1);
      if (k >= jobs) return;
      try {
        cells[k] = sweep_pair(gammas[k / mods.size()], mods[k % mods.size()],
                              filter, kneser_side);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& th : pool) th.join();
  }
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);

  ClassificationRun run;
  run.kind = kneser_side ? "mnk" : "mncg";
  run.filter = filter;
  run.max_gamma = max_gamma;
  run.max_g = max_g;
  for (std::size_t k = 0; k < jobs; ++k) {
    run.triples_seen += cells[k].seen;
    for (const SweepHit& hit : cells[k].hits) {
      ++run.triples_found;
      Triple t = make_triple(cells[k].contexts[hit.context], hit.eta);
      int match = -1;
      for (std::size_t ci = 0; ci < run.classes.size(); ++ci) {
        if (!triples_isomorphic(t, run.classes[ci].rep)) continue;
        if (match >= 0)
          fatal_disagreement("a triple matched two distinct classes");
        match = static_cast<int>(ci);
      }
      if (match >= 0) {
        ++run.classes[match].members;
        continue;
      }
      ClassEntry entry;
      entry.rep = std::move(t);
      entry.members = 1;
      if (kneser_side)
        entry.mnk = mnk_certificate(entry.rep);
      else
        entry.mncg = mncg_certificate(entry.rep);
      run.classes.push_back(std::move(entry));
    }
  }
  for (std::size_t i = 0; i < run.classes.size(); ++i)
    for (std::size_t j = i + 1; j < run.classes.size(); ++j)
      if (triples_isomorphic(run.classes[i].rep, run.classes[j].rep))
        fatal_disagreement("distinct classes have isomorphic representatives");
  return run;
}

}  // namespace detail

/// Exhaustive catalogue sweep for minimal non-Kneser triples: every operator
/// group and module within the bounds, every action admitted by the filter,
/// every generating cocycle.  Verdict-positive triples are bucketed into
/// isomorphism classes; each candidate must match exactly one class.
inline ClassificationRun enumerate_mnk(int max_gamma = 16, int max_g = 16,
                                       const std::string& filter = "all",
                                       int workers = 1) {
  return detail::run_sweep(true, max_gamma, max_g, filter, workers);
}

/// The same sweep for minimal non-duality triples.
inline ClassificationRun enumerate_mncg(int max_gamma = 16, int max_g = 16,
                                        const std::string& filter = "all",
                                        int workers = 1) {
  return detail::run_sweep(false, max_gamma, max_g, filter, workers);
}

// ---------------------------------------------------------------------------
// Structural audit
//
// Every minimal non-Kneser triple obeys a battery of structural laws; the
// audit re-derives them from scratch and fails hard on any violation, so a
// passing audit is a machine check of the structure theory on the classes a
// sweep produced.
// ---------------------------------------------------------------------------

/// The subring of module endomorphisms generated by the operator images,
/// closed under pointwise addition and composition.
struct GeneratedRing {
  FiniteRing ring;
  std::vector<elt> operator_image;  // operator index -> ring element
};

inline GeneratedRing generated_endomorphism_ring(const GammaGroup& gg) {
  require(gg.g.abelian(), "NotAbelian",
          "endomorphism closure needs an abelian module");
  const FiniteGroup& g = gg.g;
  const int m = g.order();

  std::set<std::vector<elt>> seen;
  std::vector<std::vector<elt>> pool;
  auto push = [&](std::vector<elt> f) {
    if (seen.insert(f).second) pool.push_back(std::move(f));
  };
  std::vector<elt> ident(m);
  for (elt x = 0; x < m; ++x) ident[x] = x;
  push(ident);
  auto action_row = [&](elt s) {
    const elt* row = gg.action.row(s);
    return std::vector<elt>(row, row + m);
  };
  for (elt s = 0; s < gg.gamma.order(); ++s) push(action_row(s));
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      std::vector<elt> sum(m), ij(m), ji(m);
      for (elt x = 0; x < m; ++x) {
        sum[x] = g.mul(pool[i][x], pool[j][x]);
        ij[x] = pool[i][pool[j][x]];
        ji[x] = pool[j][pool[i][x]];
      }
      push(std::move(sum));
      push(std::move(ij));
      push(std::move(ji));
    }

  std::vector<std::vector<elt>> elems(seen.begin(), seen.end());
  if (elems.front() != std::vector<elt>(m, 0))
    fatal_disagreement("closure lost the zero endomorphism");
  std::map<std::vector<elt>, elt> index;
  for (std::size_t i = 0; i < elems.size(); ++i)
    index[elems[i]] = static_cast<elt>(i);
  auto at = [&](const std::vector<elt>& f) {
    auto it = index.find(f);
    if (it == index.end()) fatal_disagreement("closure missed a product");
    return it->second;
  };

  const int r = static_cast<int>(elems.size());
  std::vector<elt> add_flat(static_cast<std::size_t>(r) * r);
  std::vector<std::vector<elt>> mul_rows(r, std::vector<elt>(r));
  std::vector<elt> work(m);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      for (elt x = 0; x < m; ++x) work[x] = g.mul(elems[i][x], elems[j][x]);
      add_flat[static_cast<std::size_t>(i) * r + j] = at(work);
      for (elt x = 0; x < m; ++x) work[x] = elems[i][elems[j][x]];
      mul_rows[i][j] = at(work);
    }

  GeneratedRing out{
      make_ring(make_group_flat(r, add_flat, "endomorphism span of " + g.name()),
                mul_rows, "operators in End(" + g.name() + ")"),
      {}};
  for (elt s = 0; s < gg.gamma.order(); ++s)
    out.operator_image.push_back(at(action_row(s)));
  return out;
}

struct AuditReport {
  int triples = 0;                 // representatives audited
  int nilpotent_modules = 0;       // primary-module checks performed
  int abelian_modules = 0;         // full abelian batteries performed
  int primary_operator_cases = 0;  // audits whose operator group is a p-group
  int rings_built = 0;             // generated endomorphism rings constructed
};

/// Audits one minimal non-Kneser triple against the structural laws; any
/// violation ends the process via a hard disagreement.  Counts what ran in
/// the report so callers can assert coverage.
inline void audit_mnk_triple(const Triple& t, AuditReport& report) {
  require(is_mnk(t), "BadParameters",
          "the audit expects a minimal non-Kneser triple");
  const GammaGroup& gg = *t.ctx;
  const FiniteGroup& gamma = gg.gamma;
  const FiniteGroup& g = gg.g;
  ++report.triples;

  // only the identity may fix the module pointwise while its cocycle value
  // sits in the module's centre
  std::vector<char> fixes_all(gamma.order(), 1);
  for (elt s = 0; s < gamma.order(); ++s)
    for (elt x = 0; x < g.order(); ++x)
      if (gg.act(s, x) != x) {
        fixes_all[s] = 0;
        break;
      }
  std::vector<char> central(g.order(), 1);
  for (elt x = 0; x < g.order(); ++x)
    for (elt y = 0; y < g.order(); ++y)
      if (g.mul(x, y) != g.mul(y, x)) {
        central[x] = 0;
        break;
      }
  int degenerate = 0;
  for (elt s = 0; s < gamma.order(); ++s)
    if (fixes_all[s] && central[t.eta[s]]) ++degenerate;
  if (degenerate != 1)
    fatal_disagreement(
        "a non-identity operator fixes the module and has a central value");

  if (is_nilpotent(g)) {
    ++report.nilpotent_modules;
    if (prime_factors(g.order()).size() != 1)
      fatal_disagreement("nilpotent module of a minimal triple is not primary");
  }

  if (g.abelian()) {
    int kernel = 0;
    for (elt s = 0; s < gamma.order(); ++s)
      if (fixes_all[s]) ++kernel;
    if (kernel != 1)
      fatal_disagreement("abelian module carries an unfaithful minimal action");
  }
  if (!g.abelian() || !gamma.abelian()) return;

  ++report.abelian_modules;
  const int p = static_cast<int>(prime_factors(g.order())[0]);

  std::set<elt> values(t.eta.begin(), t.eta.end());
  if (static_cast<int>(values.size()) != gamma.order())
    fatal_disagreement("cocycle on an abelian minimal triple is not injective");

  // the operator group is a p-group exactly when fixed points exist, exactly
  // when there are p of them, exactly when the module has index p over it
  bool primary = prime_factors(gamma.order()) ==
                 std::vector<std::int64_t>{static_cast<std::int64_t>(p)};
  bool has_fixed = t.fix().size() > 1;
  bool prime_fixed = t.fix().size() == p;
  bool index_p = g.order() == p * gamma.order();
  if (primary != has_fixed || primary != prime_fixed || primary != index_p)
    fatal_disagreement("primary-operator equivalences fail on a minimal triple");
  if (primary) ++report.primary_operator_cases;

  IdealLattice lat = all_ideals(gg);
  int minimal_nonzero = 0;
  for (std::size_t i = 0; i < lat.ideals.size(); ++i) {
    const Subgroup& a = lat.ideals[i];
    if (a.size() == 1) continue;
    bool bottom = true;
    for (std::size_t j = 0; j < lat.ideals.size(); ++j) {
      const Subgroup& b = lat.ideals[j];
      if (b.size() > 1 && b.size() < a.size() && subgroup_leq(b, a))
        bottom = false;
    }
    if (bottom) ++minimal_nonzero;
  }
  if (minimal_nonzero != 1)
    fatal_disagreement("abelian minimal triple lacks a unique minimal submodule");

  GeneratedRing span = generated_endomorphism_ring(gg);
  ++report.rings_built;
  const FiniteRing& R = span.ring;

  // locality two ways: only trivial idempotents, and a genuine maximal ideal
  int idempotents = 0;
  for (elt e = 0; e < R.size(); ++e)
    if (R.times(e, e) == e) ++idempotents;
  if (idempotents != 2)
    fatal_disagreement("generated endomorphism ring is not local");
  std::vector<elt> mi = maximal_ideal(R);

  int exponent = 1;
  for (elt x = 0; x < g.order(); ++x)
    exponent = std::max(exponent, g.element_order(x));
  if (R.add.element_order(R.one) != exponent)
    fatal_disagreement("ring characteristic differs from the module exponent");

  for (elt s = 0; s < gamma.order(); ++s)
    if (!R.is_unit(span.operator_image[s]))
      fatal_disagreement("an operator image fails to be a unit");
  if (generated_subgroup(R.add, span.operator_image).size() != R.size())
    fatal_disagreement("operator images do not span the ring additively");

  if (primary) {
    if (R.size() != static_cast<int>(mi.size()) * p)
      fatal_disagreement("residue field of the generated ring has composite order");
    if (R.size() != g.order())
      fatal_disagreement("generated ring size differs from the module size");
    std::set<elt> one_units;
    for (elt v : mi) one_units.insert(R.plus(R.one, v));
    std::set<elt> images(span.operator_image.begin(), span.operator_image.end());
    if (one_units != images)
      fatal_disagreement("operators differ from the one-units of the generated ring");
  }
}

/// Runs the structural audit over every class representative of a
/// minimal-non-Kneser classification run.
inline AuditReport mnk_invariant_audit(const ClassificationRun& run) {
  require(run.kind == "mnk", "BadParameters",
          "the audit applies to minimal non-Kneser runs");
  AuditReport report;
  for (const ClassEntry& entry : run.classes) audit_mnk_triple(entry.rep, report);
  return report;
}

}  // namespace cogalois
