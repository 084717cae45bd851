#pragma once

// Named verification batteries.  Each battery re-proves one cluster of
// structural facts at its declared bounds and returns what it checked plus a
// list of violations; the underlying verifiers abort on internal route
// disagreements, and the batteries convert those aborts into recorded
// violations tied to the offending triple.  All batteries are deterministic:
// parallel sweeps merge their cells in job order, so the output is
// independent of the worker count.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "cogalois/catalog.hpp"
#include "cogalois/classify.hpp"
#include "cogalois/cocycle.hpp"
#include "cogalois/cogalois_ideals.hpp"
#include "cogalois/common.hpp"
#include "cogalois/connexion.hpp"
#include "cogalois/families.hpp"
#include "cogalois/group.hpp"
#include "cogalois/kneser.hpp"
#include "cogalois/operator_group.hpp"
#include "cogalois/rings.hpp"
#include "cogalois/selfaction.hpp"
#include "cogalois/zmodule.hpp"

namespace cogalois {

struct SuiteResult {
  std::string suite;
  long long checked = 0;
  std::vector<std::string> violations;

  bool pass() const { return violations.empty(); }
};

/// Knobs shared by every battery.  A zero bound means "use the battery's
/// declared default"; seed and samples only affect the sampled parts of the
/// quadratic battery.
struct SuiteOptions {
  int max_gamma = 0;
  int max_g = 0;
  int workers = 1;
  std::uint64_t seed = 1;
  int samples = 200;
};

namespace detail {

template <typename T>
inline void append_moved(std::vector<T>& into, std::vector<T>&& from) {
  into.insert(into.end(), std::make_move_iterator(from.begin()),
              std::make_move_iterator(from.end()));
}

inline int mod_p(long long x, int p) {
  long long m = x % p;
  if (m < 0) m += p;
  return static_cast<int>(m);
}

inline std::string cocycle_str(const std::vector<elt>& eta) {
  std::string s = "[";
  for (std::size_t i = 0; i < eta.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(eta[i]);
  }
  return s + "]";
}

inline std::string triple_str(const Triple& t) {
  return t.gamma().name() + " on " + t.g().name() + " with cocycle " +
         cocycle_str(t.eta);
}

/// Runs body(k) for k in [0, jobs) on `workers` threads.  Results are stored
/// per job and the first failure is rethrown in job order, so both outputs
/// and errors are independent of the worker count.
template <typename Cell, typename Body>
std::vector<Cell> job_cells(int jobs, int workers, Body&& body) {
  std::vector<Cell> cells(static_cast<std::size_t>(jobs));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
  std::atomic<int> cursor{0};
  auto pull = [&]() {
    for (;;) {
      const int k = cursor.fetch_add(1);
      if (k >= jobs) break;
      try {
        cells[static_cast<std::size_t>(k)] = body(k);
      } catch (...) {
        errors[static_cast<std::size_t>(k)] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    pull();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(pull);
    for (auto& th : pool) th.join();
  }
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
  return cells;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// The law sweep: every operator pair from the catalog, every action, every
// generating cocycle.  Four independent parts can be toggled so that the
// narrower batteries reuse the same walk:
//   laws          -- adjoint-pair laws of (J, S) plus "closure = identity on
//                    the ideals of a covering triple",
//   kneser_routes -- per-ideal covering verdicts by every available route,
//   cogalois_routes -- per-ideal duality verdicts by every available route,
//   surjectivity  -- direct surjectivity vs reduction along the central
//                    image, and the kernel-index identity on covering
//                    cocycles.
// ---------------------------------------------------------------------------

struct SweepParts {
  bool laws = true;
  bool kneser_routes = true;
  bool cogalois_routes = true;
  bool surjectivity = true;
};

struct ConnexionSweep {
  long long triples = 0;
  long long surjective = 0;
  long long kneser_checks = 0;
  long long cogalois_checks = 0;
  std::vector<std::string> law_violations;
  std::vector<std::string> kneser_violations;
  std::vector<std::string> cogalois_violations;
  std::vector<std::string> surjectivity_violations;
};

inline ConnexionSweep connexion_sweep(int max_gamma = 8, int max_g = 8,
                                      int workers = 1, SweepParts parts = {}) {
  require(max_gamma >= 1 && max_g >= 1 && max_gamma <= 16 && max_g <= 16,
          "BoundExceeded", "the law sweep covers group orders up to 16");
  const auto gammas = catalog_upto(max_gamma);
  const auto mods = catalog_upto(max_g);
  const int jobs = static_cast<int>(gammas.size() * mods.size());

  auto cells = detail::job_cells<ConnexionSweep>(jobs, workers, [&](int k) {
    const FiniteGroup& gamma = gammas[static_cast<std::size_t>(k) / mods.size()];
    const FiniteGroup& g = mods[static_cast<std::size_t>(k) % mods.size()];
    ConnexionSweep cell;
    auto actions = all_actions(gamma, g);
    int action_idx = -1;
    for (GammaGroup& action : actions) {
      ++action_idx;
      auto ctx = std::make_shared<const GammaGroup>(std::move(action));
      const IdealLattice lat = all_ideals(*ctx);
      for (const auto& eta : enumerate_cocycles(*ctx, true)) {
        const Triple t = make_triple(ctx, eta);
        ++cell.triples;
        const std::string where = gamma.name() + " on " + g.name() +
                                  ", action " + std::to_string(action_idx) +
                                  ", cocycle " + detail::cocycle_str(eta);

        KneserReport kr;
        bool have_kr = false;
        if (parts.laws || parts.kneser_routes) {
          try {
            kr = kneser_ideals(t, lat);
            have_kr = true;
            if (parts.kneser_routes)
              cell.kneser_checks += static_cast<long long>(lat.ideals.size());
          } catch (const std::logic_error& e) {
            (parts.kneser_routes ? cell.kneser_violations
                                 : cell.law_violations)
                .push_back(where + ": " + e.what());
          }
        }

        if (parts.cogalois_routes) {
          try {
            cogalois_ideals(t, lat);
            cell.cogalois_checks += static_cast<long long>(lat.ideals.size());
          } catch (const std::logic_error& e) {
            cell.cogalois_violations.push_back(where + ": " + e.what());
          }
        }

        if (parts.laws) {
          try {
            const ConnexionReport cr = verify_connexion(t, lat);
            // the ideals are sorted with the zero ideal first, so kneser[0]
            // says the triple itself is covering
            if (have_kr && kr.kneser[0] && !cr.js_identity_on_ideals)
              cell.law_violations.push_back(
                  where +
                  ": the closure is not the identity on the ideals of a "
                  "covering triple");
          } catch (const std::logic_error& e) {
            cell.law_violations.push_back(where + ": " + e.what());
          }
        }

        if (parts.surjectivity) {
          try {
            const bool direct = is_surjective(t);
            bool reduced = direct;
            bool have_reduced = false;
            try {
              reduced = surjective_by_reduction(t);
              have_reduced = true;
            } catch (const Error& err) {
              if (err.code() != std::string("ImageNotIdeal")) throw;
            }
            if (have_reduced && reduced != direct)
              cell.surjectivity_violations.push_back(
                  where +
                  ": reduction along the central image disagrees with direct "
                  "surjectivity");
            if (direct) {
              ++cell.surjective;
              if (gamma.order() !=
                  static_cast<int>(t.delta.size()) * g.order())
                cell.surjectivity_violations.push_back(
                    where +
                    ": surjective cocycle whose kernel index differs from "
                    "the module order");
            }
          } catch (const std::logic_error& e) {
            cell.surjectivity_violations.push_back(where + ": " + e.what());
          }
        }
      }
    }
    return cell;
  });

  ConnexionSweep total;
  for (ConnexionSweep& cell : cells) {
    total.triples += cell.triples;
    total.surjective += cell.surjective;
    total.kneser_checks += cell.kneser_checks;
    total.cogalois_checks += cell.cogalois_checks;
    detail::append_moved(total.law_violations, std::move(cell.law_violations));
    detail::append_moved(total.kneser_violations,
                         std::move(cell.kneser_violations));
    detail::append_moved(total.cogalois_violations,
                         std::move(cell.cogalois_violations));
    detail::append_moved(total.surjectivity_violations,
                         std::move(cell.surjectivity_violations));
  }
  return total;
}

/// Adjoint-pair laws plus the surjectivity witnesses over the full sweep.
inline SuiteResult suite_connexion_laws(int max_gamma = 8, int max_g = 8,
                                        int workers = 1) {
  SweepParts parts;
  parts.kneser_routes = false;    // covered by the abstract covering battery
  parts.cogalois_routes = false;  // covered by the abstract duality battery
  ConnexionSweep s = connexion_sweep(max_gamma, max_g, workers, parts);
  SuiteResult r;
  r.suite = "connexion-laws";
  r.checked = s.triples;
  detail::append_moved(r.violations, std::move(s.law_violations));
  detail::append_moved(r.violations, std::move(s.surjectivity_violations));
  return r;
}

/// Per-ideal covering verdicts, every route against every other.
inline SuiteResult suite_abstract_kneser(int max_gamma = 8, int max_g = 8,
                                         int workers = 1) {
  SweepParts parts;
  parts.laws = false;
  parts.cogalois_routes = false;
  parts.surjectivity = false;
  ConnexionSweep s = connexion_sweep(max_gamma, max_g, workers, parts);
  SuiteResult r;
  r.suite = "ab1";
  r.checked = s.kneser_checks;
  r.violations = std::move(s.kneser_violations);
  return r;
}

/// Per-ideal duality verdicts, every route against every other.
inline SuiteResult suite_abstract_cogalois(int max_gamma = 8, int max_g = 8,
                                           int workers = 1) {
  SweepParts parts;
  parts.laws = false;
  parts.kneser_routes = false;
  parts.surjectivity = false;
  ConnexionSweep s = connexion_sweep(max_gamma, max_g, workers, parts);
  SuiteResult r;
  r.suite = "ab2";
  r.checked = s.cogalois_checks;
  r.violations = std::move(s.cogalois_violations);
  return r;
}

// ---------------------------------------------------------------------------
// Abelian-module identities: the cocycle module, its character dual, and the
// augmentation model, swept over every operator group from the catalog and
// every abelian module up to the bound.
// ---------------------------------------------------------------------------

namespace detail {

enum class ModulePart { Pairing, Composition, Augmentation };

inline SuiteResult module_identity_sweep(ModulePart part,
                                         const char* suite_name, int max_gamma,
                                         int max_module, int workers) {
  require(max_gamma >= 1 && max_module >= 1 && max_gamma <= 16 &&
              max_module <= 16,
          "BoundExceeded", "the module identity sweeps cover orders up to 16");
  const auto gammas = catalog_upto(max_gamma);
  const auto mods = abelian_catalog_upto(max_module);
  const int jobs = static_cast<int>(gammas.size() * mods.size());

  struct Cell {
    long long checked = 0;
    std::vector<std::string> violations;
  };

  auto cells = job_cells<Cell>(jobs, workers, [&](int k) {
    const FiniteGroup& gamma = gammas[static_cast<std::size_t>(k) / mods.size()];
    const FiniteGroup& A = mods[static_cast<std::size_t>(k) % mods.size()];
    Cell cell;
    auto actions = all_actions(gamma, A);
    int action_idx = -1;
    for (GammaGroup& action : actions) {
      ++action_idx;
      auto ctx = std::make_shared<const GammaGroup>(std::move(action));
      const std::string where = gamma.name() + " on " + A.name() +
                                ", action " + std::to_string(action_idx);
      try {
        const Z1Module m = build_z1_module(ctx);
        switch (part) {
          case ModulePart::Pairing: {
            const DualModule d = build_dual_module(m);
            bool eval_ok = true;
            for (int i = 0; eval_ok && i < m.z1.order(); ++i)
              for (elt s = 0; eval_ok && s < gamma.order(); ++s)
                if (d.maps[static_cast<std::size_t>(d.eval[s])]
                          [static_cast<std::size_t>(i)] !=
                    m.cocycles[static_cast<std::size_t>(i)]
                              [static_cast<std::size_t>(s)])
                  eval_ok = false;
            if (!eval_ok)
              cell.violations.push_back(
                  where +
                  ": reading the evaluation elements does not recover the "
                  "cocycles");
            if (d.dual.order() <= 128 &&
                count_equivariant_homs(d, *ctx) != m.z1.order())
              cell.violations.push_back(
                  where +
                  ": equivariant maps out of the dual do not biject with the "
                  "cocycles");
            ++cell.checked;
            break;
          }
          case ModulePart::Composition: {
            const DualModule d = build_dual_module(m);
            bool upper_ok = true;
            for (const Subgroup& lam : all_subgroups(gamma, &d.delta_star)) {
              const Subgroup direct = upper_perp(m, lam);
              const Subgroup via =
                  dual_lower_perp(m, d, j_operator(d.eval_triple, lam));
              if (direct.members != via.members) upper_ok = false;
            }
            if (!upper_ok)
              cell.violations.push_back(
                  where +
                  ": annihilators above the kernel do not transfer through "
                  "the closure of the dual");
            bool lower_ok = true;
            auto check_lower = [&](const Subgroup& zsub) {
              const Subgroup direct = lower_perp(m, zsub);
              const Subgroup via =
                  s_operator(d.eval_triple, dual_upper_perp(m, d, zsub));
              if (direct.members != via.members) lower_ok = false;
            };
            for (int i = 0; i < m.z1.order(); ++i)
              check_lower(generated_subgroup(m.z1, {static_cast<elt>(i)}));
            check_lower(m.b1);
            check_lower(full_subgroup(m.z1));
            if (!lower_ok)
              cell.violations.push_back(
                  where +
                  ": cocycle annihilators do not transfer through the dual "
                  "evaluation");
            bool closure_ok = true;
            for (const Subgroup& lam : all_subgroups(gamma)) {
              const Subgroup direct = upper_perp(m, lam);
              const Subgroup via =
                  upper_perp(m, join(gamma, lam, d.delta_star));
              if (direct.members != via.members) closure_ok = false;
            }
            if (!closure_ok)
              cell.violations.push_back(
                  where +
                  ": annihilators distinguish a subgroup from its join with "
                  "the evaluation kernel");
            cog_group(m);  // quotient-embedding consistency checks run inside
            ++cell.checked;
            break;
          }
          case ModulePart::Augmentation: {
            const AugmentationReport ar = augmentation_comparison(m);
            if (ar.applicable) {
              if (ar.solver_count != m.z1.order())
                cell.violations.push_back(
                    where +
                    ": the linear-system model counts a different number of "
                    "cocycles");
              if (ar.table_model && ar.table_checked != m.z1.order())
                cell.violations.push_back(
                    where +
                    ": the explicit table module counts a different number "
                    "of cocycles");
              ++cell.checked;
            }
            break;
          }
        }
      } catch (const std::logic_error& e) {
        cell.violations.push_back(where + ": " + e.what());
      }
    }
    return cell;
  });

  SuiteResult r;
  r.suite = suite_name;
  for (Cell& cell : cells) {
    r.checked += cell.checked;
    detail::append_moved(r.violations, std::move(cell.violations));
  }
  return r;
}

}  // namespace detail

/// Evaluation elements of the character dual recover every cocycle, and the
/// equivariant maps out of the dual biject with the cocycles.
inline SuiteResult suite_pairing(int max_gamma = 8, int max_module = 9,
                                 int workers = 1) {
  return detail::module_identity_sweep(detail::ModulePart::Pairing, "pairing",
                                       max_gamma, max_module, workers);
}

/// Annihilator transfers between the cocycle module and the dual compose
/// with the connexion operators as stated.
inline SuiteResult suite_composition(int max_gamma = 8, int max_module = 9,
                                     int workers = 1) {
  return detail::module_identity_sweep(detail::ModulePart::Composition,
                                       "composition", max_gamma, max_module,
                                       workers);
}

/// The augmentation-ideal model counts the cocycles, by the linear system
/// and, when small enough, by the explicit table module.
inline SuiteResult suite_augmentation(int max_gamma = 8, int max_module = 9,
                                      int workers = 1) {
  return detail::module_identity_sweep(detail::ModulePart::Augmentation,
                                       "augmentation", max_gamma, max_module,
                                       workers);
}

// ---------------------------------------------------------------------------
// Adequate units of cyclic self-actions: the closed-form criterion, the
// prime-local description, twisted associativity, and (for small moduli) the
// direct group construction all agree; two known unit sets are pinned.
// ---------------------------------------------------------------------------

inline SuiteResult suite_adequate_units(int bound = 500) {
  require(bound >= 2, "BadParameters",
          "the unit sweep needs a bound of at least two");
  SuiteResult r;
  r.suite = "adequate-units";
  for (int n = 2; n <= bound; ++n) {
    try {
      const std::vector<int> units = adequate_units(n);
      ++r.checked;
      if (units.empty() || units.front() != 1)
        r.violations.push_back("modulus " + std::to_string(n) +
                               ": the unit 1 is missing from the adequate set");
      for (int u : units)
        if (gcd_i64(u, n) != 1)
          r.violations.push_back("modulus " + std::to_string(n) +
                                 ": non-unit " + std::to_string(u) +
                                 " reported adequate");
    } catch (const std::logic_error& e) {
      r.violations.push_back("modulus " + std::to_string(n) + ": " +
                             std::string(e.what()));
    }
  }
  const auto expect = [&](int n, const std::vector<int>& want) {
    ++r.checked;
    if (adequate_units(n) != want)
      r.violations.push_back("modulus " + std::to_string(n) +
                             ": adequate units differ from the known set");
  };
  expect(4, {1, 3});
  expect(8, {1, 3, 5, 7});
  return r;
}

// ---------------------------------------------------------------------------
// Surjectivity through primary components, for every nilpotent module from
// the catalog with at least two primary components.
// ---------------------------------------------------------------------------

inline SuiteResult suite_pronil(int max_gamma = 6, int max_module = 24,
                                int workers = 1) {
  const auto gammas = catalog_upto(max_gamma);
  const auto mods = nilpotent_non_primary_upto(max_module);
  const int jobs = static_cast<int>(gammas.size() * mods.size());

  struct Cell {
    long long checked = 0;
    std::vector<std::string> violations;
  };

  auto cells = detail::job_cells<Cell>(jobs, workers, [&](int k) {
    const FiniteGroup& gamma = gammas[static_cast<std::size_t>(k) / mods.size()];
    const FiniteGroup& g = mods[static_cast<std::size_t>(k) % mods.size()];
    Cell cell;
    auto actions = all_actions(gamma, g);
    int action_idx = -1;
    for (GammaGroup& action : actions) {
      ++action_idx;
      auto ctx = std::make_shared<const GammaGroup>(std::move(action));
      for (const auto& eta : enumerate_cocycles(*ctx, false)) {
        const Triple t = make_triple(ctx, eta);
        const std::string where = gamma.name() + " on " + g.name() +
                                  ", action " + std::to_string(action_idx) +
                                  ", cocycle " + detail::cocycle_str(eta);
        try {
          const PronilReport pr = pronil_surjectivity(t);
          const bool all_components =
              std::all_of(pr.component_surjective.begin(),
                          pr.component_surjective.end(),
                          [](char c) { return c != 0; });
          if (all_components != pr.surjective)
            cell.violations.push_back(
                where +
                ": the primary components certify a different surjectivity "
                "verdict");
          ++cell.checked;
        } catch (const std::logic_error& e) {
          cell.violations.push_back(where + ": " + e.what());
        }
      }
    }
    return cell;
  });

  SuiteResult r;
  r.suite = "pronil";
  for (Cell& cell : cells) {
    r.checked += cell.checked;
    detail::append_moved(r.violations, std::move(cell.violations));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Self-action deformations of the cyclic groups of orders four and eight,
// with the directional facts for the two twisting units of order eight.
// ---------------------------------------------------------------------------

inline SuiteResult suite_selfact8() {
  SuiteResult r;
  r.suite = "selfact-8";

  const auto class_check = [&](int n, const std::vector<std::string>& names) {
    const DeformationClasses dc = deformation_classes(cyclic_group(n));
    ++r.checked;
    if (dc.reps.size() != names.size()) {
      r.violations.push_back("deformations of the cyclic group of order " +
                             std::to_string(n) + ": expected " +
                             std::to_string(names.size()) + " classes, found " +
                             std::to_string(dc.reps.size()));
      return;
    }
    for (const std::string& nm : names) {
      const FiniteGroup want = catalog_group(nm);
      int hits = 0;
      for (const FiniteGroup& rep : dc.reps)
        if (isomorphic(rep, want)) ++hits;
      if (hits != 1)
        r.violations.push_back("deformations of the cyclic group of order " +
                               std::to_string(n) +
                               ": expected exactly one class isomorphic to " +
                               nm);
    }
  };
  class_check(4, {"Z4", "Z2xZ2"});
  class_check(8, {"Z8", "D8", "Q8"});

  for (int u : {3, 7}) {
    const GammaGroup om = cyclic_self_action(8, u);
    ++r.checked;
    if (!is_adequate(om)) {
      r.violations.push_back("unit " + std::to_string(u) +
                             " mod 8 is not adequate");
      continue;
    }
    const Triple fwd = forward_triple(om);
    const Triple bwd = backward_triple(om);
    if (!is_cogalois(fwd))
      r.violations.push_back("unit " + std::to_string(u) +
                             ": the triple into the deformation fails the "
                             "full duality");
    if (!is_surjective(bwd))
      r.violations.push_back("unit " + std::to_string(u) +
                             ": the reverse triple is not covering");
    if (is_cogalois(bwd))
      r.violations.push_back("unit " + std::to_string(u) +
                             ": the reverse triple is unexpectedly a full "
                             "duality");
  }

  ++r.checked;
  const FiniteGroup d7 = deform(cyclic_self_action(8, 7));
  const FiniteGroup d3 = deform(cyclic_self_action(8, 3));
  const FiniteGroup dih = catalog_group("D8");
  const FiniteGroup quat = catalog_group("Q8");
  const bool pair_ok = (isomorphic(d7, dih) && isomorphic(d3, quat)) ||
                       (isomorphic(d7, quat) && isomorphic(d3, dih));
  if (!pair_ok)
    r.violations.push_back(
        "units 7 and 3 do not deform the cyclic group of order 8 into the "
        "dihedral and quaternion groups");
  return r;
}

// ---------------------------------------------------------------------------
// The order-eight dihedral/quaternion pair: the connecting cocycle is a
// bijection whose inverse is again a cocycle; the forward triple is a
// minimal duality failure while the reverse triple realizes the full
// duality.
// ---------------------------------------------------------------------------

inline SuiteResult suite_d8q() {
  SuiteResult r;
  r.suite = "d8q";
  const DihedralQuaternionPair dq = dihedral_quaternion_pair();
  const Triple& f = dq.forward;
  const Triple& b = dq.backward;

  ++r.checked;
  std::vector<char> hit(static_cast<std::size_t>(f.g().order()), 0);
  for (elt s = 0; s < f.gamma().order(); ++s)
    hit[static_cast<std::size_t>(f.eta[static_cast<std::size_t>(s)])] = 1;
  if (std::find(hit.begin(), hit.end(), 0) != hit.end())
    r.violations.push_back("the connecting cocycle is not bijective");

  ++r.checked;
  bool inverse_ok = true;
  for (elt s = 0; s < f.gamma().order(); ++s)
    if (b.eta[static_cast<std::size_t>(
            f.eta[static_cast<std::size_t>(s)])] != s)
      inverse_ok = false;
  if (!inverse_ok)
    r.violations.push_back(
        "the reverse cocycle is not the inverse bijection");

  ++r.checked;
  if (!is_mncg(f)) {
    r.violations.push_back(
        "the dihedral-to-quaternion triple is not a minimal duality failure");
  } else {
    const MncgCertificate cert = mncg_certificate(f);
    if (!cert.minimal || cert.witness.empty())
      r.violations.push_back(
          "the minimality certificate of the dihedral-to-quaternion triple "
          "is incomplete");
  }

  ++r.checked;
  if (!is_surjective(b))
    r.violations.push_back("the reverse triple is not covering");
  if (!is_cogalois(b))
    r.violations.push_back("the reverse triple fails the full duality");
  if (is_mncg(b))
    r.violations.push_back(
        "the reverse triple reports a minimal duality failure despite "
        "realizing the full duality");
  return r;
}

// ---------------------------------------------------------------------------
// Exhaustive classification sweeps with the power-map filter, matched
// one-to-one against the expected class lists computed from the bounds.
// ---------------------------------------------------------------------------

namespace detail {

inline void match_expected_classes(
    const ClassificationRun& run,
    const std::vector<std::pair<std::string, Triple>>& expected,
    SuiteResult& r) {
  std::vector<int> matched(expected.size(), -1);
  for (std::size_t c = 0; c < run.classes.size(); ++c) {
    int found = -1;
    for (std::size_t e = 0; e < expected.size(); ++e) {
      if (!triples_isomorphic(run.classes[c].rep, expected[e].second))
        continue;
      if (found >= 0) {
        r.violations.push_back("one class matches both " +
                               expected[static_cast<std::size_t>(found)].first +
                               " and " + expected[e].first);
        continue;
      }
      if (matched[e] >= 0) {
        r.violations.push_back(expected[e].first +
                               " is matched by two distinct classes");
        continue;
      }
      matched[e] = static_cast<int>(c);
      found = static_cast<int>(e);
    }
    if (found < 0)
      r.violations.push_back("unexpected class: " +
                             triple_str(run.classes[c].rep));
  }
  for (std::size_t e = 0; e < expected.size(); ++e)
    if (matched[e] < 0)
      r.violations.push_back("missing class: " + expected[e].first);
}

}  // namespace detail

/// Minimal non-covering triples under power-map actions: exactly the
/// involution class on the cyclic module of order four plus one unit class
/// per admissible prime-and-order pair.
inline SuiteResult suite_character(int max_gamma = 16, int max_g = 16,
                                   int workers = 1) {
  SuiteResult r;
  r.suite = "character";
  const ClassificationRun run =
      enumerate_mnk(max_gamma, max_g, "character", workers);
  r.checked = run.triples_seen;

  std::vector<std::pair<std::string, Triple>> expected;
  if (max_gamma >= 2 && max_g >= 4)
    expected.emplace_back(
        "the involution class on the cyclic module of order four",
        mnk_char_z2_z4());
  for (int p : {3, 5, 7, 11, 13}) {
    if (p > max_g) continue;
    for (int rr = 2; rr <= max_gamma && rr < p; ++rr) {
      if ((p - 1) % rr != 0) continue;
      expected.emplace_back("the order-" + std::to_string(rr) +
                                " unit class modulo " + std::to_string(p),
                            mnk_char_canonical(p, rr));
    }
  }
  detail::match_expected_classes(run, expected, r);
  return r;
}

/// Minimal duality failures under power-map actions: exactly the three known
/// families, instantiated within the bounds.
inline SuiteResult suite_mncg(int max_gamma = 16, int max_g = 16,
                              int workers = 1) {
  SuiteResult r;
  r.suite = "mncg";
  const ClassificationRun run =
      enumerate_mncg(max_gamma, max_g, "character", workers);
  r.checked = run.triples_seen;

  std::vector<std::pair<std::string, Triple>> expected;
  const auto admit = [&](std::string name, Triple t) {
    if (t.gamma().order() <= max_gamma && t.g().order() <= max_g)
      expected.emplace_back(std::move(name), std::move(t));
  };
  admit("the Klein-four class on the cyclic module of order four",
        mncg_family_i());
  admit("the dihedral class on the mixed module of order eight",
        mncg_family_ii());
  for (int p : {3, 5, 7, 11, 13})
    for (int rr = 2; rr < p; ++rr) {
      if ((p - 1) % rr != 0) continue;
      if (p * rr > max_gamma || 2 * p > max_g) continue;
      admit("the metacyclic class at (" + std::to_string(p) + "," +
                std::to_string(rr) + ")",
            mncg_family_iii(p, rr));
    }
  detail::match_expected_classes(run, expected, r);
  return r;
}

// ---------------------------------------------------------------------------
// The quadratic two-parameter family: minimality is equivalent to the
// nonvanishing of the symmetric form's determinant, the isomorphism classes
// match the matrix-orbit count, exhaustively at two generators and by
// stratified sampling at three.
// ---------------------------------------------------------------------------

inline SuiteResult suite_quad(std::uint64_t seed = 1, int samples = 200) {
  require(samples >= 1, "BadParameters", "need at least one sample");
  SuiteResult r;
  r.suite = "quad-family";

  {
    const QuadFamily qf = quad_family(3, 2);
    const IdealLattice lat = all_ideals(*qf.ctx);
    std::vector<Triple> reps;
    int minimal = 0, nonsingular = 0;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int d = 0; d < 3; ++d) {
          const int det = detail::mod_p(
              static_cast<long long>(a) * d - static_cast<long long>(b) * b,
              3);
          if (det != 0) ++nonsingular;
          const std::vector<std::vector<int>> shape{{a, b}, {b, d}};
          for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y) {
              Triple t = quad_cocycle(qf, {x, y}, shape);
              ++r.checked;
              const bool mnk = is_mnk(t, &lat);
              if (mnk != (det != 0)) {
                r.violations.push_back(
                    "shape [[" + std::to_string(a) + "," + std::to_string(b) +
                    "],[" + std::to_string(b) + "," + std::to_string(d) +
                    "]] with offset (" + std::to_string(x) + "," +
                    std::to_string(y) +
                    "): minimality disagrees with the determinant test");
                continue;
              }
              if (!mnk) continue;
              ++minimal;
              bool known = false;
              for (const Triple& rep : reps)
                if (triples_isomorphic(t, rep)) {
                  known = true;
                  break;
                }
              if (!known) reps.push_back(std::move(t));
            }
        }
    if (nonsingular != 18)
      r.violations.push_back(
          "two generators: expected eighteen nonsingular symmetric shapes, "
          "found " +
          std::to_string(nonsingular));
    if (minimal != 162)
      r.violations.push_back(
          "two generators: expected 162 minimal triples, found " +
          std::to_string(minimal));
    if (reps.size() != 2)
      r.violations.push_back(
          "two generators: expected exactly two isomorphism classes, found " +
          std::to_string(reps.size()));
    if (quad_matrix_classes(3, 2) != static_cast<int>(reps.size()))
      r.violations.push_back(
          "two generators: the matrix-orbit count differs from the triple "
          "classes");
  }

  {
    const QuadFamily qf = quad_family(3, 3);
    const IdealLattice lat = all_ideals(*qf.ctx);
    const auto shape_of = [](int a, int b, int c, int d, int e, int f) {
      return std::vector<std::vector<int>>{{a, b, c}, {b, d, e}, {c, e, f}};
    };
    const auto det3 = [](int a, int b, int c, int d, int e, int f) {
      const long long det =
          static_cast<long long>(a) * (static_cast<long long>(d) * f -
                                       static_cast<long long>(e) * e) -
          static_cast<long long>(b) * (static_cast<long long>(b) * f -
                                       static_cast<long long>(c) * e) +
          static_cast<long long>(c) * (static_cast<long long>(b) * e -
                                       static_cast<long long>(c) * d);
      return detail::mod_p(det, 3);
    };

    // every rank-deficient shape fails, here probed at the zero offset
    for (int code = 0; code < 729; ++code) {
      int digits[6];
      int rest = code;
      for (int& dig : digits) {
        dig = rest % 3;
        rest /= 3;
      }
      const int a = digits[0], b = digits[1], c = digits[2], d = digits[3],
                e = digits[4], f = digits[5];
      if (det3(a, b, c, d, e, f) != 0) continue;
      Triple t = quad_cocycle(qf, {0, 0, 0}, shape_of(a, b, c, d, e, f));
      ++r.checked;
      if (is_mnk(t, &lat))
        r.violations.push_back(
            "three generators: a singular shape produced a minimal triple");
    }

    Rng rng(seed);
    std::vector<Triple> reps;
    for (int i = 0; i < samples; ++i) {
      const int a = static_cast<int>(rng.below(3)),
                b = static_cast<int>(rng.below(3)),
                c = static_cast<int>(rng.below(3)),
                d = static_cast<int>(rng.below(3)),
                e = static_cast<int>(rng.below(3)),
                f = static_cast<int>(rng.below(3));
      const int x = static_cast<int>(rng.below(3)),
                y = static_cast<int>(rng.below(3)),
                z = static_cast<int>(rng.below(3));
      Triple t = quad_cocycle(qf, {x, y, z}, shape_of(a, b, c, d, e, f));
      ++r.checked;
      const bool mnk = is_mnk(t, &lat);
      if (mnk != (det3(a, b, c, d, e, f) != 0)) {
        r.violations.push_back(
            "three generators, sample " + std::to_string(i) +
            ": minimality disagrees with the determinant test");
        continue;
      }
      if (!mnk) continue;
      bool known = false;
      for (const Triple& rep : reps)
        if (triples_isomorphic(t, rep)) {
          known = true;
          break;
        }
      if (!known) reps.push_back(std::move(t));
    }
    if (reps.empty())
      r.violations.push_back(
          "three generators: sampling found no minimal triples");
    else if (reps.size() != 1)
      r.violations.push_back(
          "three generators: expected a single isomorphism class, found " +
          std::to_string(reps.size()));
    if (quad_matrix_classes(3, 3) != 1)
      r.violations.push_back(
          "three generators: the matrix-orbit count is not one");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Spot checks for the local-ring census: which small principal local rings
// admit minimal cocycles under the one-unit action, and whether the
// redundancy classes are exactly the unit-scaling-and-shift orbits.
// ---------------------------------------------------------------------------

inline SuiteResult suite_ring_spots() {
  SuiteResult r;
  r.suite = "ring-spots";

  const auto check_census = [&](FiniteRing ring, bool admits, int expect_mnk,
                                const Triple* expect_class) {
    const std::string name = ring.name;
    const PrincipalCensus census = principal_unit_triples(std::move(ring));
    ++r.checked;
    if ((census.mnk > 0) != admits) {
      r.violations.push_back(
          name + (admits ? ": expected minimal cocycles, found none"
                         : ": expected no minimal cocycles, found " +
                               std::to_string(census.mnk)));
      return;
    }
    if (!admits) return;
    if (census.mnk != expect_mnk)
      r.violations.push_back(name + ": expected " +
                             std::to_string(expect_mnk) +
                             " minimal cocycles, found " +
                             std::to_string(census.mnk));

    int carrying = -1;
    for (std::size_t i = 0; i < census.buckets.size(); ++i) {
      if (census.buckets[i].mnk == 0) continue;
      if (carrying >= 0) {
        r.violations.push_back(
            name + ": two redundancy classes carry minimal cocycles");
        return;
      }
      carrying = static_cast<int>(i);
    }
    const PrincipalBucket& bucket =
        census.buckets[static_cast<std::size_t>(carrying)];
    if (bucket.mnk != bucket.size)
      r.violations.push_back(
          name + ": the carrying redundancy class mixes minimal and "
                 "non-minimal cocycles");
    if (bucket.mnk != census.mnk)
      r.violations.push_back(
          name + ": minimal cocycles escaped the carrying class");

    const RingMnkReport rep = ring_mnk_report(census.rc);
    if (rep.orbits != 1)
      r.violations.push_back(
          name + ": unit scalings and fixed-submodule shifts do not connect "
                 "the minimal cocycles");
    if (rep.mnk != census.mnk)
      r.violations.push_back(
          name + ": the two census routes count different minimal sets");

    // recount the carrying class as the one-step orbit of its representative
    const FiniteRing& R = census.rc.ring;
    const auto homs = socle_homs(census.rc);
    const int n = census.rc.ctx->gamma.order();
    std::set<std::vector<elt>> orbit;
    for (elt u = 0; u < R.size(); ++u) {
      if (!R.is_unit(u)) continue;
      for (const auto& chi : homs) {
        std::vector<elt> img(static_cast<std::size_t>(n));
        for (int s = 0; s < n; ++s)
          img[static_cast<std::size_t>(s)] = R.plus(
              R.times(u,
                      bucket.representative[static_cast<std::size_t>(s)]),
              chi[static_cast<std::size_t>(s)]);
        orbit.insert(std::move(img));
      }
    }
    if (static_cast<int>(orbit.size()) != bucket.size)
      r.violations.push_back(
          name + ": the class size differs from the unit-and-shift orbit of "
                 "its representative");
    for (const auto& member : orbit)
      if (!std::binary_search(rep.minimal.begin(), rep.minimal.end(), member))
        r.violations.push_back(
            name + ": a unit-and-shift image is not a minimal cocycle");

    if (expect_class &&
        !triples_isomorphic(census.triple(
                                static_cast<std::size_t>(carrying)),
                            *expect_class))
      r.violations.push_back(
          name + ": the carrying class is not the expected involution class");
  };

  check_census(ring_from_eisenstein(3, 1, 2, 2, {1, 0}), true, 6, nullptr);
  check_census(ring_from_eisenstein(5, 1, 2, 2, {1, 0}), true, 20, nullptr);
  check_census(ring_from_eisenstein(3, 1, 3, 3, {1, 0, 0}), false, 0, nullptr);
  const Triple involution = mnk_char_z2_z4();
  check_census(ring_z_mod(4), true, 2, &involution);
  return r;
}

// ---------------------------------------------------------------------------
// Dispatcher used by the command-line verifier.
// ---------------------------------------------------------------------------

inline SuiteResult run_suite(const std::string& id,
                             const SuiteOptions& opt = {}) {
  const int w = opt.workers < 1 ? 1 : opt.workers;
  const auto mg = [&](int dflt) {
    return opt.max_gamma > 0 ? opt.max_gamma : dflt;
  };
  const auto mm = [&](int dflt) { return opt.max_g > 0 ? opt.max_g : dflt; };

  if (id == "connexion-laws")
    return suite_connexion_laws(mg(8), mm(8), w);
  if (id == "ab1") return suite_abstract_kneser(mg(8), mm(8), w);
  if (id == "ab2") return suite_abstract_cogalois(mg(8), mm(8), w);
  if (id == "pairing") return suite_pairing(mg(8), mm(9), w);
  if (id == "composition") return suite_composition(mg(8), mm(9), w);
  if (id == "augmentation") return suite_augmentation(mg(8), mm(9), w);
  if (id == "adequate-units") return suite_adequate_units(mg(500));
  if (id == "pronil") return suite_pronil(mg(6), mm(24), w);
  if (id == "character") return suite_character(mg(16), mm(16), w);
  if (id == "mncg") return suite_mncg(mg(16), mm(16), w);
  if (id == "d8q") return suite_d8q();
  if (id == "selfact-8") return suite_selfact8();
  if (id == "quad-family") return suite_quad(opt.seed, opt.samples);
  fail("SuiteUnknown", "no verification suite named '" + id + "'");
}

}  // namespace cogalois
