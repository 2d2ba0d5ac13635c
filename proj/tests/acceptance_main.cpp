// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
//
// Every comparison is exact (integer or rational); the tolerance everywhere
// is zero.  Desk scale: (n,d) in {(2,2),(3,3),(4,4),(6,2),(6,3),(8,4),(9,3)},
// string/band sizes and |syzygy degree| bounded by 3, band parameters
// {1, 2, 1/2} unless a criterion says otherwise.  Two criteria carry pinned
// wall-clock budgets, asserted below.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "greenring/verify.hpp"

namespace {

using namespace greenring;
using Clock = std::chrono::steady_clock;

const std::vector<Params> kDesk = {{2, 2}, {3, 3}, {4, 4}, {6, 2},
                                   {6, 3}, {8, 4}, {9, 3}};

constexpr uint64_t kSeed = 42;
constexpr int64_t kAssocTriples = 1000;
constexpr double kRingBudgetSeconds = 120.0;  // criterion 1
constexpr double kExtBudgetSeconds = 60.0;    // criterion 5

UniverseSpec desk_spec() {
  UniverseSpec spec;
  spec.max_ell = 3;
  spec.max_syzygy = 3;
  spec.lambdas = {Rational(1), Rational(2), Rational(1, 2)};
  return spec;
}

std::string config_name(const Params& p) {
  return "(" + std::to_string(p.n) + "," + std::to_string(p.d) + ")";
}

struct Criterion {
  int id;
  std::string title;
  bool pass{true};
  double seconds{0};
  std::string detail;
};

bool g_all_pass = true;

void report(const Criterion& c) {
  std::printf("[%2d] %s  %-58s %7.2fs\n", c.id, c.pass ? "PASS" : "FAIL", c.title.c_str(),
              c.seconds);
  if (!c.pass) {
    std::printf("     %s\n", c.detail.c_str());
    g_all_pass = false;
  }
  std::fflush(stdout);
}

// Runs one named check over a list of configurations and folds the results.
template <typename MakeCheck>
Criterion over_configs(int id, const std::string& title, const std::vector<Params>& configs,
                       MakeCheck&& make_check) {
  Criterion out{id, title, true, 0, ""};
  const auto t0 = Clock::now();
  for (const Params& p : configs) {
    const Check c = make_check(p);
    if (!c.pass && out.pass) {
      out.pass = false;
      out.detail = config_name(p) + " " + c.name + ": " + c.detail;
    }
  }
  out.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return out;
}

void enforce_budget(Criterion& c, double budget_seconds) {
  if (c.seconds > budget_seconds) {
    c.pass = false;
    if (!c.detail.empty()) c.detail += "; ";
    c.detail += "runtime budget exceeded (" + std::to_string(c.seconds) + "s > " +
                std::to_string(budget_seconds) + "s)";
  }
}

}  // namespace

int main() {
  const UniverseSpec desk = desk_spec();

  std::printf("stable Green ring acceptance suite\n");
  std::printf("configurations:");
  for (const Params& p : kDesk) std::printf(" %s", config_name(p).c_str());
  std::printf("\nbounds: ell,t <= 3, |m| <= 3, lambda in {1,2,1/2}; comparisons exact\n\n");

  // 1. Ring axioms: exhaustive commutativity both orders, unit law, and 1000
  //    seeded random associativity triples per configuration.
  {
    Criterion c = over_configs(1, "ring axioms (commutativity, unit, associativity)", kDesk,
                               [&](const Params& p) {
                                 return check_ring_axioms(p, desk, kAssocTriples, kSeed);
                               });
    enforce_budget(c, kRingBudgetSeconds);
    report(c);
  }

  // 2. Dimension bookkeeping on every pair: projective part nonnegative,
  //    divisible by d, totals multiplicative.
  report(over_configs(2, "dimension bookkeeping (proj >= 0, proj % d == 0)", kDesk,
                      [&](const Params& p) { return check_projective_grading(p, desk); }));

  // 3. Duality: involution preserving dim/length, antihomomorphism on cores.
  report(over_configs(3, "duality (involution, product antihomomorphism)", kDesk,
                      [&](const Params& p) { return check_duality(p, desk); }));

  // 4. Syzygy compatibility of every product arm for k in {-1, 1, 2}.
  report(over_configs(4, "syzygy-shift compatibility of products", kDesk,
                      [&](const Params& p) { return check_omega_compat(p, desk, {-1, 1, 2}); }));

  // 5. String Ext^1 closed form against the rank oracle, 1 <= t <= ell <= 4,
  //    block sizes 2, 4, 6.
  {
    const std::vector<Params> configs = {{2, 2}, {6, 3}, {6, 2}};
    Criterion c = over_configs(5, "string Ext formula vs oracle (ell,t <= 4)", configs,
                               [&](const Params& p) { return check_ext_formula(p, 4); });
    enforce_budget(c, kExtBudgetSeconds);
    report(c);
  }

  // 6. Band Hom/Ext identities for t,ell <= 3 and parameters {1,2}.
  report(over_configs(6, "band Hom/Ext dimensions vs oracle", kDesk, [&](const Params& p) {
    return check_band_homs(p, 3, {Rational(1), Rational(2)});
  }));

  // 7. Vanishing arms: opposite-sign strings, band vs string, and distinct
  //    band parameters all land entirely in the projective part.
  report(over_configs(7, "always-projective product arms", kDesk,
                      [&](const Params& p) { return check_vanishing_arms(p, desk); }));

  // 8. Classifications: (a) endotrivial predicate vs definition over
  //    d in {2,3,4,5}; (b) self-dual cores across pairwise distinct blocks;
  //    (c) power closures stabilize within their kind by round 20 while
  //    proper syzygies grow without bound.
  {
    const auto t0 = Clock::now();
    Criterion c{8, "classifications (endotrivial, self-dual cores, closures)", true, 0, ""};
    UniverseSpec small = desk;
    small.max_syzygy = 2;
    const std::vector<Params> endo_configs = {{6, 2}, {6, 3}, {8, 4}, {5, 5}, {10, 5}};
    for (const Params& p : endo_configs) {
      const Check chk = check_endotrivial(p, small);
      if (!chk.pass && c.pass) {
        c.pass = false;
        c.detail = config_name(p) + " " + chk.name + ": " + chk.detail;
      }
    }
    for (const Params& p : kDesk) {
      for (const Check& chk : {check_self_dual_cores(p), check_closure(p, desk, 20)}) {
        if (!chk.pass && c.pass) {
          c.pass = false;
          c.detail = config_name(p) + " " + chk.name + ": " + chk.detail;
        }
      }
    }
    c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    report(c);
  }

  // 9. Syzygy dimension/length closed forms vs oracle iterates, |m| <= 6;
  //    shift periods at label and oracle level.
  report(over_configs(9, "syzygy closed forms and shift periods vs oracle", kDesk,
                      [&](const Params& p) { return check_rep_dims(p, desk, 6); }));

  // 10. Block census, quiver relations, cover lengths, Ext adjacency.
  report(over_configs(10, "block census and quiver structure", kDesk,
                      [&](const Params& p) { return check_block_structure(p); }));

  // 11. Stable equivalence: both routes agree and give bijections between
  //     bounded block universes preserving all invariants.
  report(over_configs(11, "stable equivalence between blocks", kDesk,
                      [&](const Params& p) { return check_stable_equiv(p, desk); }));

  // 12. Oracle integrity: relations, indecomposability both ways, and
  //     non-split AR extensions.
  report(over_configs(12, "oracle integrity (relations, indecomposables, AR)", kDesk,
                      [&](const Params& p) {
                        return check_oracle_integrity(p, 3, desk.lambdas);
                      }));

  std::printf("\n%s\n", g_all_pass ? "all 12 criteria passed" : "ACCEPTANCE FAILURE");
  return g_all_pass ? 0 : 1;
}
