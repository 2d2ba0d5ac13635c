#pragma once

/**
 * @file verify.hpp
 * @brief Cross-checks between the closed-form product table and the
 *        linear-algebra oracle, packaged as named pass/fail checks.
 *
 * Every check keeps the two computation routes independent: the combinatorial
 * side only uses label arithmetic, the oracle side only uses block
 * representations.  The bridge between them is rep_of_label, which places a
 * label at its position in the block of a chosen base vertex.
 *
 * The same checks back both the `verify` CLI subcommand and the acceptance
 * runner; callers choose the universe bounds and trial counts.
 */

#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "greenring/blockrep.hpp"
#include "greenring/enumerate.hpp"
#include "greenring/fusion.hpp"
#include "greenring/labels.hpp"
#include "greenring/modarith.hpp"
#include "greenring/threads.hpp"

namespace greenring {

// ---------------------------------------------------------------------------
// Label -> block representation bridge

/// Position of vertex w in the block of `base`, counted in sigma steps.
/// Both vertices must be non-projective and lie in the same block.
inline int64_t block_phase(const Params& p, Vertex base, Vertex w) {
  base = normalize(p, base);
  w = normalize(p, w);
  if (!is_projective_vertex(p, base) && base.u == w.u) {
    int64_t cur = base.i;
    for (int64_t t = 0; t < p.orbit_size(); ++t) {
      if (p.mod_n(cur - w.i) == 0) return t;
      cur = sigma(p, base.u, cur);
    }
  }
  throw LabelError(LabelError::Code::block_mismatch, "vertices lie in different blocks");
}

/// Block representation of a label, placed relative to `base` (block vertex
/// 0 is `base`).  Projective labels on projective vertices live in simple
/// blocks, which have no string-quiver presentation, and are rejected.
inline rep::BlockRep rep_of_label(const Params& p, const ModLabel& l, Vertex base) {
  const int64_t m = p.orbit_size();
  switch (l.kind) {
    case Kind::syzygy:
      return rep::syzygy_iterate(rep::build_simple(m, block_phase(p, base, l.v)), l.m);
    case Kind::string_plus:
      return rep::build_string(m, '+', l.ell, block_phase(p, base, l.v));
    case Kind::string_minus:
      return rep::build_string(m, '-', l.ell, block_phase(p, base, l.v));
    case Kind::band: {
      // Band phases are folded; any block position with the right residue
      // gives the same module up to isomorphism.
      base = normalize(p, base);
      if (!is_projective_vertex(p, base) && base.u == l.v.u) {
        int64_t cur = base.i;
        for (int64_t t = 0; t < p.orbit_size(); ++t) {
          if (p.mod_d(cur) == l.v.i) return rep::build_band(m, l.ell, l.lambda, t);
          cur = sigma(p, base.u, cur);
        }
      }
      throw LabelError(LabelError::Code::block_mismatch, "band lies in a different block");
    }
    case Kind::projective:
      if (is_projective_vertex(p, l.v))
        throw LabelError(LabelError::Code::unsupported,
                         "projective simple lives in a simple block");
      return rep::build_projective(m, block_phase(p, base, l.v));
  }
  throw std::logic_error("unreachable");
}

/// Same, with the label's own vertex as base (so it sits at block phase 0).
inline rep::BlockRep rep_of_label(const Params& p, const ModLabel& l) {
  return rep_of_label(p, l, l.v);
}

/// Dimension over the whole algebra, reconstructed from block-level
/// composition multiplicities: the simple at block phase q has dimension
/// dim_simple(base) at even q and d - dim_simple(base) at odd q.
inline int64_t full_dim(const Params& p, const rep::BlockRep& R, Vertex base) {
  const int64_t N = dim_simple(p, normalize(p, base));
  int64_t total = 0;
  for (int64_t q = 0; q < R.m; ++q)
    total += R.dims[static_cast<size_t>(q)] * (q % 2 == 0 ? N : p.d - N);
  return total;
}

// ---------------------------------------------------------------------------
// Check plumbing

struct Check {
  std::string name;
  bool pass{true};
  std::string detail;  // first failing case, empty when pass
  double seconds{0};
};

struct SuiteResult {
  std::vector<Check> checks;

  bool all_pass() const {
    for (const Check& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

namespace detail_verify {

/// Thread-safe failure sink: records the first failure verbosely and counts
/// the rest.
class Recorder {
 public:
  explicit Recorder(Check& c) : c_(c) {}

  void expect(bool ok, const std::function<std::string()>& describe) {
    if (ok) return;
    std::lock_guard<std::mutex> lock(mu_);
    c_.pass = false;
    if (++fails_ == 1)
      c_.detail = describe();
  }

  void finish() {
    std::lock_guard<std::mutex> lock(mu_);
    if (fails_ > 1) c_.detail += " (+" + std::to_string(fails_ - 1) + " more)";
  }

 private:
  Check& c_;
  std::mutex mu_;
  int64_t fails_{0};
};

template <typename F>
Check timed(const std::string& name, F&& body) {
  Check c;
  c.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    Recorder rec(c);
    body(rec);
    rec.finish();
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail = std::string("exception: ") + e.what();
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

inline GreenElement element_of(const ModLabel& l) {
  GreenElement e;
  add_label(e, l);
  return e;
}

inline std::vector<GreenElement> universe_elements(const Params& p, const UniverseSpec& spec) {
  std::vector<GreenElement> out;
  for (const ModLabel& l : enumerate_labels(p, spec)) out.push_back(element_of(l));
  return out;
}

/// Shift every core label by Omega^k; proj_dim is dropped (core-level map).
inline GreenElement shift_core(const Params& p, const GreenElement& e, int64_t k) {
  GreenElement out;
  for (const auto& [l, mult] : e.core) add_label(out, syzygy_shift(p, l, k), mult);
  return out;
}

inline std::string show(const Params&, const ModLabel& l) { return to_text(l); }

inline std::string show(const Params&, const GreenElement& e) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [l, mult] : e.core)
    for (int64_t k = 0; k < mult; ++k) {
      os << (first ? "" : " + ") << to_text(l);
      first = false;
    }
  if (first) os << "(empty)";
  os << " | proj " << e.proj_dim;
  return os.str();
}

}  // namespace detail_verify

// ---------------------------------------------------------------------------
// Ring-level checks (label arithmetic only)

/// Unit law, exhaustive commutativity in both orders, and seeded random
/// associativity triples over the bounded label universe.
inline Check check_ring_axioms(const Params& p, const UniverseSpec& spec, int64_t trials,
                               uint64_t seed) {
  using namespace detail_verify;
  return timed("ring-axioms", [&](Recorder& rec) {
    if (p.d < 2) return;  // the stable category is zero
    const std::vector<GreenElement> U = universe_elements(p, spec);
    if (U.empty()) return;
    const GreenElement one = unit_element(p);
    for (const GreenElement& x : U) {
      rec.expect(tensor(p, one, x) == x && tensor(p, x, one) == x,
                 [&] { return "unit law fails at " + show(p, x); });
    }
    const int64_t sz = static_cast<int64_t>(U.size());
    parallel_for(sz, [&](int64_t a) {
      for (int64_t b = a; b < sz; ++b) {
        const GreenElement xy = tensor(p, U[a], U[b]);
        const GreenElement yx = tensor(p, U[b], U[a]);
        rec.expect(xy == yx, [&] {
          return "commutativity fails: " + show(p, U[a]) + " vs " + show(p, U[b]);
        });
      }
    });
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int64_t> pick(0, sz - 1);
    std::vector<std::array<int64_t, 3>> triples(static_cast<size_t>(trials));
    for (auto& t : triples) t = {pick(rng), pick(rng), pick(rng)};
    parallel_for(trials, [&](int64_t k) {
      const auto [a, b, c] = triples[static_cast<size_t>(k)];
      const GreenElement lhs = tensor(p, tensor(p, U[a], U[b]), U[c]);
      const GreenElement rhs = tensor(p, U[a], tensor(p, U[b], U[c]));
      rec.expect(lhs == rhs, [&] {
        return "associativity fails: (" + show(p, U[a]) + ", " + show(p, U[b]) + ", " +
               show(p, U[c]) + ")";
      });
    });
  });
}

/// Every pairwise product has projective part >= 0, divisible by d, and
/// total dimension equal to the product of the factor dimensions.
inline Check check_projective_grading(const Params& p, const UniverseSpec& spec) {
  using namespace detail_verify;
  return timed("projective-grading", [&](Recorder& rec) {
    const std::vector<ModLabel> labels = enumerate_labels(p, spec);
    const int64_t sz = static_cast<int64_t>(labels.size());
    parallel_for(sz, [&](int64_t a) {
      for (int64_t b = a; b < sz; ++b) {
        const GreenElement e = tensor_basis(p, labels[a], labels[b]);
        const int64_t expect_total = dim_of(p, labels[a]) * dim_of(p, labels[b]);
        rec.expect(e.proj_dim >= 0 && e.proj_dim % p.d == 0 &&
                       total_dim_of(p, e) == expect_total,
                   [&] {
                     return "grading fails: " + to_text(labels[a]) + " * " + to_text(labels[b]) +
                            " -> " + show(p, e);
                   });
      }
    });
  });
}

/// Duality is an involution and an antihomomorphism on products.
inline Check check_duality(const Params& p, const UniverseSpec& spec) {
  using namespace detail_verify;
  return timed("duality", [&](Recorder& rec) {
    for (const ModLabel& l : enumerate_labels(p, spec)) {
      const ModLabel dl = dual(p, l);
      rec.expect(dual(p, dl) == l, [&] { return "dual involution fails at " + to_text(l); });
      rec.expect(dim_of(p, dl) == dim_of(p, l) && length_of(p, dl) == length_of(p, l),
                 [&] { return "dual changes dim or length at " + to_text(l); });
    }
    const std::vector<GreenElement> U = universe_elements(p, spec);
    const int64_t sz = static_cast<int64_t>(U.size());
    parallel_for(sz, [&](int64_t a) {
      for (int64_t b = a; b < sz; ++b) {
        const GreenElement lhs = dual_element(p, tensor(p, U[a], U[b]));
        const GreenElement rhs = tensor(p, dual_element(p, U[b]), dual_element(p, U[a]));
        rec.expect(lhs == rhs, [&] {
          return "dual of product fails: " + show(p, U[a]) + " * " + show(p, U[b]);
        });
      }
    });
  });
}

/// Syzygy shifts slide through products at the core level:
/// core(O^k x * y) = O^k core(x * y) for each k.
inline Check check_omega_compat(const Params& p, const UniverseSpec& spec,
                                const std::vector<int64_t>& ks) {
  using namespace detail_verify;
  return timed("omega-compat", [&](Recorder& rec) {
    const std::vector<ModLabel> labels = enumerate_labels(p, spec);
    const int64_t sz = static_cast<int64_t>(labels.size());
    parallel_for(sz, [&](int64_t a) {
      for (int64_t b = 0; b < sz; ++b) {
        const GreenElement base = tensor_basis(p, labels[a], labels[b]);
        for (int64_t k : ks) {
          const ModLabel shifted = syzygy_shift(p, labels[a], k);
          const GreenElement lhs = tensor_basis(p, shifted, labels[b]);
          const GreenElement rhs = shift_core(p, base, k);
          rec.expect(lhs.core == rhs.core, [&] {
            return "omega compatibility fails at k=" + std::to_string(k) + ": " +
                   to_text(labels[a]) + " * " + to_text(labels[b]);
          });
        }
      }
    });
  });
}

/// Products with projective labels land entirely in the projective part.
inline Check check_projectivity(const Params& p, const UniverseSpec& spec) {
  using namespace detail_verify;
  return timed("projectivity", [&](Recorder& rec) {
    std::vector<ModLabel> projectives;
    for (int64_t u = 0; u < p.n; ++u)
      for (int64_t i = 0; i < p.n; ++i) projectives.push_back(projective_label(p, u, i));
    std::vector<ModLabel> all = enumerate_labels(p, spec);
    all.insert(all.end(), projectives.begin(), projectives.end());
    const int64_t sz = static_cast<int64_t>(all.size());
    parallel_for(sz, [&](int64_t a) {
      for (const ModLabel& proj : projectives) {
        const GreenElement e = tensor_basis(p, all[a], proj);
        rec.expect(e.core.empty() && e.proj_dim == dim_of(p, all[a]) * dim_of(p, proj), [&] {
          return "projective product fails: " + to_text(all[a]) + " * " + to_text(proj) + " -> " +
                 show(p, e);
        });
      }
    });
  });
}

/// The always-projective table arms: opposite-sign strings, band against
/// string, and bands with different parameters have empty core and carry the
/// entire product dimension in the projective part.
inline Check check_vanishing_arms(const Params& p, const UniverseSpec& spec) {
  using namespace detail_verify;
  return timed("vanishing-arms", [&](Recorder& rec) {
    const std::vector<ModLabel> labels = enumerate_labels(p, spec);
    auto is_string = [](const ModLabel& l) {
      return l.kind == Kind::string_plus || l.kind == Kind::string_minus;
    };
    auto vanishing_pair = [&](const ModLabel& a, const ModLabel& b) {
      if ((a.kind == Kind::string_plus && b.kind == Kind::string_minus) ||
          (a.kind == Kind::string_minus && b.kind == Kind::string_plus))
        return true;
      if ((a.kind == Kind::band && is_string(b)) || (is_string(a) && b.kind == Kind::band))
        return true;
      if (a.kind == Kind::band && b.kind == Kind::band && !(a.lambda == b.lambda)) return true;
      return false;
    };
    const int64_t sz = static_cast<int64_t>(labels.size());
    parallel_for(sz, [&](int64_t a) {
      for (int64_t b = 0; b < sz; ++b) {
        if (!vanishing_pair(labels[a], labels[b])) continue;
        const GreenElement e = tensor_basis(p, labels[a], labels[b]);
        rec.expect(e.core.empty() &&
                       e.proj_dim == dim_of(p, labels[a]) * dim_of(p, labels[b]),
                   [&] {
                     return "vanishing arm fails: " + to_text(labels[a]) + " * " +
                            to_text(labels[b]) + " -> " + show(p, e);
                   });
      }
    });
  });
}

// ---------------------------------------------------------------------------
// Structure checks

/// Stable auto-equivalences and splitting-trace transitivity in one bundle:
/// each AR sequence has left term O^2(right term) and balanced dimensions.
inline Check check_ar_structure(const Params& p, const UniverseSpec& spec) {
  using namespace detail_verify;
  return timed("ar-structure", [&](Recorder& rec) {
    for (const ModLabel& l : enumerate_labels(p, spec)) {
      if (l.kind != Kind::string_plus && l.kind != Kind::string_minus && l.kind != Kind::band)
        continue;
      const ARSequence ar = ar_sequence(p, l);
      rec.expect(ar.left == syzygy_shift(p, l, 2),
                 [&] { return "AR left term is not the double shift at " + to_text(l); });
      int64_t middle = 0;
      for (const ModLabel& mid : ar.middle) middle += dim_of(p, mid);
      rec.expect(dim_of(p, ar.left) + dim_of(p, l) == middle,
                 [&] { return "AR dimension balance fails at " + to_text(l); });
    }
  });
}

/// Block census recounted from scratch, projective-cover shapes, quiver
/// relations, and Ext^1 adjacency between block simples.
inline Check check_block_structure(const Params& p) {
  using namespace detail_verify;
  return timed("block-structure", [&](Recorder& rec) {
    // Census: recount by walking every vertex.
    int64_t proj_vertices = 0;
    std::set<Vertex> reps;
    for (int64_t u = 0; u < p.n; ++u)
      for (int64_t i = 0; i < p.n; ++i) {
        const Vertex v{u, i};
        if (is_projective_vertex(p, v))
          ++proj_vertices;
        else
          reps.insert(block_representative(p, v));
      }
    const BlockCensus census = block_census(p);
    rec.expect(proj_vertices == census.simple_blocks,
               [&] { return "simple block recount disagrees with census"; });
    rec.expect(static_cast<int64_t>(reps.size()) == census.nonsimple_blocks,
               [&] { return "non-simple block recount disagrees with census"; });
    for (const Vertex& v : reps)
      rec.expect(static_cast<int64_t>(block_members(p, v).size()) == p.orbit_size(),
                 [&] { return "block size is not 2n/d"; });
    rec.expect(census.simple_blocks + census.nonsimple_blocks * p.orbit_size() == p.n * p.n,
               [&] { return "block census does not account for every simple"; });

    if (p.d < 2) return;  // no non-simple blocks

    // Quiver shape: m vertices, arrows both ways around, 3m relations
    // checked by the oracle on every projective cover.
    const int64_t m = p.orbit_size();
    int64_t cover_total = 0;
    for (int64_t q = 0; q < m; ++q) {
      const rep::BlockRep P = rep::build_projective(m, q);
      rec.expect(rep::check_relations(P), [&] { return "projective cover breaks relations"; });
      cover_total += rep::total_dim(P);
    }
    rec.expect(cover_total == 4 * m,
               [&] { return "total projective cover length is not 4m"; });

    // Ext^1 between block simples matches arrow counts.
    for (int64_t q = 0; q < m; ++q)
      for (int64_t r = 0; r < m; ++r) {
        const int64_t gap = std::min(rep::detail::wrap(q - r, m), rep::detail::wrap(r - q, m));
        int64_t arrows = 0;
        if (m == 2)
          arrows = gap == 1 ? 2 : 0;
        else
          arrows = gap == 1 ? 1 : 0;
        const int64_t ext =
            rep::ext1_dim(rep::build_simple(m, q), rep::build_simple(m, r));
        rec.expect(ext == arrows, [&] {
          return "Ext^1 adjacency fails between block simples " + std::to_string(q) + ", " +
                 std::to_string(r);
        });
      }
  });
}

/// Closed-form Ext^1 dimensions between even strings against the rank
/// oracle, including the t=1 normalization.
inline Check check_ext_formula(const Params& p, int64_t max_ell) {
  using namespace detail_verify;
  return timed("ext-formula", [&](Recorder& rec) {
    if (p.d < 2) return;
    const int64_t m = p.orbit_size();
    const int64_t period = p.n / p.d;
    std::vector<std::pair<int64_t, int64_t>> cases;
    for (int64_t ell = 1; ell <= max_ell; ++ell)
      for (int64_t t = 1; t <= ell; ++t) cases.push_back({ell, t});
    parallel_for(static_cast<int64_t>(cases.size()), [&](int64_t k) {
      const auto [ell, t] = cases[static_cast<size_t>(k)];
      const int64_t predicted = rep::ext1_string_formula(period, ell, t);
      const int64_t oracle =
          rep::ext1_dim(rep::build_string(m, '+', ell, 2), rep::build_string(m, '+', t, 0));
      rec.expect(predicted == oracle, [&] {
        return "Ext formula fails at (ell,t)=(" + std::to_string(ell) + "," + std::to_string(t) +
               "): formula " + std::to_string(predicted) + ", oracle " + std::to_string(oracle);
      });
      if (t == 1)
        rec.expect(predicted == 1,
                   [&] { return "Ext formula at t=1 is not 1 for ell=" + std::to_string(ell); });
    });
  });
}

/// Band Hom and Ext identities: same-phase Hom is min(t,ell) exactly for
/// equal parameters, opposite-parity Hom is t*ell*n/d for all parameters,
/// and same-phase Ext^1 mirrors the Hom count.
inline Check check_band_homs(const Params& p, int64_t max_ell,
                             const std::vector<Rational>& lambdas) {
  using namespace detail_verify;
  return timed("band-homs", [&](Recorder& rec) {
    if (p.d < 2) return;
    const int64_t m = p.orbit_size();
    struct Case {
      int64_t t, ell;
      Rational lam, mu;
    };
    std::vector<Case> cases;
    for (int64_t t = 1; t <= max_ell; ++t)
      for (int64_t ell = 1; ell <= max_ell; ++ell)
        for (const Rational& lam : lambdas)
          for (const Rational& mu : lambdas) cases.push_back({t, ell, lam, mu});
    parallel_for(static_cast<int64_t>(cases.size()), [&](int64_t k) {
      const Case& cs = cases[static_cast<size_t>(k)];
      const rep::BlockRep A = rep::build_band(m, cs.t, cs.lam, 0);
      const rep::BlockRep B0 = rep::build_band(m, cs.ell, cs.mu, 0);
      const rep::BlockRep B1 = rep::build_band(m, cs.ell, cs.mu, 1);
      const int64_t delta = cs.lam == cs.mu ? std::min(cs.t, cs.ell) : 0;
      rec.expect(rep::hom_dim(A, B0) == delta,
                 [&] { return "same-phase band Hom fails"; });
      rec.expect(rep::hom_dim(A, B1) == cs.t * cs.ell * (m / 2),
                 [&] { return "opposite-parity band Hom fails"; });
      rec.expect(rep::ext1_dim(A, B0) == delta,
                 [&] { return "same-phase band Ext fails"; });
    });
  });
}

// ---------------------------------------------------------------------------
// Tensor-structure checks

/// Endotriviality predicate against the definition: x * x^* has core {unit}.
inline Check check_endotrivial(const Params& p, const UniverseSpec& spec) {
  using namespace detail_verify;
  return timed("endotrivial", [&](Recorder& rec) {
    if (p.d < 2) return;
    const GreenElement one = unit_element(p);
    const std::vector<ModLabel> labels = enumerate_labels(p, spec);
    parallel_for(static_cast<int64_t>(labels.size()), [&](int64_t k) {
      const ModLabel& l = labels[static_cast<size_t>(k)];
      const GreenElement e = tensor_basis(p, l, dual(p, l));
      const bool definition = e.core == one.core;
      rec.expect(is_endotrivial(p, l) == definition, [&] {
        return "endotrivial predicate disagrees at " + to_text(l) + " -> " + show(p, e);
      });
    });
  });
}

/// core(L * L^*) for every non-projective simple: the predicted window of
/// principal-component simples, one from each of pairwise distinct blocks.
inline Check check_self_dual_cores(const Params& p) {
  using namespace detail_verify;
  return timed("self-dual-cores", [&](Recorder& rec) {
    for (int64_t u = 0; u < p.n; ++u)
      for (int64_t i = 0; i < p.n; ++i) {
        if (is_projective_vertex(p, {u, i})) continue;
        const ModLabel l = simple_label(p, u, i);
        const GreenElement e = tensor_basis(p, l, dual(p, l));
        const int64_t N = dim_simple(p, {u, i});
        const int64_t width = std::min(N, p.d - N);
        GreenElement expected;
        for (int64_t tau = 1 - width; tau <= 0; ++tau)
          add_label(expected, simple_label(p, 0, tau));
        rec.expect(e.core == expected.core,
                   [&] { return "self-dual core window fails at " + to_text(l); });
        std::set<Vertex> blocks;
        for (const auto& [lab, mult] : e.core)
          blocks.insert(block_representative(p, lab.v));
        rec.expect(blocks.size() == e.core.size(),
                   [&] { return "self-dual core blocks collide at " + to_text(l); });
      }
  });
}

/// Power-closure behavior: every simple, string, and band label generates a
/// label set that stabilizes within its own kind family, while a proper
/// syzygy escapes with strictly growing shift degree round after round.
inline Check check_closure(const Params& p, const UniverseSpec& spec, int64_t rounds) {
  using namespace detail_verify;
  return timed("closure", [&](Recorder& rec) {
    if (p.d < 2) return;

    std::vector<ModLabel> algebraics;
    for (const ModLabel& l : enumerate_labels(p, spec))
      if (l.kind == Kind::band || l.kind == Kind::string_plus ||
          l.kind == Kind::string_minus || (l.kind == Kind::syzygy && l.m == 0))
        algebraics.push_back(l);

    parallel_for(static_cast<int64_t>(algebraics.size()), [&](int64_t k) {
      const ModLabel& x = algebraics[static_cast<size_t>(k)];
      const PowerClosure pc = tensor_power_closure(p, x, rounds);
      rec.expect(pc.stabilized,
                 [&] { return "closure does not stabilize at " + to_text(x); });
      const std::set<ModLabel> all = pc.all();
      const int64_t cap =
          x.kind == Kind::band ? band_phase_count(p) : nonprojective_vertex_count(p);
      rec.expect(static_cast<int64_t>(all.size()) <= cap,
                 [&] { return "closure exceeds the label count of its kind at " + to_text(x); });
      for (const ModLabel& l : all) {
        const bool same_family = l.kind == x.kind && l.ell == x.ell && l.m == x.m &&
                                 l.lambda == x.lambda;
        rec.expect(same_family, [&] {
          return "closure of " + to_text(x) + " leaves its kind family: " + to_text(l);
        });
      }
    });

    int64_t i0 = 0;
    while (is_projective_vertex(p, {0, i0})) ++i0;
    for (int64_t k : {int64_t{1}, int64_t{-1}}) {
      const ModLabel start = syzygy_label(p, k, 0, i0);
      const PowerClosure grow = tensor_power_closure(p, start, rounds);
      rec.expect(!grow.stabilized,
                 [&] { return "closure of a proper syzygy stabilized unexpectedly"; });
      int64_t prev = -1;
      for (const auto& stage : grow.stages) {
        int64_t maxm = 0;
        for (const ModLabel& l : stage) maxm = std::max(maxm, std::abs(l.m));
        rec.expect(maxm > prev,
                   [&] { return "syzygy closure shift degree fails to grow strictly"; });
        prev = maxm;
      }
    }
  });
}

/// Label dimensions, lengths, and shift periods against the oracle.
inline Check check_rep_dims(const Params& p, const UniverseSpec& spec, int64_t max_m) {
  using namespace detail_verify;
  return timed("rep-dims", [&](Recorder& rec) {
    if (p.d < 2) return;
    const int64_t m = p.orbit_size();

    // Every universe label agrees with its representation in dimension and
    // composition length.
    const std::vector<ModLabel> labels = enumerate_labels(p, spec);
    parallel_for(static_cast<int64_t>(labels.size()), [&](int64_t k) {
      const ModLabel& l = labels[static_cast<size_t>(k)];
      const rep::BlockRep R = rep_of_label(p, l);
      rec.expect(rep::check_relations(R),
                 [&] { return "representation breaks relations at " + to_text(l); });
      rec.expect(full_dim(p, R, l.v) == dim_of(p, l),
                 [&] { return "dimension mismatch at " + to_text(l); });
      rec.expect(rep::total_dim(R) == length_of(p, l),
                 [&] { return "length mismatch at " + to_text(l); });
    });

    // Syzygy iterates of a simple follow the dimension staircase.
    int64_t i0 = 0;
    while (is_projective_vertex(p, {0, i0})) ++i0;
    const int64_t N = dim_simple(p, {0, i0});
    for (int64_t k = -max_m; k <= max_m; ++k) {
      const rep::BlockRep R = rep::syzygy_iterate(rep::build_simple(m, 0), k);
      const int64_t want = std::abs(k) * p.d + (k % 2 == 0 ? N : p.d - N);
      rec.expect(full_dim(p, R, {0, i0}) == want,
                 [&] { return "syzygy dimension staircase fails at k=" + std::to_string(k); });
      rec.expect(rep::total_dim(R) == 2 * std::abs(k) + 1,
                 [&] { return "syzygy length fails at k=" + std::to_string(k); });
    }

    // Shift periods at both levels: strings return after 2n/d steps, bands
    // after 2.
    const ModLabel str = string_label(p, '+', 1, 0, i0);
    rec.expect(syzygy_shift(p, str, m) == str, [&] { return "string label period fails"; });
    const rep::BlockRep strR = rep_of_label(p, str);
    rec.expect(rep::is_isomorphic(rep::syzygy_iterate(strR, m), strR),
               [&] { return "string oracle period fails"; });
    const ModLabel band = band_label(p, 1, Rational(1), 0, p.mod_d(i0));
    rec.expect(syzygy_shift(p, syzygy_shift(p, band, 1), 1) == band,
               [&] { return "band label period fails"; });
    const rep::BlockRep bandR = rep_of_label(p, band);
    rec.expect(rep::is_isomorphic(rep::syzygy_iterate(bandR, 2), bandR),
               [&] { return "band oracle period fails"; });
  });
}

/// The simple-product functor against the direct combinatorial bijection,
/// for every choice of twisting simple: the two routes agree, invariants are
/// preserved, and the map is a bijection between the bounded block universes.
inline Check check_stable_equiv(const Params& p, const UniverseSpec& spec) {
  using namespace detail_verify;
  return timed("stable-equiv", [&](Recorder& rec) {
    if (p.d < 2) return;
    const std::vector<ModLabel> all = enumerate_labels(p, spec);
    std::vector<ModLabel> sources;
    for (const ModLabel& l : all)
      if (l.v.u == 0 && same_block(p, {0, 0}, {0, l.v.i})) sources.push_back(l);
    std::vector<Vertex> targets;
    for (int64_t u = 0; u < p.n; ++u)
      for (int64_t i = 0; i < p.n; ++i)
        if (!is_projective_vertex(p, {u, i})) targets.push_back({u, i});
    parallel_for(static_cast<int64_t>(targets.size()), [&](int64_t k) {
      const Vertex t = targets[static_cast<size_t>(k)];
      std::set<ModLabel> images;
      for (const ModLabel& l : sources) {
        const ModLabel direct = stable_equiv_label(p, l, t.u, t.i);
        const ModLabel via_product = stable_equiv_image(p, l, t.u, t.i);
        rec.expect(direct == via_product, [&] {
          return "stable equivalence routes disagree at " + to_text(l) + " -> (" +
                 std::to_string(t.u) + "," + std::to_string(t.i) + ")";
        });
        rec.expect(direct.kind == l.kind && direct.ell == l.ell && direct.m == l.m &&
                       direct.lambda == l.lambda,
                   [&] { return "stable equivalence changes invariants at " + to_text(l); });
        images.insert(direct);
      }
      // Bijectivity onto the bounded universe of the target block.
      std::set<ModLabel> target_universe;
      for (const ModLabel& l : all)
        if (l.v.u == t.u && same_block(p, normalize(p, t), normalize(p, l.v)))
          target_universe.insert(l);
      rec.expect(images.size() == sources.size(), [&] {
        return "stable equivalence is not injective onto block (" + std::to_string(t.u) + "," +
               std::to_string(t.i) + ")";
      });
      rec.expect(images == target_universe, [&] {
        return "stable equivalence misses the universe of block (" + std::to_string(t.u) + "," +
               std::to_string(t.i) + ")";
      });
    });
  });
}

/// Oracle self-tests: relations, indecomposability on both sides, and the
/// non-split extension behind every AR sequence.
inline Check check_oracle_integrity(const Params& p, int64_t max_ell,
                                    const std::vector<Rational>& lambdas) {
  using namespace detail_verify;
  return timed("oracle-integrity", [&](Recorder& rec) {
    if (p.d < 2) return;
    const int64_t m = p.orbit_size();

    std::vector<rep::BlockRep> indecomposables;
    for (int64_t q = 0; q < m; ++q) {
      indecomposables.push_back(rep::build_simple(m, q));
      indecomposables.push_back(rep::build_projective(m, q));
    }
    for (int64_t ell = 1; ell <= max_ell; ++ell) {
      indecomposables.push_back(rep::build_string(m, '+', ell, 0));
      indecomposables.push_back(rep::build_string(m, '-', ell, 1));
    }
    for (const Rational& lam : lambdas) indecomposables.push_back(rep::build_band(m, 2, lam, 0));

    parallel_for(static_cast<int64_t>(indecomposables.size()), [&](int64_t k) {
      const rep::BlockRep& R = indecomposables[static_cast<size_t>(k)];
      rec.expect(rep::check_relations(R), [&] { return "oracle relations fail on a builder"; });
      rec.expect(rep::is_indecomposable(R),
                 [&] { return "indecomposability fails on a builder"; });
    });

    rec.expect(!rep::is_indecomposable(rep::direct_sum(rep::build_simple(m, 0),
                                                       rep::build_simple(m, 0))),
               [&] { return "S + S tests indecomposable"; });
    rec.expect(!rep::is_indecomposable(rep::direct_sum(rep::build_string(m, '+', 1, 0),
                                                       rep::build_band(m, 1, Rational(2), 0))),
               [&] { return "string + band tests indecomposable"; });

    // AR sequences are non-split: Ext^1(X, O^2 X) != 0.
    int64_t i0 = 0;
    while (is_projective_vertex(p, {0, i0})) ++i0;
    std::vector<ModLabel> ends;
    for (int64_t ell = 1; ell <= max_ell; ++ell) {
      ends.push_back(string_label(p, '+', ell, 0, i0));
      ends.push_back(string_label(p, '-', ell, 0, i0));
    }
    ends.push_back(band_label(p, 1, Rational(2), 0, p.mod_d(i0)));
    parallel_for(static_cast<int64_t>(ends.size()), [&](int64_t k) {
      const ModLabel& l = ends[static_cast<size_t>(k)];
      const ModLabel left = ar_sequence(p, l).left;
      const int64_t e =
          rep::ext1_dim(rep_of_label(p, l), rep_of_label(p, left, l.v));
      rec.expect(e >= 1, [&] { return "AR extension vanishes at " + to_text(l); });
    });
  });
}

// ---------------------------------------------------------------------------
// Suite driver

struct VerifyOptions {
  UniverseSpec universe;
  int64_t trials{200};
  uint64_t seed{0};
  int64_t closure_rounds{20};
  int64_t max_syzygy_iterates{6};
};

/// Ring-axiom suite: the product table behaves like a commutative ring with
/// duality, syzygy compatibility, and projective absorption.
inline SuiteResult suite_ring(const Params& p, const VerifyOptions& opt) {
  SuiteResult out;
  out.checks.push_back(check_ring_axioms(p, opt.universe, opt.trials, opt.seed));
  out.checks.push_back(check_projective_grading(p, opt.universe));
  out.checks.push_back(check_duality(p, opt.universe));
  out.checks.push_back(check_omega_compat(p, opt.universe, {-1, 1, 2}));
  out.checks.push_back(check_projectivity(p, opt.universe));
  out.checks.push_back(check_vanishing_arms(p, opt.universe));
  return out;
}

/// Formula suite: closed-form Hom/Ext dimensions against the linear-algebra
/// oracle, plus the oracle's own self-tests.
inline SuiteResult suite_formulas(const Params& p, const VerifyOptions& opt) {
  SuiteResult out;
  out.checks.push_back(check_block_structure(p));
  out.checks.push_back(check_ext_formula(p, opt.universe.max_ell));
  out.checks.push_back(check_band_homs(p, opt.universe.max_ell, opt.universe.lambdas));
  out.checks.push_back(check_rep_dims(p, opt.universe, opt.max_syzygy_iterates));
  out.checks.push_back(check_oracle_integrity(p, opt.universe.max_ell, opt.universe.lambdas));
  return out;
}

/// Classification suite: predicates, self-dual cores, power closures, AR
/// structure, and the block stable equivalence.
inline SuiteResult suite_classify(const Params& p, const VerifyOptions& opt) {
  SuiteResult out;
  UniverseSpec small = opt.universe;
  small.max_syzygy = std::min<int64_t>(small.max_syzygy, 2);
  out.checks.push_back(check_endotrivial(p, small));
  out.checks.push_back(check_self_dual_cores(p));
  out.checks.push_back(check_closure(p, opt.universe, opt.closure_rounds));
  out.checks.push_back(check_ar_structure(p, opt.universe));
  out.checks.push_back(check_stable_equiv(p, opt.universe));
  return out;
}

/// The full invariant suite for one parameter pair.
inline SuiteResult verify_all(const Params& p, const VerifyOptions& opt) {
  SuiteResult out;
  for (SuiteResult part : {suite_ring(p, opt), suite_formulas(p, opt), suite_classify(p, opt)})
    for (Check& c : part.checks) out.checks.push_back(std::move(c));
  return out;
}

}  // namespace greenring
