#pragma once

/**
 * @file fusion.hpp
 * @brief Closed-form tensor products on the span of canonical labels.
 *
 * An element is a nonnegative integer combination of canonical labels (the
 * "core") plus the total dimension of its projective part.  Products of two
 * labels are given by closed formulas: a theta sum over an index set
 * attached to the two underlying simples, with each summand produced by
 * vertex arithmetic in the target component u + v.  Projective summands are
 * never enumerated, only their total dimension is tracked, so the core is
 * exactly the image in the stable category while dimensions stay exact.
 *
 * The formulas here are never derived from linear algebra at runtime; the
 * representation-theoretic route lives separately and the two are compared
 * only in tests.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "greenring/labels.hpp"
#include "greenring/modarith.hpp"

namespace greenring {

struct GreenElement {
  std::map<ModLabel, int64_t> core;  // label -> multiplicity, always > 0
  int64_t proj_dim{0};               // dimension of the projective part

  friend bool operator==(const GreenElement&, const GreenElement&) = default;
};
// Projective labels may appear in an input core (so a P(u,i) factor can be
// written down); any product flushes them into proj_dim, and product cores
// contain only non-projective labels.

inline void add_label(GreenElement& e, const ModLabel& l, int64_t mult = 1) {
  if (mult == 0) return;
  int64_t& slot = e.core[l];
  slot += mult;
  if (slot == 0) e.core.erase(l);
}

inline int64_t core_dim(const Params& p, const GreenElement& e) {
  int64_t s = 0;
  for (const auto& [l, mult] : e.core) s += mult * dim_of(p, l);
  return s;
}

inline int64_t total_dim_of(const Params& p, const GreenElement& e) {
  return core_dim(p, e) + e.proj_dim;
}

/// The unit: the one-dimensional simple at (0,0).  For d = 1 that vertex is
/// projective and the stable ring has no unit; the factory throws.
inline GreenElement unit_element(const Params& p) {
  GreenElement e;
  add_label(e, simple_label(p, 0, 0));
  return e;
}

/// Theta range attached to two simples of dimensions N and N': consecutive
/// integers from max(0, N+N'-d) to min(N,N')-1.  Always nonempty, of size
/// min(N, N', d-N, d-N'); chosen so every summand is non-projective.
inline std::vector<int64_t> index_set(const Params& p, int64_t N, int64_t Np) {
  const int64_t lo = N + Np <= p.d ? 0 : N + Np - p.d;
  const int64_t hi = std::min(N, Np) - 1;
  std::vector<int64_t> out;
  for (int64_t t = lo; t <= hi; ++t) out.push_back(t);
  return out;
}

/// Product of two canonical labels.
inline GreenElement tensor_basis(const Params& p, const ModLabel& a0, const ModLabel& b0) {
  GreenElement out;
  const int64_t total = dim_of(p, a0) * dim_of(p, b0);

  const ModLabel& a = a0.kind <= b0.kind ? a0 : b0;  // the table is commutative
  const ModLabel& b = a0.kind <= b0.kind ? b0 : a0;

  if (b.kind == Kind::projective) {
    out.proj_dim = total;
    return out;
  }

  const int64_t w = a.v.u + b.v.u;
  const int64_t Na = dim_simple(p, a.v);
  const int64_t Nb = dim_simple(p, b.v);
  const std::vector<int64_t> thetas = index_set(p, Na, Nb);
  auto bases = [&]() {
    std::vector<int64_t> out_b;
    out_b.reserve(thetas.size());
    for (int64_t t : thetas) out_b.push_back(a.v.i + b.v.i + t);
    return out_b;
  };

  switch (a.kind) {
    case Kind::syzygy:
      switch (b.kind) {
        case Kind::syzygy:
          for (int64_t base : bases()) add_label(out, syzygy_label(p, a.m + b.m, w, base));
          break;
        case Kind::string_plus:
          for (int64_t base : bases())
            add_label(out, string_label(p, '+', b.ell, w, sigma_pow(p, w, base, -a.m)));
          break;
        case Kind::string_minus:
          for (int64_t base : bases())
            add_label(out, string_label(p, '-', b.ell, w, sigma_pow(p, w, base, a.m)));
          break;
        case Kind::band:
          for (int64_t base : bases()) {
            int64_t shifted = a.m % 2 == 0 ? base : sigma(p, w, p.mod_n(base));
            add_label(out, band_label(p, b.ell, b.lambda, w, shifted));
          }
          break;
        default:
          break;
      }
      break;

    case Kind::string_plus:
      if (b.kind == Kind::string_plus) {
        const int64_t t = std::min(a.ell, b.ell);
        const int64_t L = std::max(a.ell, b.ell);
        for (int64_t base : bases()) {
          add_label(out, string_label(p, '+', t, w, base));
          add_label(out, string_label(p, '+', t, w, sigma_pow(p, w, base, 2 * L - 1)));
        }
      }
      // plus x minus and string x band have projective products
      break;

    case Kind::string_minus:
      if (b.kind == Kind::string_minus) {
        const int64_t t = std::min(a.ell, b.ell);
        const int64_t L = std::max(a.ell, b.ell);
        for (int64_t base : bases()) {
          add_label(out, string_label(p, '-', t, w, base));
          add_label(out, string_label(p, '-', t, w, sigma_pow(p, w, base, -(2 * L - 1))));
        }
      }
      break;

    case Kind::band:
      if (a.lambda == b.lambda) {
        const int64_t t = std::min(a.ell, b.ell);
        for (int64_t base : bases()) {
          add_label(out, band_label(p, t, a.lambda, w, base));
          add_label(out, band_label(p, t, a.lambda, w, sigma(p, w, p.mod_n(base))));
        }
      }
      break;

    default:
      break;
  }

  out.proj_dim = total - core_dim(p, out);
  if (out.proj_dim < 0) throw std::logic_error("tensor_basis: negative projective part");
  return out;
}

/// Bilinear extension.  Dimensions are conserved summand by summand, so the
/// projective part is the dimension deficit of the combined core.
inline GreenElement tensor(const Params& p, const GreenElement& x, const GreenElement& y) {
  GreenElement out;
  for (const auto& [la, ma] : x.core)
    for (const auto& [lb, mb] : y.core) {
      GreenElement prod = tensor_basis(p, la, lb);
      for (const auto& [l, mult] : prod.core) add_label(out, l, ma * mb * mult);
    }
  out.proj_dim = total_dim_of(p, x) * total_dim_of(p, y) - core_dim(p, out);
  if (out.proj_dim < 0) throw std::logic_error("tensor: negative projective part");
  return out;
}

inline GreenElement tensor_power(const Params& p, const GreenElement& x, int64_t k) {
  if (k < 0) throw std::invalid_argument("tensor_power: exponent must be >= 0");
  GreenElement acc = unit_element(p);
  for (int64_t i = 0; i < k; ++i) acc = tensor(p, acc, x);
  return acc;
}

inline GreenElement dual_element(const Params& p, const GreenElement& x) {
  GreenElement out;
  out.proj_dim = x.proj_dim;
  for (const auto& [l, mult] : x.core) add_label(out, dual(p, l), mult);
  return out;
}

// ----------------------------------------------------------------------
// Stable equivalence between the principal component and any other block,
// realized by tensoring with a simple.
// ----------------------------------------------------------------------

/// Position of a principal-component vertex along the orbit of (0,0):
/// the t in [0, 2n/d) with sigma_0^t(0) = v.i.  Band vertices are folded
/// mod d, which stays inside the orbit.
inline int64_t principal_phase(const Params& p, Vertex v) {
  if (v.u == 0) {
    int64_t j = 0;
    for (int64_t t = 0; t < p.orbit_size(); ++t) {
      if (j == v.i) return t;
      j = sigma(p, 0, j);
    }
  }
  throw LabelError(LabelError::Code::block_mismatch,
                   "vertex is not in the principal component");
}

/// Combinatorial image of a principal-component label under the stable
/// equivalence onto the block of (u,i): phase t maps to sigma_u^t(i), and
/// kind, length and parameter are preserved.
inline ModLabel stable_equiv_label(const Params& p, const ModLabel& l, int64_t u, int64_t i) {
  Vertex tv = normalize(p, {u, i});
  if (is_projective_vertex(p, tv))
    throw LabelError(LabelError::Code::projective_vertex,
                     "stable equivalence needs a non-projective target vertex");
  if (l.kind == Kind::projective)
    throw LabelError(LabelError::Code::unsupported, "projective labels are stably zero");
  const int64_t t = principal_phase(p, l.v);
  const int64_t img = sigma_pow(p, tv.u, tv.i, t);
  switch (l.kind) {
    case Kind::syzygy: return syzygy_label(p, l.m, tv.u, img);
    case Kind::string_plus: return string_label(p, '+', l.ell, tv.u, img);
    case Kind::string_minus: return string_label(p, '-', l.ell, tv.u, img);
    case Kind::band: return band_label(p, l.ell, l.lambda, tv.u, img);
    default: break;
  }
  throw std::logic_error("stable_equiv_label: bad kind");
}

/// The same image computed through the ring: the core of l tensor L(u,i).
/// From the principal component this is always a single label.
inline ModLabel stable_equiv_image(const Params& p, const ModLabel& l, int64_t u, int64_t i) {
  if (l.kind == Kind::projective)
    throw LabelError(LabelError::Code::unsupported, "projective labels are stably zero");
  principal_phase(p, l.v);  // validates membership
  GreenElement e = tensor_basis(p, l, simple_label(p, u, i));
  if (e.core.size() != 1 || e.core.begin()->second != 1)
    throw std::logic_error("stable_equiv_image: product is not a single label");
  return e.core.begin()->first;
}

// ----------------------------------------------------------------------
// Tensor-power closure (multiplicity-free reachability)
// ----------------------------------------------------------------------

struct PowerClosure {
  std::vector<std::set<ModLabel>> stages;  // stages[r] = labels first seen at power r+1
  bool stabilized{false};

  std::set<ModLabel> all() const {
    std::set<ModLabel> u;
    for (const auto& s : stages) u.insert(s.begin(), s.end());
    return u;
  }
};

/// Breadth-first closure of {x} under core(- tensor x), by rounds.  Stops
/// early once a round adds nothing; multiplicities are discarded so the
/// growth of the label SET is observed exactly even at high powers.
inline PowerClosure tensor_power_closure(const Params& p, const ModLabel& x, int64_t max_rounds) {
  PowerClosure pc;
  std::set<ModLabel> seen{x};
  pc.stages.push_back({x});
  for (int64_t r = 1; r < max_rounds; ++r) {
    std::set<ModLabel> next;
    for (const ModLabel& l : pc.stages.back()) {
      GreenElement prod = tensor_basis(p, l, x);
      for (const auto& [lab, mult] : prod.core)
        if (seen.insert(lab).second) next.insert(lab);
    }
    if (next.empty()) {
      pc.stabilized = true;
      break;
    }
    pc.stages.push_back(std::move(next));
  }
  return pc;
}

}  // namespace greenring
