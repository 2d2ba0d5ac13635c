#pragma once

/**
 * @file modarith.hpp
 * @brief Residue arithmetic, the sigma permutation, vertices and blocks.
 *
 * Everything downstream is driven by a pair of parameters (n, d) with d | n.
 * Simple modules are labelled by vertices (u, i) in Z_n x Z_n.  The central
 * combinatorial gadget is the permutation
 *
 *     sigma_u(j) = d + j - <2j + u - 1>   (mod n),
 *
 * where <r> denotes the residue of r mod d taken in {1, ..., d}.  Its powers
 * have the closed form (used throughout, and asserted by tests):
 *
 *     sigma_u^{2t}(i)   = i + t*d,
 *     sigma_u^{2t+1}(i) = sigma_u(i) + t*d,     for every integer t.
 *
 * A vertex (u, i) is projective when d | 2i + u - 1; projective vertices are
 * exactly the fixed points of sigma_u.  Non-projective sigma_u-orbits all
 * have size 2n/d and enumerate the simples of one non-simple block.
 */

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace greenring {

using std::int64_t;

/// Family parameters. Immutable once constructed; construction validates.
struct Params {
  int64_t n;
  int64_t d;

  Params(int64_t n_, int64_t d_) : n(n_), d(d_) {
    if (n < 1 || d < 1) throw std::invalid_argument("params: n and d must be positive");
    if (n % d != 0) throw std::invalid_argument("params: d must divide n");
    if (n > (int64_t{1} << 20)) throw std::invalid_argument("params: n too large (max 2^20)");
  }

  /// Least non-negative residue mod n.
  int64_t mod_n(int64_t x) const { return ((x % n) + n) % n; }

  /// Least non-negative residue mod d.
  int64_t mod_d(int64_t x) const { return ((x % d) + d) % d; }

  /// Size of every non-projective sigma-orbit: 2n/d.
  int64_t orbit_size() const { return 2 * n / d; }

  friend bool operator==(const Params&, const Params&) = default;
};

/// Residue of r mod d normalized into {1, ..., d}.
inline int64_t res(const Params& p, int64_t r) {
  int64_t s = p.mod_d(r);
  return s == 0 ? p.d : s;
}

/// A point of Z_n x Z_n labelling a simple module.
struct Vertex {
  int64_t u{0};
  int64_t i{0};
  auto operator<=>(const Vertex&) const = default;
};

inline Vertex normalize(const Params& p, Vertex v) { return {p.mod_n(v.u), p.mod_n(v.i)}; }

/// True iff the simple at (u, i) is projective, i.e. d | 2i + u - 1.
inline bool is_projective_vertex(const Params& p, Vertex v) {
  return p.mod_d(2 * v.i + v.u - 1) == 0;
}

/// Dimension of the simple at (u, i): d - <2i + u - 1> for non-projective
/// vertices (a value in [1, d-1]), and d for projective ones.
inline int64_t dim_simple(const Params& p, Vertex v) {
  if (is_projective_vertex(p, v)) return p.d;
  return p.d - res(p, 2 * v.i + v.u - 1);
}

/// sigma_u(j) = d + j - <2j + u - 1>, reduced mod n.
inline int64_t sigma(const Params& p, int64_t u, int64_t j) {
  return p.mod_n(p.d + j - res(p, 2 * j + u - 1));
}

namespace detail {
inline int64_t floor_div2(int64_t t) { return t >= 0 ? t / 2 : -((-t + 1) / 2); }
}  // namespace detail

/// t-th power of sigma_u applied to j, any integer t, in O(1).  Projective
/// vertices are fixed points; non-projective ones follow the even/odd closed
/// form documented at the top of this header (only valid off fixed points,
/// since sigma^2 = +d uses <2j+u-1> != d).
inline int64_t sigma_pow(const Params& p, int64_t u, int64_t j, int64_t t) {
  if (is_projective_vertex(p, {u, j})) return p.mod_n(j);
  int64_t q = detail::floor_div2(t);
  if (t - 2 * q == 0) return p.mod_n(j + q * p.d);
  return p.mod_n(sigma(p, u, j) + q * p.d);
}

/// Members of the block containing v: the sigma_u-orbit of i.  Size 1 for a
/// projective vertex (a simple block), 2n/d otherwise.
inline std::vector<Vertex> block_members(const Params& p, Vertex v) {
  v = normalize(p, v);
  if (is_projective_vertex(p, v)) return {v};
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(p.orbit_size()));
  for (int64_t t = 0; t < p.orbit_size(); ++t) out.push_back({v.u, sigma_pow(p, v.u, v.i, t)});
  return out;
}

/// True iff the two simples lie in the same block: equal u and j in the
/// sigma_u-orbit of i.
inline bool same_block(const Params& p, Vertex a, Vertex b) {
  a = normalize(p, a);
  b = normalize(p, b);
  if (a.u != b.u) return false;
  if (a == b) return true;
  if (is_projective_vertex(p, a) || is_projective_vertex(p, b)) return false;
  for (int64_t t = 1; t < p.orbit_size(); ++t)
    if (sigma_pow(p, a.u, a.i, t) == b.i) return true;
  return false;
}

/// Canonical representative of a block: the member with the smallest i.
inline Vertex block_representative(const Params& p, Vertex v) {
  Vertex best = normalize(p, v);
  for (const Vertex& w : block_members(p, v))
    if (w.i < best.i) best = w;
  return best;
}

struct BlockCensus {
  int64_t simple_blocks;     // one per projective vertex: n^2/d
  int64_t nonsimple_blocks;  // n(d-1)/2, each containing 2n/d simples
  friend bool operator==(const BlockCensus&, const BlockCensus&) = default;
};

/// Closed-form block counts. Tests confirm them against direct enumeration.
inline BlockCensus block_census(const Params& p) {
  return {p.n * p.n / p.d, p.n * (p.d - 1) / 2};
}

}  // namespace greenring
