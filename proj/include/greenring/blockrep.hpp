#pragma once

/**
 * @file blockrep.hpp
 * @brief Exact linear-algebra models of modules over a non-simple block.
 *
 * Every non-simple block is the path algebra of a cyclic zigzag quiver on an
 * even number m of vertices, with arrows b_q : q -> q+1 and bbar_q : q+1 -> q
 * (indices mod m), modulo the relations
 *
 *     b_{q+1} b_q = 0,   bbar_q bbar_{q+1} = 0,   bbar_q b_q = b_{q-1} bbar_{q-1}.
 *
 * A module is a vector space at each vertex plus a matrix per arrow.  This
 * file builds the standard objects (simples, projectives, strings, bands),
 * computes Hom spaces, projective covers, syzygies and cosyzygies, stable
 * Homs and Ext^1 by exact rational Gaussian elimination, and decides
 * indecomposability and isomorphism.
 *
 * Everything here is independent of the closed-form label arithmetic; the
 * two routes are only compared in tests, never mixed.
 */

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "greenring/rational.hpp"

namespace greenring::rep {

using greenring::Rational;

// ----------------------------------------------------------------------
// Dense exact matrices
// ----------------------------------------------------------------------

struct Mat {
  int64_t rows{0}, cols{0};
  std::vector<Rational> a;  // row-major

  Mat() = default;
  Mat(int64_t r, int64_t c)
      : rows(r), cols(c), a(static_cast<size_t>(r) * static_cast<size_t>(c)) {}

  Rational& at(int64_t r, int64_t c) { return a[static_cast<size_t>(r * cols + c)]; }
  const Rational& at(int64_t r, int64_t c) const {
    return a[static_cast<size_t>(r * cols + c)];
  }

  static Mat identity(int64_t n) {
    Mat I(n, n);
    for (int64_t i = 0; i < n; ++i) I.at(i, i) = Rational(1);
    return I;
  }

  bool is_zero() const {
    for (const Rational& x : a)
      if (!x.is_zero()) return false;
    return true;
  }

  friend bool operator==(const Mat&, const Mat&) = default;
};

inline Mat multiply(const Mat& A, const Mat& B) {
  if (A.cols != B.rows) throw std::invalid_argument("multiply: shape mismatch");
  Mat C(A.rows, B.cols);
  for (int64_t i = 0; i < A.rows; ++i)
    for (int64_t k = 0; k < A.cols; ++k) {
      const Rational& x = A.at(i, k);
      if (x.is_zero()) continue;
      for (int64_t j = 0; j < B.cols; ++j) {
        const Rational& y = B.at(k, j);
        if (!y.is_zero()) C.at(i, j) = C.at(i, j) + x * y;
      }
    }
  return C;
}

inline Mat transpose(const Mat& A) {
  Mat T(A.cols, A.rows);
  for (int64_t i = 0; i < A.rows; ++i)
    for (int64_t j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

inline Mat hstack(const Mat& A, const Mat& B) {
  if (A.rows != B.rows) throw std::invalid_argument("hstack: row mismatch");
  Mat C(A.rows, A.cols + B.cols);
  for (int64_t i = 0; i < A.rows; ++i) {
    for (int64_t j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
    for (int64_t j = 0; j < B.cols; ++j) C.at(i, A.cols + j) = B.at(i, j);
  }
  return C;
}

/// Reduced row echelon form in place; returns the pivot column indices.
inline std::vector<int64_t> rref(Mat& M) {
  std::vector<int64_t> pivots;
  int64_t r = 0;
  for (int64_t c = 0; c < M.cols && r < M.rows; ++c) {
    int64_t p = -1;
    for (int64_t i = r; i < M.rows; ++i)
      if (!M.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int64_t j = 0; j < M.cols; ++j) std::swap(M.at(p, j), M.at(r, j));
    Rational inv = M.at(r, c).inverse();
    for (int64_t j = c; j < M.cols; ++j) M.at(r, j) = M.at(r, j) * inv;
    for (int64_t i = 0; i < M.rows; ++i) {
      if (i == r || M.at(i, c).is_zero()) continue;
      Rational f = M.at(i, c);
      for (int64_t j = c; j < M.cols; ++j) M.at(i, j) = M.at(i, j) - f * M.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline int64_t rank(Mat M) { return static_cast<int64_t>(rref(M).size()); }

/// Basis of { x : M x = 0 }, returned as the columns of a cols(M) x nullity matrix.
inline Mat kernel_basis(Mat M) {
  const int64_t n = M.cols;
  std::vector<int64_t> pivots = rref(M);
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (int64_t c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<int64_t> free_cols;
  for (int64_t c = 0; c < n; ++c)
    if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);
  Mat K(n, static_cast<int64_t>(free_cols.size()));
  for (size_t j = 0; j < free_cols.size(); ++j) {
    K.at(free_cols[j], static_cast<int64_t>(j)) = Rational(1);
    for (size_t k = 0; k < pivots.size(); ++k)
      K.at(pivots[k], static_cast<int64_t>(j)) =
          -M.at(static_cast<int64_t>(k), free_cols[j]);
  }
  return K;
}

/// Any solution X of A X = B, or nullopt if the system is inconsistent.
inline std::optional<Mat> solve(const Mat& A, const Mat& B) {
  if (A.rows != B.rows) throw std::invalid_argument("solve: row mismatch");
  Mat aug = hstack(A, B);
  std::vector<int64_t> pivots = rref(aug);
  for (int64_t c : pivots)
    if (c >= A.cols) return std::nullopt;
  Mat X(A.cols, B.cols);
  for (size_t k = 0; k < pivots.size(); ++k)
    for (int64_t j = 0; j < B.cols; ++j)
      X.at(pivots[k], j) = aug.at(static_cast<int64_t>(k), A.cols + j);
  return X;
}

// ----------------------------------------------------------------------
// Block representations
// ----------------------------------------------------------------------

struct BlockRep {
  int64_t m{0};                 // quiver vertex count, even and >= 2
  std::vector<int64_t> dims;    // dims[q] = dimension at vertex q
  std::vector<Mat> b;           // b[q] : dims[q+1] x dims[q]
  std::vector<Mat> bbar;        // bbar[q] : dims[q] x dims[q+1]

  friend bool operator==(const BlockRep&, const BlockRep&) = default;
};

namespace detail {
inline int64_t wrap(int64_t x, int64_t m) { return ((x % m) + m) % m; }

inline void require_block(int64_t m) {
  if (m < 2 || m % 2 != 0)
    throw std::invalid_argument("block quiver needs an even vertex count >= 2");
}
}  // namespace detail

inline BlockRep make_rep(int64_t m, std::vector<int64_t> dims) {
  detail::require_block(m);
  if (static_cast<int64_t>(dims.size()) != m)
    throw std::invalid_argument("make_rep: dims size mismatch");
  BlockRep R;
  R.m = m;
  R.dims = std::move(dims);
  R.b.reserve(static_cast<size_t>(m));
  R.bbar.reserve(static_cast<size_t>(m));
  for (int64_t q = 0; q < m; ++q) {
    int64_t q1 = detail::wrap(q + 1, m);
    R.b.emplace_back(R.dims[static_cast<size_t>(q1)], R.dims[static_cast<size_t>(q)]);
    R.bbar.emplace_back(R.dims[static_cast<size_t>(q)], R.dims[static_cast<size_t>(q1)]);
  }
  return R;
}

inline BlockRep zero_rep(int64_t m) {
  return make_rep(m, std::vector<int64_t>(static_cast<size_t>(m), 0));
}

inline int64_t total_dim(const BlockRep& R) {
  int64_t s = 0;
  for (int64_t d : R.dims) s += d;
  return s;
}

/// Simple module at vertex p.
inline BlockRep build_simple(int64_t m, int64_t p) {
  std::vector<int64_t> dims(static_cast<size_t>(m), 0);
  dims[static_cast<size_t>(detail::wrap(p, m))] = 1;
  return make_rep(m, std::move(dims));
}

/// Projective cover of the simple at vertex p: basis g (top), x = b g,
/// y = bbar g, z = bbar b g = b bbar g (socle).  Dimension 4.
inline BlockRep build_projective(int64_t m, int64_t p) {
  detail::require_block(m);
  p = detail::wrap(p, m);
  const int64_t nxt = detail::wrap(p + 1, m);
  const int64_t prv = detail::wrap(p - 1, m);
  std::vector<int64_t> dims(static_cast<size_t>(m), 0);
  dims[static_cast<size_t>(p)] = 2;  // g = 0, z = 1
  const int64_t xi = 0;
  dims[static_cast<size_t>(nxt)] += 1;
  const int64_t yi = (nxt == prv) ? 1 : 0;  // m = 2: x and y share a vertex
  dims[static_cast<size_t>(prv)] += 1;
  BlockRep R = make_rep(m, std::move(dims));
  R.b[static_cast<size_t>(p)].at(xi, 0) = Rational(1);        // g -> x
  R.bbar[static_cast<size_t>(prv)].at(yi, 0) = Rational(1);   // g -> y
  R.bbar[static_cast<size_t>(p)].at(1, xi) = Rational(1);     // x -> z
  R.b[static_cast<size_t>(prv)].at(1, yi) = Rational(1);      // y -> z
  return R;
}

/// Even-length string with 2*ell basis vectors.  Position s sits at vertex
/// p + s (sign '+') or p - s (sign '-'); even positions are tops.  Each top
/// maps onto its neighbouring socles through one b and one bbar arrow.
inline BlockRep build_string(int64_t m, char sign, int64_t ell, int64_t p) {
  detail::require_block(m);
  if (sign != '+' && sign != '-') throw std::invalid_argument("string sign");
  if (ell < 1) throw std::invalid_argument("string half-length must be >= 1");
  const int64_t L = 2 * ell;
  auto vtx = [&](int64_t s) {
    return detail::wrap(sign == '+' ? p + s : p - s, m);
  };
  std::vector<int64_t> dims(static_cast<size_t>(m), 0);
  std::vector<int64_t> idx(static_cast<size_t>(L));
  for (int64_t s = 0; s < L; ++s) idx[static_cast<size_t>(s)] = dims[static_cast<size_t>(vtx(s))]++;
  BlockRep R = make_rep(m, std::move(dims));
  for (int64_t s = 0; s + 1 < L; ++s) {
    const int64_t a = idx[static_cast<size_t>(s)], c = idx[static_cast<size_t>(s + 1)];
    if (s % 2 == 0) {
      // top s covers socle s+1
      if (sign == '+')
        R.b[static_cast<size_t>(vtx(s))].at(c, a) = Rational(1);
      else
        R.bbar[static_cast<size_t>(vtx(s + 1))].at(c, a) = Rational(1);
    } else {
      // top s+1 covers socle s
      if (sign == '+')
        R.bbar[static_cast<size_t>(vtx(s))].at(a, c) = Rational(1);
      else
        R.b[static_cast<size_t>(vtx(s + 1))].at(a, c) = Rational(1);
    }
  }
  return R;
}

/// Band with multiplicity ell and parameter lambda != 0, based at vertex p.
/// Every vertex carries k^ell; arrows leaving even offsets are b (identity,
/// with a Jordan block at the base), arrows leaving odd offsets are bbar.
inline BlockRep build_band(int64_t m, int64_t ell, const Rational& lambda, int64_t p) {
  detail::require_block(m);
  if (ell < 1) throw std::invalid_argument("band multiplicity must be >= 1");
  if (lambda.is_zero()) throw std::invalid_argument("band parameter must be nonzero");
  p = detail::wrap(p, m);
  BlockRep R = make_rep(m, std::vector<int64_t>(static_cast<size_t>(m), ell));
  Mat J(ell, ell);
  for (int64_t i = 0; i < ell; ++i) {
    J.at(i, i) = lambda;
    if (i + 1 < ell) J.at(i, i + 1) = Rational(1);
  }
  for (int64_t q = 0; q < m; ++q) {
    if (detail::wrap(q - p, m) % 2 == 0)
      R.b[static_cast<size_t>(q)] = (q == p) ? J : Mat::identity(ell);
    else
      R.bbar[static_cast<size_t>(q)] = Mat::identity(ell);
  }
  return R;
}

inline BlockRep direct_sum(const BlockRep& A, const BlockRep& B) {
  if (A.m != B.m) throw std::invalid_argument("direct_sum: vertex count mismatch");
  std::vector<int64_t> dims(static_cast<size_t>(A.m));
  for (int64_t q = 0; q < A.m; ++q)
    dims[static_cast<size_t>(q)] = A.dims[static_cast<size_t>(q)] + B.dims[static_cast<size_t>(q)];
  BlockRep R = make_rep(A.m, std::move(dims));
  auto fill = [&](std::vector<Mat>& dst, const std::vector<Mat>& a, const std::vector<Mat>& bb) {
    for (int64_t q = 0; q < A.m; ++q) {
      const Mat& X = a[static_cast<size_t>(q)];
      const Mat& Y = bb[static_cast<size_t>(q)];
      Mat& D = dst[static_cast<size_t>(q)];
      for (int64_t i = 0; i < X.rows; ++i)
        for (int64_t j = 0; j < X.cols; ++j) D.at(i, j) = X.at(i, j);
      for (int64_t i = 0; i < Y.rows; ++i)
        for (int64_t j = 0; j < Y.cols; ++j) D.at(X.rows + i, X.cols + j) = Y.at(i, j);
    }
  };
  fill(R.b, A.b, B.b);
  fill(R.bbar, A.bbar, B.bbar);
  return R;
}

/// All three relation families, plus shape sanity.
inline bool check_relations(const BlockRep& R) {
  const int64_t m = R.m;
  if (m < 2 || m % 2 != 0) return false;
  for (int64_t q = 0; q < m; ++q) {
    const int64_t q1 = detail::wrap(q + 1, m);
    const int64_t qm = detail::wrap(q - 1, m);
    const Mat& bq = R.b[static_cast<size_t>(q)];
    const Mat& vq = R.bbar[static_cast<size_t>(q)];
    if (bq.rows != R.dims[static_cast<size_t>(q1)] || bq.cols != R.dims[static_cast<size_t>(q)])
      return false;
    if (vq.rows != R.dims[static_cast<size_t>(q)] || vq.cols != R.dims[static_cast<size_t>(q1)])
      return false;
    if (!multiply(R.b[static_cast<size_t>(q1)], bq).is_zero()) return false;
    if (!multiply(vq, R.bbar[static_cast<size_t>(q1)]).is_zero()) return false;
    Mat lhs = multiply(vq, bq);
    Mat rhs = multiply(R.b[static_cast<size_t>(qm)], R.bbar[static_cast<size_t>(qm)]);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

// ----------------------------------------------------------------------
// Hom spaces.  A morphism f : A -> B is a matrix f_q at each vertex with
// f_{q+1} b^A_q = b^B_q f_q and f_q bbar^A_q = bbar^B_q f_{q+1}.
// ----------------------------------------------------------------------

using Morphism = std::vector<Mat>;  // one matrix per vertex, dims_B[q] x dims_A[q]

inline std::vector<Morphism> hom_basis(const BlockRep& A, const BlockRep& B) {
  if (A.m != B.m) throw std::invalid_argument("hom_basis: vertex count mismatch");
  const int64_t m = A.m;
  std::vector<int64_t> off(static_cast<size_t>(m) + 1, 0);
  for (int64_t q = 0; q < m; ++q)
    off[static_cast<size_t>(q) + 1] =
        off[static_cast<size_t>(q)] +
        B.dims[static_cast<size_t>(q)] * A.dims[static_cast<size_t>(q)];
  const int64_t T = off[static_cast<size_t>(m)];
  auto var = [&](int64_t q, int64_t r, int64_t c) {
    return off[static_cast<size_t>(q)] + r * A.dims[static_cast<size_t>(q)] + c;
  };

  int64_t n_rows = 0;
  for (int64_t q = 0; q < m; ++q) {
    const int64_t q1 = detail::wrap(q + 1, m);
    n_rows += B.dims[static_cast<size_t>(q1)] * A.dims[static_cast<size_t>(q)];
    n_rows += B.dims[static_cast<size_t>(q)] * A.dims[static_cast<size_t>(q1)];
  }
  Mat E(n_rows, T);
  int64_t row = 0;
  for (int64_t q = 0; q < m; ++q) {
    const int64_t q1 = detail::wrap(q + 1, m);
    const Mat& bA = A.b[static_cast<size_t>(q)];
    const Mat& bB = B.b[static_cast<size_t>(q)];
    for (int64_t r = 0; r < B.dims[static_cast<size_t>(q1)]; ++r)
      for (int64_t c = 0; c < A.dims[static_cast<size_t>(q)]; ++c) {
        for (int64_t s = 0; s < A.dims[static_cast<size_t>(q1)]; ++s)
          E.at(row, var(q1, r, s)) = E.at(row, var(q1, r, s)) + bA.at(s, c);
        for (int64_t s = 0; s < B.dims[static_cast<size_t>(q)]; ++s)
          E.at(row, var(q, s, c)) = E.at(row, var(q, s, c)) - bB.at(r, s);
        ++row;
      }
    const Mat& vA = A.bbar[static_cast<size_t>(q)];
    const Mat& vB = B.bbar[static_cast<size_t>(q)];
    for (int64_t r = 0; r < B.dims[static_cast<size_t>(q)]; ++r)
      for (int64_t c = 0; c < A.dims[static_cast<size_t>(q1)]; ++c) {
        for (int64_t s = 0; s < A.dims[static_cast<size_t>(q)]; ++s)
          E.at(row, var(q, r, s)) = E.at(row, var(q, r, s)) + vA.at(s, c);
        for (int64_t s = 0; s < B.dims[static_cast<size_t>(q1)]; ++s)
          E.at(row, var(q1, s, c)) = E.at(row, var(q1, s, c)) - vB.at(r, s);
        ++row;
      }
  }

  Mat K = kernel_basis(std::move(E));
  std::vector<Morphism> basis;
  basis.reserve(static_cast<size_t>(K.cols));
  for (int64_t j = 0; j < K.cols; ++j) {
    Morphism f;
    f.reserve(static_cast<size_t>(m));
    for (int64_t q = 0; q < m; ++q) {
      Mat fq(B.dims[static_cast<size_t>(q)], A.dims[static_cast<size_t>(q)]);
      for (int64_t r = 0; r < fq.rows; ++r)
        for (int64_t c = 0; c < fq.cols; ++c) fq.at(r, c) = K.at(var(q, r, c), j);
      f.push_back(std::move(fq));
    }
    basis.push_back(std::move(f));
  }
  return basis;
}

inline int64_t hom_dim(const BlockRep& A, const BlockRep& B) {
  return static_cast<int64_t>(hom_basis(A, B).size());
}

// ----------------------------------------------------------------------
// Projective covers and syzygies
// ----------------------------------------------------------------------

struct Cover {
  BlockRep P;
  std::vector<Mat> pi;  // pi[q] : dims_A[q] x dims_P[q], surjective module map
};

/// Minimal projective cover: one P(q) summand per top basis vector of A.
inline Cover projective_cover(const BlockRep& A) {
  const int64_t m = A.m;
  Cover C;
  C.P = zero_rep(m);
  C.pi.reserve(static_cast<size_t>(m));
  for (int64_t q = 0; q < m; ++q) C.pi.emplace_back(A.dims[static_cast<size_t>(q)], 0);

  for (int64_t q = 0; q < m; ++q) {
    const int64_t prv = detail::wrap(q - 1, m);
    // Radical at q = image of incoming arrows b_{q-1} and bbar_q.
    Mat rad = hstack(A.b[static_cast<size_t>(prv)], A.bbar[static_cast<size_t>(q)]);
    int64_t cur = rank(rad);
    for (int64_t j = 0; j < A.dims[static_cast<size_t>(q)]; ++j) {
      Mat ext(A.dims[static_cast<size_t>(q)], rad.cols + 1);
      for (int64_t i = 0; i < rad.rows; ++i)
        for (int64_t c = 0; c < rad.cols; ++c) ext.at(i, c) = rad.at(i, c);
      ext.at(j, rad.cols) = Rational(1);
      int64_t r2 = rank(ext);
      if (r2 == cur) continue;
      rad = std::move(ext);
      cur = r2;

      // Append one projective summand P(q) mapping its generator to e_j.
      BlockRep single = build_projective(m, q);
      const int64_t nxt = detail::wrap(q + 1, m);
      std::vector<Mat> pis;
      pis.reserve(static_cast<size_t>(m));
      for (int64_t w = 0; w < m; ++w)
        pis.emplace_back(A.dims[static_cast<size_t>(w)], single.dims[static_cast<size_t>(w)]);
      auto col_from = [&](Mat& dst, int64_t col, const Mat& map, int64_t src_col) {
        // dst column col = map * e_{src_col}
        for (int64_t i = 0; i < map.rows; ++i) dst.at(i, col) = map.at(i, src_col);
      };
      // g -> e_j and z -> bbar_q b_q e_j at vertex q
      pis[static_cast<size_t>(q)].at(j, 0) = Rational(1);
      Mat zb = multiply(A.bbar[static_cast<size_t>(q)], A.b[static_cast<size_t>(q)]);
      col_from(pis[static_cast<size_t>(q)], 1, zb, j);
      // x -> b_q e_j at vertex q+1 (index 0 there)
      col_from(pis[static_cast<size_t>(nxt)], 0, A.b[static_cast<size_t>(q)], j);
      // y -> bbar_{q-1} e_j at vertex q-1 (index 1 when m = 2, else 0)
      const int64_t yi = (nxt == prv) ? 1 : 0;
      col_from(pis[static_cast<size_t>(prv)], yi, A.bbar[static_cast<size_t>(prv)], j);

      for (int64_t w = 0; w < m; ++w)
        C.pi[static_cast<size_t>(w)] = hstack(C.pi[static_cast<size_t>(w)], pis[static_cast<size_t>(w)]);
      C.P = direct_sum(C.P, single);
    }
  }
  return C;
}

/// Kernel of the minimal projective cover, as a representation.
inline BlockRep syzygy_rep(const BlockRep& A) {
  Cover C = projective_cover(A);
  const int64_t m = A.m;
  std::vector<Mat> K(static_cast<size_t>(m));
  std::vector<int64_t> dims(static_cast<size_t>(m));
  for (int64_t q = 0; q < m; ++q) {
    K[static_cast<size_t>(q)] = kernel_basis(C.pi[static_cast<size_t>(q)]);
    dims[static_cast<size_t>(q)] = K[static_cast<size_t>(q)].cols;
  }
  BlockRep S = make_rep(m, std::move(dims));
  for (int64_t q = 0; q < m; ++q) {
    const int64_t q1 = detail::wrap(q + 1, m);
    auto X = solve(K[static_cast<size_t>(q1)],
                   multiply(C.P.b[static_cast<size_t>(q)], K[static_cast<size_t>(q)]));
    auto Y = solve(K[static_cast<size_t>(q)],
                   multiply(C.P.bbar[static_cast<size_t>(q)], K[static_cast<size_t>(q1)]));
    if (!X || !Y) throw std::logic_error("syzygy_rep: kernel not arrow-stable");
    S.b[static_cast<size_t>(q)] = std::move(*X);
    S.bbar[static_cast<size_t>(q)] = std::move(*Y);
  }
  return S;
}

/// Linear dual along the arrow-swap self-duality of the block algebra.
inline BlockRep dual_rep(const BlockRep& A) {
  BlockRep R = make_rep(A.m, A.dims);
  for (int64_t q = 0; q < A.m; ++q) {
    R.b[static_cast<size_t>(q)] = transpose(A.bbar[static_cast<size_t>(q)]);
    R.bbar[static_cast<size_t>(q)] = transpose(A.b[static_cast<size_t>(q)]);
  }
  return R;
}

inline BlockRep cosyzygy_rep(const BlockRep& A) {
  return dual_rep(syzygy_rep(dual_rep(A)));
}

inline BlockRep syzygy_iterate(BlockRep A, int64_t k) {
  for (; k > 0; --k) A = syzygy_rep(A);
  for (; k < 0; ++k) A = cosyzygy_rep(A);
  return A;
}

// ----------------------------------------------------------------------
// Stable Hom and Ext^1
// ----------------------------------------------------------------------

/// dim Hom(A,B) minus the dimension of maps factoring through a projective.
/// Every such map factors through the projective cover of B.
inline int64_t stable_hom_dim(const BlockRep& A, const BlockRep& B) {
  const int64_t h = hom_dim(A, B);
  if (h == 0) return 0;
  Cover CB = projective_cover(B);
  std::vector<Morphism> G = hom_basis(A, CB.P);
  if (G.empty()) return h;
  int64_t width = 0;
  for (int64_t q = 0; q < A.m; ++q)
    width += B.dims[static_cast<size_t>(q)] * A.dims[static_cast<size_t>(q)];
  Mat V(static_cast<int64_t>(G.size()), width);
  for (size_t g = 0; g < G.size(); ++g) {
    int64_t col = 0;
    for (int64_t q = 0; q < A.m; ++q) {
      Mat comp = multiply(CB.pi[static_cast<size_t>(q)], G[g][static_cast<size_t>(q)]);
      for (int64_t r = 0; r < comp.rows; ++r)
        for (int64_t c = 0; c < comp.cols; ++c) V.at(static_cast<int64_t>(g), col++) = comp.at(r, c);
    }
  }
  return h - rank(std::move(V));
}

/// Ext^1(A,B) = stable Hom(Omega A, B); valid because the algebra is
/// self-injective, so the stable category is triangulated with shift Omega^-1.
inline int64_t ext1_dim(const BlockRep& A, const BlockRep& B) {
  return stable_hom_dim(syzygy_rep(A), B);
}

/// Closed-form dim Ext^1 between plus strings two phases apart:
/// Ext^1(M^+ of half-length ell based at phase 2, M^+ of half-length t at
/// phase 0) on the block with m = 2*period vertices, for 1 <= t <= ell.
inline int64_t ext1_string_formula(int64_t period, int64_t ell, int64_t t) {
  if (period < 1) throw std::invalid_argument("period must be >= 1");
  if (t < 1 || t > ell) throw std::invalid_argument("requires 1 <= t <= ell");
  auto cnt = [&](int64_t residue) {
    int64_t r = ((residue % period) + period) % period;
    return r < t ? (t - 1 - r) / period + 1 : 0;
  };
  return cnt(0) - cnt(ell) + cnt(t - ell - 1);
}

// ----------------------------------------------------------------------
// Indecomposability and isomorphism
// ----------------------------------------------------------------------

/// Rank of the trace form on End(A).  In characteristic zero the radical of
/// the form is the radical of End(A), so the rank is the dimension of the
/// semisimple quotient; rank one means a local endomorphism ring with
/// residue field equal to the ground field.
inline bool is_indecomposable(const BlockRep& A) {
  if (total_dim(A) == 0) return false;
  std::vector<Morphism> E = hom_basis(A, A);
  const int64_t k = static_cast<int64_t>(E.size());
  Mat G(k, k);
  for (int64_t i = 0; i < k; ++i)
    for (int64_t j = 0; j < k; ++j) {
      Rational tr(0);
      for (int64_t q = 0; q < A.m; ++q) {
        Mat prod = multiply(E[static_cast<size_t>(i)][static_cast<size_t>(q)],
                            E[static_cast<size_t>(j)][static_cast<size_t>(q)]);
        for (int64_t r = 0; r < prod.rows; ++r) tr = tr + prod.at(r, r);
      }
      G.at(i, j) = tr;
    }
  return rank(std::move(G)) == 1;
}

/// Randomized isomorphism test over the Hom space (Schwartz-Zippel style).
/// A reported isomorphism is certified by an explicit invertible morphism;
/// a negative answer after all trials is wrong only with negligible
/// probability for the module classes handled here.
inline bool is_isomorphic(const BlockRep& A, const BlockRep& B, uint64_t seed = 0) {
  if (A.m != B.m || A.dims != B.dims) return false;
  if (total_dim(A) == 0) return true;
  std::vector<Morphism> H = hom_basis(A, B);
  if (H.empty()) return false;
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 1);
  std::uniform_int_distribution<int64_t> dist(-1000, 1000);
  for (int trial = 0; trial < 64; ++trial) {
    std::vector<Mat> f;
    f.reserve(static_cast<size_t>(A.m));
    for (int64_t q = 0; q < A.m; ++q)
      f.emplace_back(B.dims[static_cast<size_t>(q)], A.dims[static_cast<size_t>(q)]);
    for (auto& h : H) {
      Rational c(dist(rng));
      if (c.is_zero()) continue;
      for (int64_t q = 0; q < A.m; ++q) {
        Mat& fq = f[static_cast<size_t>(q)];
        const Mat& hq = h[static_cast<size_t>(q)];
        for (int64_t r = 0; r < fq.rows; ++r)
          for (int64_t cc = 0; cc < fq.cols; ++cc)
            fq.at(r, cc) = fq.at(r, cc) + c * hq.at(r, cc);
      }
    }
    bool ok = true;
    for (int64_t q = 0; q < A.m && ok; ++q) {
      const Mat& fq = f[static_cast<size_t>(q)];
      if (fq.rows != fq.cols || rank(fq) != fq.rows) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace greenring::rep
