#pragma once

/**
 * @file labels.hpp
 * @brief Canonical labels for the indecomposable non-projective modules,
 *        plus their structure maps.
 *
 * The label universe over a fixed (n, d), d >= 2, consists of
 *
 *   - syzygies of simples   O^m[L(u,i)]   (m = 0 is the simple itself),
 *   - even-length strings   M+_{2l}(u,i) and M-_{2l}(u,i),  l >= 1,
 *   - bands                 C_{l,lambda}(u,i),  l >= 1, lambda != 0,
 *   - projective covers     P(u,i)  (stably zero; kept for bookkeeping).
 *
 * Vertices are normalized into [0,n)^2 on construction.  Band labels are
 * additionally folded to the least residue i mod d in [0,d): the classes of
 * i and i+d coincide.  Non-projective kinds require a non-projective vertex.
 *
 * Structure maps implemented here: dimension, composition length, duality,
 * syzygy shift O^k, almost split sequences for the three even-length
 * families, and the splitting-trace / endotrivial / algebraic predicates.
 */

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "greenring/modarith.hpp"
#include "greenring/rational.hpp"

namespace greenring {

enum class Kind : int {
  syzygy = 0,       // O^m[L(u,i)], includes simples (m = 0)
  string_plus = 1,  // M+_{2l}(u,i)
  string_minus = 2, // M-_{2l}(u,i)
  band = 3,         // C_{l,lambda}(u,i)
  projective = 4,   // P(u,i)
};

inline const char* kind_name(Kind k) {
  switch (k) {
    case Kind::syzygy: return "syzygy";
    case Kind::string_plus: return "string+";
    case Kind::string_minus: return "string-";
    case Kind::band: return "band";
    case Kind::projective: return "projective";
  }
  return "?";
}

/// Errors raised by label construction and label-level operations.
class LabelError : public std::runtime_error {
 public:
  enum class Code {
    projective_vertex,  // non-projective kind built on a projective vertex
    bad_length,         // l (or the 2l subscript) out of range
    zero_lambda,        // band with lambda = 0
    unsupported,        // operation undefined for this kind
    block_mismatch,     // stable-equivalence source outside the principal block
  };

  LabelError(Code c, const std::string& msg) : std::runtime_error(msg), code(c) {}
  Code code;
};

struct ModLabel {
  Kind kind{Kind::syzygy};
  Vertex v{};          // normalized into [0,n)^2
  int64_t m{0};        // syzygy degree (kind == syzygy only)
  int64_t ell{0};      // half-length for strings, multiplicity for bands
  Rational lambda{};   // band parameter, reduced

  friend bool operator==(const ModLabel&, const ModLabel&) = default;

  /// Canonical order: kind, then u, i, then m/ell, then lambda.
  friend bool operator<(const ModLabel& a, const ModLabel& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    if (a.v != b.v) return a.v < b.v;
    if (a.m != b.m) return a.m < b.m;
    if (a.ell != b.ell) return a.ell < b.ell;
    return a.lambda < b.lambda;
  }
};

// ----------------------------------------------------------------------
// Factories. All validation lives here; downstream code assumes canonical
// labels and never re-checks.
// ----------------------------------------------------------------------

inline ModLabel syzygy_label(const Params& p, int64_t m, int64_t u, int64_t i) {
  Vertex v = normalize(p, {u, i});
  if (is_projective_vertex(p, v))
    throw LabelError(LabelError::Code::projective_vertex,
                     "L(" + std::to_string(v.u) + "," + std::to_string(v.i) +
                         ") is projective; use P(u,i)");
  ModLabel l;
  l.kind = Kind::syzygy;
  l.v = v;
  l.m = m;
  return l;
}

inline ModLabel simple_label(const Params& p, int64_t u, int64_t i) {
  return syzygy_label(p, 0, u, i);
}

inline ModLabel string_label(const Params& p, char sign, int64_t ell, int64_t u, int64_t i) {
  if (sign != '+' && sign != '-') throw std::invalid_argument("string sign must be '+' or '-'");
  if (ell < 1)
    throw LabelError(LabelError::Code::bad_length, "string length must be a positive even integer");
  Vertex v = normalize(p, {u, i});
  if (is_projective_vertex(p, v))
    throw LabelError(LabelError::Code::projective_vertex, "string label on a projective vertex");
  ModLabel l;
  l.kind = sign == '+' ? Kind::string_plus : Kind::string_minus;
  l.v = v;
  l.ell = ell;
  return l;
}

inline ModLabel band_label(const Params& p, int64_t ell, const Rational& lambda, int64_t u,
                           int64_t i) {
  if (ell < 1) throw LabelError(LabelError::Code::bad_length, "band multiplicity must be >= 1");
  if (lambda.is_zero()) throw LabelError(LabelError::Code::zero_lambda, "band parameter must be nonzero");
  Vertex v = normalize(p, {u, p.mod_d(i)});  // fold to the least residue mod d
  if (is_projective_vertex(p, v))
    throw LabelError(LabelError::Code::projective_vertex, "band label on a projective vertex");
  ModLabel l;
  l.kind = Kind::band;
  l.v = v;
  l.ell = ell;
  l.lambda = lambda;
  return l;
}

inline ModLabel projective_label(const Params& p, int64_t u, int64_t i) {
  ModLabel l;
  l.kind = Kind::projective;
  l.v = normalize(p, {u, i});
  return l;
}

// ----------------------------------------------------------------------
// Invariants
// ----------------------------------------------------------------------

/// Dimension over the ground field.
inline int64_t dim_of(const Params& p, const ModLabel& l) {
  switch (l.kind) {
    case Kind::syzygy: {
      int64_t n0 = dim_simple(p, l.v);
      int64_t am = std::abs(l.m);
      return am % 2 == 0 ? am * p.d + n0 : am * p.d + (p.d - n0);
    }
    case Kind::string_plus:
    case Kind::string_minus:
      return l.ell * p.d;
    case Kind::band:
      return l.ell * p.n;
    case Kind::projective:
      return is_projective_vertex(p, l.v) ? p.d : 2 * p.d;
  }
  throw std::logic_error("dim_of: bad kind");
}

/// Composition length.
inline int64_t length_of(const Params& p, const ModLabel& l) {
  switch (l.kind) {
    case Kind::syzygy:
      return 2 * std::abs(l.m) + 1;
    case Kind::string_plus:
    case Kind::string_minus:
      return 2 * l.ell;
    case Kind::band:
      return 2 * l.ell * p.n / p.d;
    case Kind::projective:
      return is_projective_vertex(p, l.v) ? 1 : 4;
  }
  throw std::logic_error("length_of: bad kind");
}

// ----------------------------------------------------------------------
// Duality.  An involution; it preserves dimension and length.
// ----------------------------------------------------------------------

inline ModLabel dual(const Params& p, const ModLabel& l) {
  switch (l.kind) {
    case Kind::syzygy:
      return syzygy_label(p, -l.m, -l.v.u, 1 - sigma(p, l.v.u, l.v.i));
    case Kind::string_plus:
      return string_label(p, '+', l.ell, -l.v.u, 1 - l.v.i - l.ell * p.d);
    case Kind::string_minus:
      return string_label(p, '-', l.ell, -l.v.u, 1 - l.v.i - (l.ell - 1) * p.d);
    case Kind::band:
      return band_label(p, l.ell, l.lambda, -l.v.u, 1 - l.v.i);
    case Kind::projective:
      return projective_label(p, -l.v.u, 1 - sigma(p, l.v.u, l.v.i));
  }
  throw std::logic_error("dual: bad kind");
}

// ----------------------------------------------------------------------
// Syzygy shift O^k.  On vertices it acts through sigma; only k mod 2
// matters for bands (the double shift i+d folds away mod d).
// ----------------------------------------------------------------------

inline ModLabel syzygy_shift(const Params& p, const ModLabel& l, int64_t k) {
  switch (l.kind) {
    case Kind::syzygy:
      return syzygy_label(p, l.m + k, l.v.u, l.v.i);
    case Kind::string_plus:
      return string_label(p, '+', l.ell, l.v.u, sigma_pow(p, l.v.u, l.v.i, -k));
    case Kind::string_minus:
      return string_label(p, '-', l.ell, l.v.u, sigma_pow(p, l.v.u, l.v.i, k));
    case Kind::band:
      return band_label(p, l.ell, l.lambda, l.v.u, sigma_pow(p, l.v.u, l.v.i, k));
    case Kind::projective:
      throw LabelError(LabelError::Code::unsupported, "syzygy shift of a projective is zero");
  }
  throw std::logic_error("syzygy_shift: bad kind");
}

// ----------------------------------------------------------------------
// Almost split sequences for the three even-length families.
// The middle drops zero summands (half-length 0 strings, multiplicity 0
// bands).  Odd-length labels have no closed form here and are rejected.
// ----------------------------------------------------------------------

struct ARSequence {
  ModLabel left;
  std::vector<ModLabel> middle;
};

inline ARSequence ar_sequence(const Params& p, const ModLabel& l) {
  ARSequence s;
  switch (l.kind) {
    case Kind::string_plus: {
      s.left = string_label(p, '+', l.ell, l.v.u, l.v.i - p.d);
      s.middle.push_back(string_label(p, '+', l.ell + 1, l.v.u, l.v.i - p.d));
      if (l.ell >= 2) s.middle.push_back(string_label(p, '+', l.ell - 1, l.v.u, l.v.i));
      return s;
    }
    case Kind::string_minus: {
      s.left = string_label(p, '-', l.ell, l.v.u, l.v.i + p.d);
      s.middle.push_back(string_label(p, '-', l.ell + 1, l.v.u, l.v.i + p.d));
      if (l.ell >= 2) s.middle.push_back(string_label(p, '-', l.ell - 1, l.v.u, l.v.i));
      return s;
    }
    case Kind::band: {
      s.left = band_label(p, l.ell, l.lambda, l.v.u, l.v.i - p.d);
      s.middle.push_back(band_label(p, l.ell + 1, l.lambda, l.v.u, l.v.i));
      if (l.ell >= 2) s.middle.push_back(band_label(p, l.ell - 1, l.lambda, l.v.u, l.v.i));
      return s;
    }
    case Kind::syzygy:
      throw LabelError(LabelError::Code::unsupported,
                       "no closed-form almost split sequence for odd-length labels");
    case Kind::projective:
      throw LabelError(LabelError::Code::unsupported, "projectives have no almost split sequence");
  }
  throw std::logic_error("ar_sequence: bad kind");
}

// ----------------------------------------------------------------------
// Predicates
// ----------------------------------------------------------------------

/// Odd composition length, i.e. a syzygy of a simple.
inline bool is_splitting_trace(const ModLabel& l) { return l.kind == Kind::syzygy; }

/// Endotrivial: a syzygy of a simple of dimension 1 or d-1.
inline bool is_endotrivial(const Params& p, const ModLabel& l) {
  if (l.kind != Kind::syzygy) return false;
  int64_t n0 = dim_simple(p, l.v);
  return n0 == 1 || n0 == p.d - 1;
}

/// Algebraic: tensor powers generate finitely many indecomposables.
/// Projectives, simples (m = 0) and all even-length labels qualify.
inline bool is_algebraic(const ModLabel& l) {
  switch (l.kind) {
    case Kind::syzygy: return l.m == 0;
    case Kind::string_plus:
    case Kind::string_minus:
    case Kind::band:
    case Kind::projective:
      return true;
  }
  return false;
}

// ----------------------------------------------------------------------
// Text rendering (the parse grammar's canonical output form)
// ----------------------------------------------------------------------

inline std::string to_text(const ModLabel& l) {
  const std::string uv =
      "(" + std::to_string(l.v.u) + "," + std::to_string(l.v.i) + ")";
  switch (l.kind) {
    case Kind::syzygy: {
      std::string core = "L" + uv;
      if (l.m == 0) return core;
      return "O^" + std::to_string(l.m) + "[" + core + "]";
    }
    case Kind::string_plus:
      return "M+_{" + std::to_string(2 * l.ell) + "}" + uv;
    case Kind::string_minus:
      return "M-_{" + std::to_string(2 * l.ell) + "}" + uv;
    case Kind::band:
      return "C_{" + std::to_string(l.ell) + "," + l.lambda.str() + "}" + uv;
    case Kind::projective:
      return "P" + uv;
  }
  throw std::logic_error("to_text: bad kind");
}

}  // namespace greenring
