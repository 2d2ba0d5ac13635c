#pragma once

/**
 * @file enumerate.hpp
 * @brief Bounded canonical label universes for tables and property sweeps.
 *
 * The full label set is infinite (syzygy degrees, string lengths, band
 * multiplicities and parameters are unbounded), so consumers pick bounds.
 * Enumeration respects canonicity: one label per isomorphism class, bands
 * only at phases in [0,d), and nothing on projective vertices except the
 * projectives themselves.
 */

#include <algorithm>
#include <cstdint>
#include <vector>

#include "greenring/labels.hpp"
#include "greenring/rational.hpp"

namespace greenring {

struct UniverseSpec {
  int64_t max_syzygy{3};  // syzygy labels with |m| <= max_syzygy
  int64_t max_ell{3};     // strings and bands with 1 <= ell <= max_ell
  std::vector<Rational> lambdas{Rational(1), Rational(2), Rational(1, 2)};
  bool include_projectives{false};
};

/// All canonical labels within the bounds, in canonical sort order.
inline std::vector<ModLabel> enumerate_labels(const Params& p, const UniverseSpec& spec) {
  std::vector<ModLabel> out;
  for (int64_t u = 0; u < p.n; ++u)
    for (int64_t i = 0; i < p.n; ++i) {
      Vertex v{u, i};
      if (is_projective_vertex(p, v)) {
        if (spec.include_projectives) out.push_back(projective_label(p, u, i));
        continue;
      }
      for (int64_t m = -spec.max_syzygy; m <= spec.max_syzygy; ++m)
        out.push_back(syzygy_label(p, m, u, i));
      for (int64_t ell = 1; ell <= spec.max_ell; ++ell) {
        out.push_back(string_label(p, '+', ell, u, i));
        out.push_back(string_label(p, '-', ell, u, i));
      }
      if (i < p.d)
        for (int64_t ell = 1; ell <= spec.max_ell; ++ell)
          for (const Rational& lam : spec.lambdas)
            out.push_back(band_label(p, ell, lam, u, i));
    }
  std::sort(out.begin(), out.end());
  return out;
}

/// Count of canonical labels of one kind within the bound, used to cap
/// closure sizes: non-projective vertex count for syzygies at fixed m and
/// for strings at fixed sign and ell; vertices with canonical band phase
/// for bands at fixed ell and lambda.
inline int64_t nonprojective_vertex_count(const Params& p) {
  return p.n * p.n - p.n * p.n / p.d;
}

inline int64_t band_phase_count(const Params& p) {
  int64_t c = 0;
  for (int64_t u = 0; u < p.n; ++u)
    for (int64_t i = 0; i < p.d; ++i)
      if (!is_projective_vertex(p, {u, i})) ++c;
  return c;
}

}  // namespace greenring
