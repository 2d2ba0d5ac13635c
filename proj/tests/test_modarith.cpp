// Unit tests for the residue / sigma / block layer.
//
// Frozen values below were worked out by hand from the defining formulas
// (res, sigma, dims, block counts) before the implementation existed; they
// act as the oracle for this layer.

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "greenring/modarith.hpp"

using namespace greenring;

namespace {

std::vector<Params> desk_configs() {
  return {Params(2, 2), Params(3, 3), Params(4, 4), Params(6, 2),
          Params(6, 3), Params(8, 4), Params(9, 3), Params(5, 5),
          Params(10, 5), Params(12, 4)};
}

}  // namespace

// ======================================================================
// Parameter validation
// ======================================================================

TEST(Params, ValidatesInput) {
  EXPECT_NO_THROW(Params(6, 3));
  EXPECT_NO_THROW(Params(7, 1));
  EXPECT_THROW(Params(6, 4), std::invalid_argument);   // d does not divide n
  EXPECT_THROW(Params(0, 1), std::invalid_argument);
  EXPECT_THROW(Params(6, 0), std::invalid_argument);
  EXPECT_THROW(Params(-6, 3), std::invalid_argument);
  EXPECT_THROW(Params(int64_t{1} << 21, 1), std::invalid_argument);
}

// ======================================================================
// res: residue normalized into {1, ..., d}
// ======================================================================

TEST(Res, FrozenValues) {
  Params p(6, 3);
  EXPECT_EQ(res(p, 1), 1);
  EXPECT_EQ(res(p, 3), 3);   // multiples of d land on d, not 0
  EXPECT_EQ(res(p, 0), 3);
  EXPECT_EQ(res(p, -1), 2);  // -1 = -3 + 2
  EXPECT_EQ(res(p, 7), 1);
  EXPECT_EQ(res(p, -4), 2);
}

TEST(Res, ComplementIdentity) {
  // <x> + <-x> = d whenever d does not divide x.
  for (const Params& p : desk_configs()) {
    for (int64_t x = -3 * p.d; x <= 3 * p.d; ++x) {
      if (p.mod_d(x) == 0) {
        EXPECT_EQ(res(p, x), p.d);
        EXPECT_EQ(res(p, -x), p.d);
      } else {
        EXPECT_EQ(res(p, x) + res(p, -x), p.d) << "x=" << x;
      }
    }
  }
}

// ======================================================================
// Projective vertices and simple dimensions
// ======================================================================

TEST(Simples, FrozenDims63) {
  Params p(6, 3);
  // u = 0: 2i - 1 over i = 0..5 gives residues 2,1,3,2,1,3 -> dims 1,2,P,1,2,P
  EXPECT_EQ(dim_simple(p, {0, 0}), 1);
  EXPECT_EQ(dim_simple(p, {0, 1}), 2);
  EXPECT_TRUE(is_projective_vertex(p, {0, 2}));
  EXPECT_EQ(dim_simple(p, {0, 2}), 3);
  EXPECT_EQ(dim_simple(p, {0, 3}), 1);
  EXPECT_EQ(dim_simple(p, {0, 4}), 2);
  EXPECT_TRUE(is_projective_vertex(p, {0, 5}));
  // u = 1: 2i over i = 0..5 -> P,1,2,P,1,2
  EXPECT_TRUE(is_projective_vertex(p, {1, 0}));
  EXPECT_EQ(dim_simple(p, {1, 1}), 1);
  EXPECT_EQ(dim_simple(p, {1, 2}), 2);
  EXPECT_TRUE(is_projective_vertex(p, {1, 3}));
  EXPECT_EQ(dim_simple(p, {1, 4}), 1);
  EXPECT_EQ(dim_simple(p, {1, 5}), 2);
}

TEST(Simples, DimRangeAndD1) {
  for (const Params& p : desk_configs()) {
    for (int64_t u = 0; u < p.n; ++u)
      for (int64_t i = 0; i < p.n; ++i) {
        int64_t dim = dim_simple(p, {u, i});
        if (is_projective_vertex(p, {u, i}))
          EXPECT_EQ(dim, p.d);
        else {
          EXPECT_GE(dim, 1);
          EXPECT_LE(dim, p.d - 1);
        }
      }
  }
  Params p1(4, 1);
  for (int64_t u = 0; u < 4; ++u)
    for (int64_t i = 0; i < 4; ++i) EXPECT_TRUE(is_projective_vertex(p1, {u, i}));
}

// ======================================================================
// sigma and its powers
// ======================================================================

TEST(Sigma, FrozenTable63) {
  Params p(6, 3);
  EXPECT_EQ(sigma(p, 0, 0), 1);
  EXPECT_EQ(sigma(p, 0, 1), 3);
  EXPECT_EQ(sigma(p, 0, 3), 4);
  EXPECT_EQ(sigma(p, 0, 4), 0);
  EXPECT_EQ(sigma(p, 1, 1), 2);
  EXPECT_EQ(sigma(p, 1, 2), 4);
  EXPECT_EQ(sigma(p, 1, 4), 5);
  EXPECT_EQ(sigma(p, 1, 5), 1);
  // projective vertices are fixed points
  EXPECT_EQ(sigma(p, 0, 2), 2);
  EXPECT_EQ(sigma(p, 0, 5), 5);
  EXPECT_EQ(sigma(p, 1, 0), 0);
}

TEST(Sigma, BijectionAndTranslation) {
  for (const Params& p : desk_configs()) {
    for (int64_t u = 0; u < p.n; ++u) {
      std::set<int64_t> image;
      for (int64_t j = 0; j < p.n; ++j) {
        image.insert(sigma(p, u, j));
        // sigma_u(j + d) = sigma_u(j) + d
        EXPECT_EQ(sigma(p, u, j + p.d), p.mod_n(sigma(p, u, j) + p.d));
      }
      EXPECT_EQ(image.size(), static_cast<std::size_t>(p.n));
    }
  }
}

TEST(Sigma, PowClosedFormMatchesIteration) {
  for (const Params& p : desk_configs()) {
    for (int64_t u = 0; u < p.n; ++u)
      for (int64_t j = 0; j < p.n; ++j) {
        int64_t it = j;
        for (int64_t t = 0; t <= 2 * p.orbit_size() + 3; ++t) {
          EXPECT_EQ(sigma_pow(p, u, j, t), it) << "u=" << u << " j=" << j << " t=" << t;
          it = sigma(p, u, it);
        }
      }
  }
}

TEST(Sigma, NegativePowsInvert) {
  for (const Params& p : desk_configs()) {
    for (int64_t u = 0; u < p.n; ++u)
      for (int64_t j = 0; j < p.n; ++j)
        for (int64_t t = -7; t <= 7; ++t) {
          EXPECT_EQ(sigma_pow(p, u, sigma_pow(p, u, j, t), -t), j);
          // inverse closed form on non-fixed points: sigma^{-1}(j) = sigma(j) - d
          if (!is_projective_vertex(p, {u, j}))
            EXPECT_EQ(sigma_pow(p, u, j, -1), p.mod_n(sigma(p, u, j) - p.d));
        }
  }
}

TEST(Sigma, DimPairing) {
  // dim L(u,i) + dim L(u, sigma_u(i)) = d on non-projective vertices.
  for (const Params& p : desk_configs()) {
    for (int64_t u = 0; u < p.n; ++u)
      for (int64_t i = 0; i < p.n; ++i) {
        Vertex v{u, i};
        if (is_projective_vertex(p, v)) continue;
        EXPECT_EQ(dim_simple(p, v) + dim_simple(p, {u, sigma(p, u, i)}), p.d);
      }
  }
}

// ======================================================================
// Blocks
// ======================================================================

TEST(Blocks, OrbitSizes) {
  for (const Params& p : desk_configs()) {
    for (int64_t u = 0; u < p.n; ++u)
      for (int64_t i = 0; i < p.n; ++i) {
        auto mem = block_members(p, {u, i});
        if (is_projective_vertex(p, {u, i}))
          EXPECT_EQ(mem.size(), 1u);
        else {
          EXPECT_EQ(mem.size(), static_cast<std::size_t>(p.orbit_size()));
          std::set<Vertex> uniq(mem.begin(), mem.end());
          EXPECT_EQ(uniq.size(), mem.size());
        }
      }
  }
}

TEST(Blocks, SameBlockIsEquivalence) {
  Params p(6, 3);
  // frozen: orbit of (0,0) is {0,1,3,4}
  EXPECT_TRUE(same_block(p, {0, 0}, {0, 1}));
  EXPECT_TRUE(same_block(p, {0, 0}, {0, 3}));
  EXPECT_TRUE(same_block(p, {0, 0}, {0, 4}));
  EXPECT_FALSE(same_block(p, {0, 0}, {0, 2}));
  EXPECT_FALSE(same_block(p, {0, 0}, {1, 1}));
  // projective vertices are singleton blocks
  EXPECT_FALSE(same_block(p, {0, 2}, {0, 5}));
  EXPECT_TRUE(same_block(p, {0, 2}, {0, 2}));
  // symmetry
  for (int64_t i = 0; i < 6; ++i)
    for (int64_t j = 0; j < 6; ++j)
      EXPECT_EQ(same_block(p, {0, i}, {0, j}), same_block(p, {0, j}, {0, i}));
}

TEST(Blocks, RepresentativeIsStable) {
  for (const Params& p : desk_configs()) {
    for (int64_t u = 0; u < p.n; ++u)
      for (int64_t i = 0; i < p.n; ++i) {
        Vertex r = block_representative(p, {u, i});
        EXPECT_TRUE(same_block(p, {u, i}, r));
        for (const Vertex& w : block_members(p, {u, i}))
          EXPECT_EQ(block_representative(p, w), r);
      }
  }
}

TEST(Blocks, CensusMatchesEnumeration) {
  for (const Params& p : desk_configs()) {
    BlockCensus c = block_census(p);
    int64_t simple = 0;
    int64_t nonsimple = 0;
    for (int64_t u = 0; u < p.n; ++u) {
      std::set<int64_t> seen;
      for (int64_t i = 0; i < p.n; ++i) {
        if (is_projective_vertex(p, {u, i})) {
          ++simple;
          continue;
        }
        if (seen.count(i)) continue;
        ++nonsimple;
        for (const Vertex& w : block_members(p, {u, i})) seen.insert(w.i);
      }
    }
    EXPECT_EQ(c.simple_blocks, simple) << "n=" << p.n << " d=" << p.d;
    EXPECT_EQ(c.nonsimple_blocks, nonsimple) << "n=" << p.n << " d=" << p.d;
  }
}

TEST(Blocks, FrozenCensusValues) {
  EXPECT_EQ(block_census(Params(6, 3)), (BlockCensus{12, 6}));
  EXPECT_EQ(block_census(Params(6, 2)), (BlockCensus{18, 3}));
  EXPECT_EQ(block_census(Params(9, 3)), (BlockCensus{27, 9}));
  EXPECT_EQ(block_census(Params(2, 2)), (BlockCensus{2, 1}));
  EXPECT_EQ(block_census(Params(3, 3)), (BlockCensus{3, 3}));
  EXPECT_EQ(block_census(Params(4, 4)), (BlockCensus{4, 6}));
  EXPECT_EQ(block_census(Params(8, 4)), (BlockCensus{16, 12}));
  EXPECT_EQ(block_census(Params(5, 5)), (BlockCensus{5, 10}));
  EXPECT_EQ(block_census(Params(10, 5)), (BlockCensus{20, 20}));
  EXPECT_EQ(block_census(Params(12, 1)), (BlockCensus{144, 0}));
}
