#include <gtest/gtest.h>

#include "greenring/verify.hpp"

namespace greenring {
namespace {

const Params P63{6, 3};

TEST(BlockPhase, OrbitPositions) {
  // sigma_0 orbit at (6,3): 0 -> 1 -> 3 -> 4 -> 0.
  EXPECT_EQ(block_phase(P63, {0, 0}, {0, 0}), 0);
  EXPECT_EQ(block_phase(P63, {0, 0}, {0, 1}), 1);
  EXPECT_EQ(block_phase(P63, {0, 0}, {0, 3}), 2);
  EXPECT_EQ(block_phase(P63, {0, 0}, {0, 4}), 3);
  EXPECT_EQ(block_phase(P63, {0, 1}, {0, 0}), 3);

  EXPECT_THROW(block_phase(P63, {0, 0}, {1, 1}), LabelError);   // other component
  EXPECT_THROW(block_phase(P63, {0, 0}, {0, 2}), LabelError);   // projective vertex
  EXPECT_THROW(block_phase(P63, {0, 2}, {0, 0}), LabelError);   // projective base
}

TEST(RepOfLabel, PlacesAtBlockPhase) {
  const int64_t m = P63.orbit_size();
  EXPECT_EQ(rep_of_label(P63, simple_label(P63, 0, 1)), rep::build_simple(m, 0));
  EXPECT_EQ(rep_of_label(P63, simple_label(P63, 0, 1), {0, 0}), rep::build_simple(m, 1));
  EXPECT_EQ(rep_of_label(P63, string_label(P63, '+', 2, 0, 3), {0, 0}),
            rep::build_string(m, '+', 2, 2));
  EXPECT_EQ(rep_of_label(P63, projective_label(P63, 0, 1), {0, 0}),
            rep::build_projective(m, 1));
  // Bands land on any block position with the right folded phase.
  EXPECT_EQ(rep_of_label(P63, band_label(P63, 2, Rational(2), 0, 1), {0, 0}),
            rep::build_band(m, 2, Rational(2), 1));
  // Syzygy labels expand through the oracle shift.
  EXPECT_EQ(rep_of_label(P63, syzygy_label(P63, 1, 0, 1)),
            rep::syzygy_iterate(rep::build_simple(m, 0), 1));
}

TEST(RepOfLabel, Rejections) {
  // A projective simple lives in a simple block: no string-quiver model.
  EXPECT_THROW(rep_of_label(P63, projective_label(P63, 0, 2)), LabelError);
  // Wrong block.
  EXPECT_THROW(rep_of_label(P63, simple_label(P63, 1, 1), {0, 0}), LabelError);
  EXPECT_THROW(rep_of_label(P63, band_label(P63, 1, Rational(1), 1, 1), {0, 0}), LabelError);
}

TEST(FullDim, MatchesLabelDimensions) {
  // Frozen: dim L(0,1) = 2, dim O L(0,1) = 4, dim P(0,1) = 6 at (6,3).
  EXPECT_EQ(full_dim(P63, rep_of_label(P63, simple_label(P63, 0, 1)), {0, 1}), 2);
  EXPECT_EQ(full_dim(P63, rep_of_label(P63, syzygy_label(P63, 1, 0, 1)), {0, 1}), 4);
  EXPECT_EQ(full_dim(P63, rep_of_label(P63, projective_label(P63, 0, 1)), {0, 1}), 6);
  // The base vertex sets the even/odd weights; a shifted base reweights.
  const rep::BlockRep S = rep::build_simple(P63.orbit_size(), 1);
  EXPECT_EQ(full_dim(P63, S, {0, 0}), P63.d - dim_simple(P63, {0, 0}));
}

TEST(Suite, AllChecksPassAtSixThree) {
  VerifyOptions opt;
  opt.trials = 100;
  const SuiteResult r = verify_all(P63, opt);
  EXPECT_EQ(r.checks.size(), 16u);
  for (const Check& c : r.checks) {
    EXPECT_TRUE(c.pass) << c.name << ": " << c.detail;
    EXPECT_GE(c.seconds, 0.0);
  }
  EXPECT_TRUE(r.all_pass());
}

TEST(Suite, AllChecksPassAtFourFour) {
  VerifyOptions opt;
  opt.trials = 100;
  opt.seed = 7;
  const SuiteResult r = verify_all(Params{4, 4}, opt);
  for (const Check& c : r.checks) EXPECT_TRUE(c.pass) << c.name << ": " << c.detail;
}

TEST(Suite, DegenerateParameterIsQuiet) {
  // d = 1: every module is projective and the stable ring is zero; the
  // suite must report cleanly instead of throwing.
  VerifyOptions opt;
  opt.trials = 10;
  const SuiteResult r = verify_all(Params{3, 1}, opt);
  for (const Check& c : r.checks) EXPECT_TRUE(c.pass) << c.name << ": " << c.detail;
}

}  // namespace
}  // namespace greenring
