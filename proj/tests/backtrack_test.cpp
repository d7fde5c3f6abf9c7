// Copyright 2026 The qlab Authors
#include "qlab/backtrack.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace qlab {
namespace {

bool any_marked(const BacktrackTree& t) {
  for (char m : t.marked)
    if (m) return true;
  return false;
}

TEST(Backtrack, WalkMatrixIsUnitary) {
  Rng rng(1);
  for (int k = 0; k < 20; ++k) {
    const BacktrackTree t = random_backtrack_tree(2 + static_cast<int>(uniform_index(rng, 29)), 0.5, rng);
    const auto u = backtracking_walk_matrix(t, 4.0);
    const size_t n = t.parent.size();
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b) {
        cplx ip = 0;
        for (size_t r = 0; r < n; ++r) ip += std::conj(u[r * n + a]) * u[r * n + b];
        EXPECT_NEAR(std::abs(ip - cplx(a == b ? 1.0 : 0.0)), 0.0, 1e-12);
      }
  }
}

TEST(Backtrack, SingleEdgeByHand) {
  // Root 0 with one unmarked child 1 at depth 1. R_A reflects about
  // (beta|0> + |1>) with beta = 1/2; R_B is -I on the edge state only.
  const BacktrackTree t{{-1, 0}, {0, 0}};
  const auto u = backtracking_walk_matrix(t, 4.0);
  const double b2 = 0.25, norm2 = 1.25;
  const double ra00 = 1 - 2 * b2 / norm2, ra01 = -2 * 0.5 / norm2, ra11 = 1 - 2 / norm2;
  EXPECT_NEAR(u[0].real(), ra00, 1e-15);
  EXPECT_NEAR(u[1].real(), ra01, 1e-15);
  EXPECT_NEAR(u[2].real(), -ra01, 1e-15);
  EXPECT_NEAR(u[3].real(), -ra11, 1e-15);
}

TEST(Backtrack, MarkedRootIsCertain) {
  Rng rng(2);
  const BacktrackTree t{{-1, 0, 0}, {1, 0, 0}};
  const auto r = backtracking_detect(t, rng);
  EXPECT_NEAR(r.p_zero, 1.0, 1e-12);
  EXPECT_TRUE(r.exists);
}

TEST(Backtrack, SeparatesRandomTrees) {
  Rng rng(3);
  for (int k = 0; k < 100; ++k) {
    const BacktrackTree t = random_backtrack_tree(1 + static_cast<int>(uniform_index(rng, 31)), 0.5, rng);
    const auto r = backtracking_detect(t, rng);
    if (any_marked(t))
      EXPECT_GE(r.p_zero, 0.75) << k;
    else
      EXPECT_LE(r.p_zero, 0.1) << k;
  }
}

TEST(Backtrack, Cost) {
  Rng rng(4);
  const BacktrackTree t{{-1, 0, 0, 1}, {0, 0, 1, 0}};
  BacktrackOptions opt;
  opt.precision_bits = 5;
  const auto r = backtracking_detect(t, rng, opt);
  EXPECT_EQ(r.bits, 5);
  EXPECT_EQ(r.cost.queries, 31);
  // Default precision ceil(log2(4 sqrt 4)) + 2.
  EXPECT_EQ(backtracking_detect(t, rng).bits, 5);
}

TEST(Backtrack, ParseAndLimits) {
  const BacktrackTree t = parse_backtrack_tree("0 1\n0 2\n2 3\nm 3\n");
  EXPECT_EQ(t.parent, (std::vector<int>{-1, 0, 0, 2}));
  EXPECT_EQ(t.marked, (std::vector<char>{0, 0, 0, 1}));
  EXPECT_THROW(parse_backtrack_tree("0 1\n2 3\n"), ValidationError);
  EXPECT_THROW(parse_backtrack_tree("0 1\n0 1\n"), ValidationError);
  EXPECT_THROW(parse_backtrack_tree("0 40\n"), ResourceError);
  BacktrackTree big;
  big.parent.assign(32, 0);
  big.parent[0] = -1;
  big.marked.assign(32, 0);
  Rng rng(5);
  EXPECT_THROW(backtracking_detect(big, rng), ResourceError);
}

}  // namespace
}  // namespace qlab
