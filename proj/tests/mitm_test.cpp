// Copyright 2026 The qlab Authors
#include "qlab/mitm.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include <cmath>

namespace qlab {
namespace {

bool oracle_exists(const SubsetSumInstance& inst) {
  const size_t n = inst.a.size();
  for (uint64_t m = 0; m < (uint64_t{1} << n); ++m) {
    int64_t s = 0;
    for (size_t i = 0; i < n; ++i)
      if ((m >> i) & 1) s += inst.a[i];
    if (s == inst.k) return true;
  }
  return false;
}

int64_t sum_of(const SubsetSumInstance& inst, const std::vector<int>& idx) {
  int64_t s = 0;
  for (int i : idx) s += inst.a[i];
  return s;
}

const SubsetSumVariant kAll[] = {SubsetSumVariant::brute, SubsetSumVariant::grover,
                                 SubsetSumVariant::mitm_classical, SubsetSumVariant::mitm_quantum};

TEST(SubsetSum, Examples) {
  Backend b(BackendKind::analytic_ideal, 1);
  const SubsetSumInstance ex{{3, 7, 4, 9, 12}, 19};
  for (auto v : kAll) {
    auto r = subset_sum(ex, v, b);
    ASSERT_TRUE(r.subset);
    EXPECT_EQ(sum_of(ex, *r.subset), 19);
    auto full = subset_sum({{3, 7, 4}, 14}, v, b);
    ASSERT_TRUE(full.subset);
    EXPECT_EQ(*full.subset, (std::vector<int>{0, 1, 2}));
    EXPECT_FALSE(subset_sum({{2, 4}, 5}, v, b).subset);
  }
}

TEST(SubsetSum, Validation) {
  Backend b(BackendKind::analytic_ideal, 2);
  EXPECT_THROW(subset_sum({{1, 0}, 1}, SubsetSumVariant::brute, b), ValidationError);
  EXPECT_THROW(subset_sum({{}, 1}, SubsetSumVariant::brute, b), ValidationError);
  EXPECT_THROW(subset_sum({std::vector<int64_t>(25, 1), 3}, SubsetSumVariant::grover, b),
               ResourceError);
  EXPECT_THROW(subset_sum({std::vector<int64_t>(31, 1), 3}, SubsetSumVariant::mitm_quantum, b),
               ResourceError);
}

TEST(SubsetSum, SplitSizes) {
  EXPECT_EQ(subset_sum_split(18, SubsetSumVariant::mitm_quantum), 6);
  EXPECT_EQ(subset_sum_split(18, SubsetSumVariant::mitm_classical), 9);
  EXPECT_EQ(subset_sum_split(10, SubsetSumVariant::mitm_quantum), 3);
}

// Every multiset of small values and every target, n <= 4.
TEST(SubsetSum, ExhaustiveSmall) {
  Backend b(BackendKind::analytic_ideal, 3);
  for (int n = 1; n <= 4; ++n) {
    std::vector<int64_t> a(n, 1);
    for (;;) {
      int64_t total = 0;
      for (auto x : a) total += x;
      for (int64_t k = 1; k <= total + 1; ++k) {
        const SubsetSumInstance inst{a, k};
        const bool want = oracle_exists(inst);
        for (auto v : kAll)
          for (SetKind s : {SetKind::ordered, SetKind::hashed}) {
            auto r = subset_sum(inst, v, b, s);
            ASSERT_EQ(r.subset.has_value(), want);
            if (r.subset) ASSERT_EQ(sum_of(inst, *r.subset), k);
          }
      }
      int i = 0;
      while (i < n && a[i] == 5) a[i++] = 1;
      if (i == n) break;
      ++a[i];
    }
  }
}

TEST(SubsetSum, RandomAgainstBruteOracle) {
  Backend b(BackendKind::analytic_ideal, 4);
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 5 + trial % 12;
    SubsetSumInstance inst;
    for (int i = 0; i < n; ++i) inst.a.push_back(1 + static_cast<int64_t>(uniform_index(rng, 200)));
    inst.k = 1 + static_cast<int64_t>(uniform_index(rng, 100 * n));
    const bool want = oracle_exists(inst);
    for (auto v : kAll) ASSERT_EQ(subset_sum(inst, v, b).subset.has_value(), want);
  }
}

TEST(SubsetSum, StochasticAgreement) {
  Backend b(BackendKind::analytic, 6);
  Rng rng(7);
  int ok = 0;
  const int trials = 300;
  for (int trial = 0; trial < trials; ++trial) {
    SubsetSumInstance inst;
    for (int i = 0; i < 12; ++i) inst.a.push_back(1 + static_cast<int64_t>(uniform_index(rng, 1000)));
    inst.k = 1 + static_cast<int64_t>(uniform_index(rng, 6000));
    auto r = subset_sum(inst, SubsetSumVariant::mitm_quantum, b);
    ok += r.subset.has_value() == oracle_exists(inst);
  }
  EXPECT_GE(ok / double(trials), 0.99);
}

// With no solution every search spends its whole budget, so the bit gap is
// t/2 plus log2(n / (n - t)).
TEST(SubsetSum, QueryExponentGap) {
  Backend b(BackendKind::analytic, 8);
  for (int n : {18, 24}) {
    SubsetSumInstance inst{std::vector<int64_t>(n, 2), 1};
    const double g = std::log2(subset_sum(inst, SubsetSumVariant::grover, b).cost.queries);
    const double m = std::log2(subset_sum(inst, SubsetSumVariant::mitm_quantum, b).cost.queries);
    EXPECT_NEAR(g - m, n / 6.0, 2.0) << n;
  }
}

TEST(Collision, Examples) {
  Backend b(BackendKind::analytic_ideal, 9);
  for (auto v : {CollisionVariant::simple, CollisionVariant::mitm}) {
    EXPECT_TRUE(collision_decide({1, 2, 3, 4}, v, b).one_to_one);
    EXPECT_FALSE(collision_decide({1, 2, 1, 2}, v, b).one_to_one);
  }
  EXPECT_EQ(collision_decide({1, 2, 1, 2}, CollisionVariant::mitm, b).label(), "2-to-1");
  // n = 8 reads a prefix of 2, which holds the pair.
  auto early = collision_decide({5, 5, 1, 1, 2, 2, 3, 3}, CollisionVariant::mitm, b);
  EXPECT_FALSE(early.one_to_one);
  EXPECT_EQ(early.cost.queries, 2);
  EXPECT_EQ(early.cost.by_label("collision"), 0);
}

TEST(Collision, Prefix) {
  EXPECT_EQ(collision_prefix(8), 2u);
  EXPECT_EQ(collision_prefix(9), 3u);
  EXPECT_EQ(collision_prefix(27), 3u);
  EXPECT_EQ(collision_prefix(1000000), 100u);
}

TEST(Collision, InstanceGenerator) {
  Rng rng(10);
  auto one = make_collision_instance(100, false, rng);
  std::sort(one.begin(), one.end());
  EXPECT_EQ(std::adjacent_find(one.begin(), one.end()), one.end());
  auto two = make_collision_instance(100, true, rng);
  std::map<int64_t, int> count;
  for (auto x : two) ++count[x];
  for (auto& [v, c] : count) EXPECT_EQ(c, 2);
  EXPECT_THROW(make_collision_instance(7, true, rng), ValidationError);
}

TEST(Collision, StochasticCorrectness) {
  Backend b(BackendKind::analytic, 11);
  Rng rng(12);
  for (auto v : {CollisionVariant::simple, CollisionVariant::mitm})
    for (SetKind s : {SetKind::ordered, SetKind::hashed}) {
      int ok = 0;
      const int trials = 400;
      for (int k = 0; k < trials; ++k) {
        const bool two = k % 2;
        auto a = make_collision_instance(1000, two, rng);
        ok += collision_decide(a, v, b, s).one_to_one == !two;
      }
      EXPECT_GE(ok / double(trials), 2.0 / 3);
    }
}

TEST(Collision, MitmQueriesScaleAsCubeRoot) {
  Backend b(BackendKind::analytic, 13);
  Rng rng(14);
  for (uint64_t n : {1000u, 8000u, 64000u}) {
    auto a = make_collision_instance(n, false, rng);
    const double q = static_cast<double>(collision_decide(a, CollisionVariant::mitm, b).cost.queries);
    const double c = q / std::cbrt(static_cast<double>(n));
    EXPECT_GT(c, 1.0);
    EXPECT_LT(c, 4.0);
  }
}

}  // namespace
}  // namespace qlab
