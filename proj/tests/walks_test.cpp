// Copyright 2026 The qlab Authors
#include "qlab/walks.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace qlab {
namespace {

Rational binom(int n, int k) {
  Rational r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

TEST(RandomWalk, LineMatchesBinomial) {
  const Rational q(1, 3);
  for (int steps : {0, 1, 5, 12}) {
    const auto d = random_walk_line_exact(steps, q);
    for (int r = 0; r <= steps; ++r) {
      Rational want = binom(steps, r);
      for (int i = 0; i < r; ++i) want *= q;
      for (int i = r; i < steps; ++i) want *= 1 - q;
      EXPECT_EQ(d.at(2 * r - steps), want) << steps << " " << r;
    }
    EXPECT_EQ(d.at(steps + 1), 0);
  }
}

TEST(RandomWalk, LineFloatAgreesWithExact) {
  const auto e = random_walk_line_exact(40, Rational(1, 2));
  const auto f = random_walk_line(40, 0.5);
  for (int64_t x = -40; x <= 40; ++x)
    EXPECT_NEAR(f.at(x), e.at(x).convert_to<double>(), 1e-14);
}

TEST(RandomWalk, CircleFoldsTheLine) {
  for (int size : {3, 5, 8}) {
    for (int steps : {1, 4, 9}) {
      const auto c = random_walk_circle_exact(size, steps);
      const auto line = random_walk_line_exact(steps, Rational(1, 2));
      std::vector<Rational> want(size, 0);
      for (int64_t x = -steps; x <= steps; ++x)
        want[((x % size) + size) % size] += line.at(x);
      EXPECT_EQ(c, want) << size << " " << steps;
    }
  }
}

TEST(RandomWalk, CircleStepFour) {
  const auto c = random_walk_circle_exact(5, 4);
  EXPECT_EQ(c[0], Rational(3, 8));
  EXPECT_EQ(c[1], Rational(1, 16));
  EXPECT_EQ(c[2], Rational(1, 4));
  EXPECT_EQ(c[3], Rational(1, 4));
  EXPECT_EQ(c[4], Rational(1, 16));
}

TEST(RandomWalk, OddCircleMixes) {
  const auto c = random_walk_circle(5, 400);
  for (double p : c) EXPECT_NEAR(p, 0.2, 1e-12);
}

TEST(CoinedLine, MatchesDenseOperator) {
  const int steps = 20;
  const Gate1Q h = standard_gate("H");
  const int width = 2 * steps + 1;
  const int dim = 2 * width;
  // Dense S (I x C) on positions -steps..steps, index 2*(x+steps)+d.
  std::vector<cplx> u(static_cast<size_t>(dim) * dim, 0.0);
  for (int x = 0; x < width; ++x)
    for (int d = 0; d < 2; ++d)
      for (int e = 0; e < 2; ++e) {
        const int to = d == 0 ? x - 1 : x + 1;
        if (to < 0 || to >= width) continue;
        u[static_cast<size_t>(2 * to + d) * dim + 2 * x + e] += h(d, e);
      }
  std::vector<cplx> v(dim, 0.0);
  v[2 * steps + 1] = 1.0;
  for (int s = 0; s < steps; ++s) {
    std::vector<cplx> w(dim, 0.0);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) w[r] += u[static_cast<size_t>(r) * dim + c] * v[c];
    v = w;
  }
  const auto amps = coined_walk_1d_amplitudes(steps, h, {0, 1});
  for (int x = -steps; x <= steps; ++x)
    for (int d = 0; d < 2; ++d) {
      const int64_t i = 2 * (x - amps.first) + d;
      const cplx got = i >= 0 && i < static_cast<int64_t>(amps.prob.size()) ? amps.prob[i] : 0.0;
      EXPECT_NEAR(std::abs(got - v[2 * (x + steps) + d]), 0.0, 1e-12) << x << " " << d;
    }
}

TEST(CoinedLine, HadamardIsAsymmetric) {
  const auto d = coined_walk_1d(100, standard_gate("H"));
  double total = 0, left = 0;
  for (size_t i = 0; i < d.prob.size(); ++i) {
    total += d.prob[i];
    if (d.first + static_cast<int64_t>(i) < 0) left += d.prob[i];
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
  EXPECT_GT(left, 0.7);
  // Odd positions are never occupied after an even number of steps.
  EXPECT_EQ(d.at(1), 0.0);
}

std::vector<std::vector<int>> petersen() {
  std::vector<std::vector<int>> adj(10);
  auto add = [&](int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (int i = 0; i < 5; ++i) {
    add(i, (i + 1) % 5);
    add(i, i + 5);
    add(5 + i, 5 + (i + 2) % 5);
  }
  return adj;
}

TEST(CoinedGraph, StepIsUnitary) {
  CoinedGraphWalk w(petersen());
  w.set_marked(3);
  const size_t d = w.num_states();
  std::vector<std::vector<cplx>> cols(d);
  for (size_t c = 0; c < d; ++c) {
    cols[c].assign(d, 0.0);
    cols[c][c] = 1.0;
    w.step(cols[c]);
  }
  for (size_t a = 0; a < d; ++a)
    for (size_t b = 0; b < d; ++b) {
      cplx ip = 0;
      for (size_t r = 0; r < d; ++r) ip += std::conj(cols[a][r]) * cols[b][r];
      EXPECT_NEAR(std::abs(ip - cplx(a == b ? 1.0 : 0.0)), 0.0, 1e-12);
    }
}

TEST(CoinedGraph, PartnersPairEdges) {
  CoinedGraphWalk w({{1, 1, 2}, {0, 0}, {0}});
  for (size_t s = 0; s < w.num_states(); ++s) EXPECT_EQ(w.partner(w.partner(s)), s);
  EXPECT_EQ(w.partner(w.state(0, 0)), w.state(1, 0));
  EXPECT_EQ(w.partner(w.state(0, 1)), w.state(1, 1));
  EXPECT_EQ(w.partner(w.state(0, 2)), w.state(2, 0));
}

TEST(Torus, NormPreservedOverManySteps) {
  CoinedGraphWalk w = torus_walk(5);
  w.set_marked(7);
  std::vector<cplx> a = w.uniform_state();
  for (int s = 0; s < 1000; ++s) w.step(a);
  double norm = 0;
  for (auto x : a) norm += std::norm(x);
  EXPECT_NEAR(norm, 1.0, 1e-9);
}

TEST(Torus, UnmarkedUniformIsStationary) {
  const CoinedGraphWalk w = torus_walk(6);
  std::vector<cplx> a = w.uniform_state();
  const std::vector<cplx> a0 = a;
  for (int s = 0; s < 10; ++s) w.step(a);
  for (size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(std::abs(a[i] - a0[i]), 0.0, 1e-12);
}

TEST(Torus, TranslationSymmetry) {
  const int n = 6;
  CoinedGraphWalk w0 = torus_walk(n), w1 = torus_walk(n);
  w0.set_marked(0);
  const int dx = 2, dy = 3;
  w1.set_marked(dx + n * dy);
  std::vector<cplx> a0 = w0.uniform_state(), a1 = w1.uniform_state();
  for (int s = 0; s < 17; ++s) {
    w0.step(a0);
    w1.step(a1);
  }
  const auto p0 = w0.vertex_probabilities(a0), p1 = w1.vertex_probabilities(a1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      EXPECT_NEAR(p0[x + n * y], p1[(x + dx) % n + n * ((y + dy) % n)], 1e-12);
}

TEST(GridSearch, AmplifiesMarkedVertex) {
  Rng rng(5);
  double prev = 0;
  for (int n : {4, 6, 8}) {
    const auto r = grid_walk_search(n, std::make_pair(1, 2), grid_step_budget(n), rng);
    EXPECT_GT(r.factor, prev);
    EXPECT_GT(r.factor, 5.0);
    EXPECT_NEAR(r.peak, r.vertex_prob[1 + n * 2], 1e-15);
    EXPECT_EQ(r.cost.queries, grid_step_budget(n));
    prev = r.factor;
  }
}

TEST(GridSearch, StepBudget) {
  EXPECT_EQ(grid_step_budget(4), 64);
  EXPECT_EQ(grid_step_budget(8), 192);
}

TEST(GridSearch, RejectsBadInput) {
  Rng rng(1);
  EXPECT_THROW(grid_walk_search(1, std::nullopt, 10, rng), ValidationError);
  EXPECT_THROW(grid_walk_search(4, std::make_pair(4, 0), 10, rng), ValidationError);
}

}  // namespace
}  // namespace qlab
