// Copyright 2026 The qlab Authors
#include "qlab/walks.hpp"

#include <cmath>
#include <random>

namespace qlab {

namespace {

template <typename T>
PositionDistribution<T> line_walk(int steps, const T& q_right) {
  if (steps < 0) throw ValidationError("steps must be non-negative");
  if (q_right < T(0) || q_right > T(1)) throw ValidationError("q_right must lie in [0, 1]");
  if (steps > 100000) throw ResourceError("too many steps");
  PositionDistribution<T> d;
  d.first = -steps;
  d.prob.assign(2 * static_cast<size_t>(steps) + 1, T(0));
  d.prob[steps] = T(1);
  const T q_left = T(1) - q_right;
  std::vector<T> next(d.prob.size());
  for (int s = 0; s < steps; ++s) {
    std::fill(next.begin(), next.end(), T(0));
    for (size_t i = 0; i < d.prob.size(); ++i) {
      if (d.prob[i] == T(0)) continue;
      if (i > 0) next[i - 1] += d.prob[i] * q_left;
      if (i + 1 < next.size()) next[i + 1] += d.prob[i] * q_right;
    }
    std::swap(d.prob, next);
  }
  return d;
}

template <typename T>
std::vector<T> circle_walk(int size, int steps) {
  if (size < 3) throw ValidationError("circle size must be at least 3");
  if (steps < 0) throw ValidationError("steps must be non-negative");
  std::vector<T> p(size, T(0)), next(size);
  p[0] = T(1);
  const T half = T(1) / T(2);
  for (int s = 0; s < steps; ++s) {
    for (int i = 0; i < size; ++i) next[i] = half * (p[(i + size - 1) % size] + p[(i + 1) % size]);
    std::swap(p, next);
  }
  return p;
}

}  // namespace

PositionDistribution<double> random_walk_line(int steps, double q_right) {
  return line_walk<double>(steps, q_right);
}

PositionDistribution<Rational> random_walk_line_exact(int steps, const Rational& q_right) {
  return line_walk<Rational>(steps, q_right);
}

std::vector<double> random_walk_circle(int size, int steps) {
  return circle_walk<double>(size, steps);
}

std::vector<Rational> random_walk_circle_exact(int size, int steps) {
  if (steps > 5000) throw ResourceError("exact circle walk limited to 5000 steps");
  return circle_walk<Rational>(size, steps);
}

PositionDistribution<cplx> coined_walk_1d_amplitudes(int steps, const Gate1Q& coin,
                                                      LineWalkStart start) {
  if (steps < 0) throw ValidationError("steps must be non-negative");
  if (start.direction != 0 && start.direction != 1)
    throw ValidationError("direction must be 0 or 1");
  if (steps > 1000000) throw ResourceError("too many steps");
  PositionDistribution<cplx> d;
  d.first = start.position - steps;
  const size_t width = 2 * static_cast<size_t>(steps) + 1;
  d.prob.assign(2 * width, 0.0);
  d.prob[2 * static_cast<size_t>(steps) + start.direction] = 1.0;
  std::vector<cplx> next(d.prob.size());
  for (int s = 0; s < steps; ++s) {
    std::fill(next.begin(), next.end(), cplx(0.0));
    for (size_t i = 0; i < width; ++i) {
      const cplx a0 = d.prob[2 * i], a1 = d.prob[2 * i + 1];
      if (a0 == 0.0 && a1 == 0.0) continue;
      const cplx l = coin(0, 0) * a0 + coin(0, 1) * a1;
      const cplx r = coin(1, 0) * a0 + coin(1, 1) * a1;
      // The support never reaches the edges within `steps` steps.
      next[2 * (i - 1)] += l;
      next[2 * (i + 1) + 1] += r;
    }
    std::swap(d.prob, next);
  }
  return d;
}

PositionDistribution<double> coined_walk_1d(int steps, const Gate1Q& coin, LineWalkStart start) {
  const auto amps = coined_walk_1d_amplitudes(steps, coin, start);
  PositionDistribution<double> d;
  d.first = amps.first;
  d.prob.resize(amps.prob.size() / 2);
  for (size_t i = 0; i < d.prob.size(); ++i)
    d.prob[i] = std::norm(amps.prob[2 * i]) + std::norm(amps.prob[2 * i + 1]);
  return d;
}

CoinedGraphWalk::CoinedGraphWalk(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 0) throw ValidationError("walk graph needs a vertex");
  offset_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) offset_[v + 1] = offset_[v] + adj[v].size();
  partner_.assign(offset_[n], 0);
  marked_.assign(n, 0);
  // k-th port from v to u pairs with the k-th port from u to v.
  for (int v = 0; v < n; ++v) {
    for (size_t p = 0; p < adj[v].size(); ++p) {
      const int u = adj[v][p];
      if (u < 0 || u >= n || u == v) throw ValidationError("invalid walk edge");
      int k = 0;
      for (size_t p2 = 0; p2 < p; ++p2) k += adj[v][p2] == u;
      int seen = 0;
      bool found = false;
      for (size_t q = 0; q < adj[u].size(); ++q) {
        if (adj[u][q] != v) continue;
        if (seen++ == k) {
          partner_[offset_[v] + p] = offset_[u] + q;
          found = true;
          break;
        }
      }
      if (!found) throw ValidationError("walk adjacency is not symmetric");
    }
  }
}

void CoinedGraphWalk::step(std::vector<cplx>& amps) const {
  if (amps.size() != num_states()) throw ValidationError("state size mismatch");
  const size_t nv = num_vertices();
  scratch_.resize(amps.size());
  for (size_t v = 0; v < nv; ++v) {
    const size_t b = offset_[v], e = offset_[v + 1];
    if (b == e) continue;
    const double sign = marked_[v] ? -1.0 : 1.0;
    cplx sum = 0.0;
    for (size_t s = b; s < e; ++s) sum += amps[s];
    const cplx mean2 = sign * 2.0 * sum / static_cast<double>(e - b);
    for (size_t s = b; s < e; ++s) scratch_[partner_[s]] = mean2 - sign * amps[s];
  }
  amps.swap(scratch_);
}

std::vector<cplx> CoinedGraphWalk::uniform_state() const {
  return std::vector<cplx>(num_states(), 1.0 / std::sqrt(static_cast<double>(num_states())));
}

std::vector<double> CoinedGraphWalk::vertex_probabilities(const std::vector<cplx>& amps) const {
  std::vector<double> p(num_vertices(), 0.0);
  for (size_t v = 0; v < num_vertices(); ++v)
    for (size_t s = offset_[v]; s < offset_[v + 1]; ++s) p[v] += std::norm(amps[s]);
  return p;
}

CoinedGraphWalk torus_walk(int n) {
  if (n < 3) throw ValidationError("torus side must be at least 3");
  if (static_cast<int64_t>(n) * n > (int64_t{1} << 22)) throw ResourceError("torus too large");
  std::vector<std::vector<int>> adj(static_cast<size_t>(n) * n);
  auto id = [n](int x, int y) { return ((x + n) % n) + n * ((y + n) % n); };
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x)
      adj[id(x, y)] = {id(x, y + 1), id(x, y - 1), id(x + 1, y), id(x - 1, y)};
  return CoinedGraphWalk(adj);
}

int64_t grid_step_budget(int n) {
  return static_cast<int64_t>(std::ceil(8.0 * n * std::log2(static_cast<double>(n))));
}

GridSearchResult grid_walk_search(int n, std::optional<std::pair<int, int>> marked,
                                  int64_t steps, Rng& rng) {
  if (n < 4) throw ValidationError("torus side must be at least 4");
  if (steps < 1) throw ValidationError("steps must be positive");
  WallTimer timer;
  CoinedGraphWalk walk = torus_walk(n);
  int target = -1;
  if (marked) {
    const auto [x, y] = *marked;
    if (x < 0 || y < 0 || x >= n || y >= n) throw ValidationError("marked vertex off the grid");
    target = x + n * y;
    walk.set_marked(target);
  }
  GridSearchResult res;
  std::vector<cplx> amps = walk.uniform_state();
  std::vector<cplx> best;
  for (int64_t t = 1; t <= steps; ++t) {
    walk.step(amps);
    res.cost.charge("walk.query", 1);
    double p = 0.0;
    if (target >= 0)
      for (int port = 0; port < 4; ++port) p += std::norm(amps[walk.state(target, port)]);
    if (target < 0 ? t == steps : p > res.peak) {
      res.peak = p;
      res.best_step = t;
      best = amps;
    }
  }
  res.vertex_prob = walk.vertex_probabilities(best);
  res.factor = res.peak * n * n;
  std::discrete_distribution<int> pick(res.vertex_prob.begin(), res.vertex_prob.end());
  const int v = pick(rng);
  res.sampled = {static_cast<int>(v % n), static_cast<int>(v / n)};
  res.cost.wall_ns = timer.elapsed_ns();
  return res;
}

}  // namespace qlab
