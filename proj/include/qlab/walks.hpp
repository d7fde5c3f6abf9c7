// Copyright 2026 The qlab Authors
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qlab/state.hpp"

namespace qlab {

using Rational = boost::multiprecision::cpp_rational;

// Distribution over consecutive integer positions starting at `first`.
template <typename T>
struct PositionDistribution {
  int64_t first = 0;
  std::vector<T> prob;

  T at(int64_t position) const {
    const int64_t i = position - first;
    return i < 0 || i >= static_cast<int64_t>(prob.size()) ? T(0) : prob[i];
  }
};

// Walk on the integer line from 0: right with q_right, left otherwise.
// Positions -steps..steps.
PositionDistribution<double> random_walk_line(int steps, double q_right);
PositionDistribution<Rational> random_walk_line_exact(int steps, const Rational& q_right);

// Symmetric walk on the cycle 0..size-1 from vertex 0.
std::vector<double> random_walk_circle(int size, int steps);
std::vector<Rational> random_walk_circle_exact(int size, int steps);

struct LineWalkStart {
  int64_t position = 0;
  int direction = 0;  // 0 left, 1 right
};

// Coined walk on the line: C on the direction, then S moves |i,0> to
// |i-1,0> and |i,1> to |i+1,1>. Amplitudes are indexed 2*(i - first) + d.
PositionDistribution<cplx> coined_walk_1d_amplitudes(int steps, const Gate1Q& coin,
                                                      LineWalkStart start = {});
PositionDistribution<double> coined_walk_1d(int steps, const Gate1Q& coin,
                                            LineWalkStart start = {});

// Coined walk on an undirected graph with one state per (vertex, port).
// A step is Q (negate states of marked vertices), the Grover coin D_deg at
// each vertex, then S swapping the two states of every edge.
class CoinedGraphWalk {
 public:
  // adj[v] lists neighbors; port p of v points to adj[v][p]. Parallel edges
  // are paired in order of appearance.
  explicit CoinedGraphWalk(const std::vector<std::vector<int>>& adj);

  size_t num_vertices() const { return offset_.size() - 1; }
  size_t num_states() const { return partner_.size(); }
  size_t state(int v, int port) const { return offset_[v] + port; }
  int degree(int v) const { return static_cast<int>(offset_[v + 1] - offset_[v]); }
  size_t partner(size_t s) const { return partner_[s]; }

  void set_marked(int v, bool marked = true) { marked_[v] = marked; }
  bool marked(int v) const { return marked_[v]; }

  void step(std::vector<cplx>& amps) const;
  std::vector<cplx> uniform_state() const;
  std::vector<double> vertex_probabilities(const std::vector<cplx>& amps) const;

 private:
  std::vector<size_t> offset_;
  std::vector<size_t> partner_;
  std::vector<char> marked_;
  mutable std::vector<cplx> scratch_;
};

// n x n torus, vertex x + n*y. Ports in order up (y+1), down (y-1),
// right (x+1), left (x-1).
CoinedGraphWalk torus_walk(int n);

struct GridSearchResult {
  std::vector<double> vertex_prob;  // at best_step, index x + n*y
  int64_t best_step = 0;
  double peak = 0.0;    // probability on the marked vertex at best_step
  double factor = 0.0;  // peak * n^2
  std::pair<int, int> sampled{0, 0};
  CostReport cost;
};

// Runs 1..steps steps from the uniform edge state and reports the step
// where the marked vertex is most likely, with one sample drawn there.
// Without a marked vertex the report is taken at the last step.
GridSearchResult grid_walk_search(int n, std::optional<std::pair<int, int>> marked,
                                  int64_t steps, Rng& rng);
int64_t grid_step_budget(int n);  // ceil(8 n log2 n)

}  // namespace qlab
