// Copyright 2026 The qlab Authors
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qlab/common.hpp"

namespace qlab {

struct MnrsCosts {
  double S = 0.0;  // sampling
  double U = 0.0;  // update
  double C = 0.0;  // checking
  double eps = 1.0;
  double delta = 1.0;
};

enum class MnrsRegime { classical, quantum };
MnrsRegime parse_mnrs_regime(const std::string& name);

// Unit-constant cost of solution 1 (sampling), 2 (Markov chain) or
// 3 (greedy Markov chain) in either regime.
double mnrs_cost(const MnrsCosts& c, int solution, MnrsRegime regime);

// Element distinctness parameters on J(n, r): S = r, U = 1, C = 0,
// eps = r^2/n^2, delta = n/(r(n-r)).
MnrsCosts distinctness_costs(double n, double r);

// Uniform-neighbor transition matrix of J(n, r) over the C(n, r) subsets
// in lexicographic order.
Eigen::MatrixXd johnson_transition_matrix(int n, int r);
// 1 - (second largest eigenvalue) of the transition matrix.
double johnson_spectral_gap(int n, int r);

struct JohnsonWalkResult {
  std::optional<std::pair<int, int>> pair;  // i < j with x_i == x_j
  int64_t moves = 0;
  int64_t move_budget = 0;
  double eps = 0.0;    // r(r-1)/(n(n-1))
  double delta = 0.0;  // n/(r(n-r))
  std::optional<double> numeric_delta;  // eigenvalue check for n <= 12
  CostReport cost;
};

// Step 0 samples an r-subset and queries it; each move swaps one element for
// a fresh one and queries only the newcomer. Stops at the first duplicate or
// after 20 (1/eps)(1/delta) moves.
JohnsonWalkResult johnson_walk_distinctness(const std::vector<int64_t>& x, int r, Rng& rng);

// Fraction of uniformly sampled r-subsets that contain a duplicate.
double johnson_marked_rate(const std::vector<int64_t>& x, int r, int samples, Rng& rng);

}  // namespace qlab
