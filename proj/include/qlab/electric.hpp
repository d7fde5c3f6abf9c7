// Copyright 2026 The qlab Authors
#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "qlab/common.hpp"

namespace qlab {

// Undirected network on vertices 0..n-1. Edge weights are the walk's
// conductances: a step from u uses edge (u, v) with probability w / sum_x w.
struct ElectricNetwork {
  int n = 0;
  std::vector<std::tuple<int, int, double>> edges;
  std::vector<double> sigma;  // empty means the stationary distribution
  std::vector<int> marked;
};

// "u v [w]" lines, '#' comments, optional "n <count>" header.
ElectricNetwork parse_network(const std::string& text);

std::vector<double> stationary_distribution(const ElectricNetwork& net);

struct HittingResistance {
  double hitting = 0.0;     // H: expected steps from sigma to the marked set
  double resistance = 0.0;  // R: energy of the unit electric flow sigma -> M
  double total_weight = 0.0;
  double two_wr = 0.0;
  double relative_gap = 0.0;  // |H - 2WR| / H, 0 when both vanish
};

// H from the absorbing-walk system (I - P) h = 1 on unmarked vertices; R from
// the grounded Laplacian with sigma injected. Both solves are checked to a
// relative residual of 1e-10.
HittingResistance hitting_resistance_check(const ElectricNetwork& net);

}  // namespace qlab
