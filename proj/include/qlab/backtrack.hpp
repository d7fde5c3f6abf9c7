// Copyright 2026 The qlab Authors
#pragma once

#include <string>
#include <vector>

#include "qlab/state.hpp"

namespace qlab {

// Rooted tree with root 0; parent[0] == -1.
struct BacktrackTree {
  std::vector<int> parent;
  std::vector<char> marked;
};

// "p c" edge lines (parent then child) and "m v" lines marking v.
BacktrackTree parse_backtrack_tree(const std::string& text);
// Random recursive tree; with probability p_marked a random non-empty set of
// leaves is marked.
BacktrackTree random_backtrack_tree(int nodes, double p_marked, Rng& rng);

struct BacktrackOptions {
  int precision_bits = 0;  // 0 selects ceil(log2(C sqrt T)) + 2
  double C = 4.0;
  double C1 = 4.0;
};

// Walk operator R_B R_A on the root state plus one state per edge (indexed
// by the child). For unmarked x, D_x = I - 2|psi_x><psi_x| with psi_x uniform
// over the edge to x and its child edges; the root uses
// psi_r ~ |r>/sqrt(C1 R) + sum over child edges, R the depth. D_x = I when x
// is marked. Row-major, dimension T.
std::vector<cplx> backtracking_walk_matrix(const BacktrackTree& tree, double C1);

struct BacktrackResult {
  bool exists = false;
  uint64_t estimate = 0;  // phase estimate numerator over 2^bits
  int bits = 0;
  double p_zero = 0.0;  // exact probability of the zero estimate
  CostReport cost;
};

// Phase estimation of R_B R_A on the root state. A marked vertex makes the
// root state overlap an eigenvalue-1 eigenvector, so "exists" is reported
// when the estimate is 0.
BacktrackResult backtracking_detect(const BacktrackTree& tree, Rng& rng,
                                    const BacktrackOptions& opt = {});

}  // namespace qlab
