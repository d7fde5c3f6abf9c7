// Copyright 2026 The qlab Authors
#pragma once

#include "qlab/strings.hpp"
#include "qlab/walks.hpp"

namespace qlab {

// Balanced binary NAND formula over n = |x| leaves (n a power of two),
// x_1 NAND x_2 at the lowest level.
bool nand_classical(const BitString& x);

// Tree plus a tail w_1..w_L, L = 2 ceil(sqrt n), hanging off the root.
// Leaves with x_j = 1 are marked. Vertices: tail 0..L-1 (w_1 first), then
// tree nodes in heap order with the root first.
struct NandWalk {
  int n = 0;
  int tail = 0;
  CoinedGraphWalk walk;
  std::vector<char> marked_state;  // states at marked leaves

  size_t start_state() const;  // |w_L, toward w_{L-1}>
};

NandWalk make_nand_walk(const BitString& x);

// Probability that a measurement after `steps` steps lands on a marked leaf.
double nand_one_probability(const BitString& x, int64_t steps);

struct NandResult {
  bool value = false;  // majority of the runs
  int ones = 0;
  int runs = 0;
  int64_t steps = 0;
  double p_one = 0.0;  // per-run probability of reading 1
  CostReport cost;
};

// Each run walks `steps` steps from the tail end and reports 1 iff it is
// measured on a marked leaf. steps <= 0 selects the pinned step count.
NandResult nand_evaluate(const BitString& x, Rng& rng, int runs = 25, int64_t steps = 0);

// Pinned step counts for n = 2, 4, ..., 64.
int64_t nand_pinned_steps(int n);

struct NandCalibration {
  int64_t steps = 0;
  double accuracy = 0.0;  // mean exact majority-correct probability
};

// Sweeps T in [ceil(sqrt n), floor(10 sqrt n)] over a held-out set of random
// inputs and returns the T with the best majority-of-`runs` accuracy.
NandCalibration nand_calibrate(int n, int held_out, uint64_t seed, int runs = 25);

}  // namespace qlab
