// Copyright 2026 The qlab Authors
#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qlab/oracle.hpp"
#include "qlab/state.hpp"

namespace qlab {

struct GroverPlan {
  uint64_t n = 0;
  uint64_t t = 0;
  double theta = 0.0;
  int64_t L = 0;

  // theta = arcsin(sqrt(t/n)), L = round(pi/(4 theta) - 1/2) floored at 0.
  static GroverPlan make(uint64_t n, uint64_t t);
};

int64_t iterations_for_angle(double theta);
double analytic_success(uint64_t n, uint64_t t, int64_t L);

// Number of stages of the unknown-t schedule: ceil(log2(pi/4 sqrt(n))) + 1.
int unknown_t_stages(uint64_t n);
// Queries of a full unknown-t run that never succeeds (iterations plus one
// verification per stage).
int64_t unknown_t_full_charge(uint64_t n);

struct SearchResult {
  std::optional<uint64_t> index;
  CostReport cost;
};

// D = 2|Psi><Psi| - I over n live indices, embedded as the leading block of
// the next power of two when n is not one.
DenseUnitary diffusion(uint64_t n);

// Uniform superposition over the first n indices of a ceil(log2 n)-qubit
// register (at least one qubit).
StateVector uniform_live_state(uint64_t n);
// In-place a_i -> 2m - a_i over the first n amplitudes.
void apply_diffusion(StateVector& s, uint64_t n);
// One Grover iterate: phase oracle (one charged query) then diffusion.
void grover_iterate(StateVector& s, BooleanOracle& f);

SearchResult grover_known_t(BooleanOracle& f, uint64_t n, uint64_t t, Rng& rng);
SearchResult grover_unknown_t(BooleanOracle& f, uint64_t n, Rng& rng);

// Repeated independent runs of grover_known_t. The pre-measurement state is
// deterministic, so it is computed once and sampled per trial; every trial
// is charged L + 1 as if run from scratch.
struct TrialStats {
  int64_t trials = 0;
  int64_t successes = 0;
  CostReport cost;
};
TrialStats grover_known_t_trials(BooleanOracle& f, uint64_t n, uint64_t t,
                                 int64_t trials, Rng& rng);

// States after 0..iterations Grover iterates, for amplitude checks.
std::vector<StateVector> grover_trajectory(BooleanOracle& f, uint64_t n,
                                           int64_t iterations);

struct AmplifyResult {
  std::optional<uint64_t> index;
  CostReport cost;
  double p = 0.0;
  int64_t L = 0;
};

// Amplitude amplification of A|0>. When p is omitted it is read off A|0>
// (simulator privilege, flagged in the report).
AmplifyResult amplitude_amplify(const DenseUnitary& A,
                                const std::function<bool(uint64_t)>& good,
                                std::optional<double> p, Rng& rng);

}  // namespace qlab
