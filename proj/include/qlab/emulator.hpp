// Copyright 2026 The qlab Authors
#pragma once

#include <functional>
#include <optional>
#include <string>

#include "qlab/grover.hpp"
#include "qlab/oracle.hpp"

namespace qlab {

enum class BackendKind { statevector, analytic, analytic_ideal };

BackendKind parse_backend(const std::string& name);
std::string backend_name(BackendKind k);

inline constexpr uint64_t kStatevectorMaxSpace = uint64_t{1} << 20;

// Search subroutine provider shared by the application kits.
struct Backend {
  BackendKind kind = BackendKind::analytic;
  Rng rng;
  // Repetitions of a noisy inner evaluation inside a nested search.
  int nested_reps = 3;

  explicit Backend(BackendKind k = BackendKind::analytic, uint64_t seed = 1)
      : kind(k), rng(seed) {}
};

enum class SearchMode { known_t, unknown_t };

// A search predicate over absolute indices. `exact` is the classical truth,
// read out of band by analytic backends and never charged. `evaluate` is the
// charged evaluation used to verify a measured index; for nested predicates
// it runs the inner algorithm and may err. `unit_cost` is the query cost of
// one superposed application of the predicate.
struct Predicate {
  std::function<bool(uint64_t)> exact;
  std::function<bool(uint64_t, CostReport&)> evaluate;
  int64_t unit_cost = 1;
  // For nested predicates whose inner run cannot report a false positive:
  // verifying an index that `exact` rejects charges this budget instead of
  // running the inner algorithm.
  std::optional<int64_t> reject_cost;
};

// Charged evaluation honouring reject_cost.
bool evaluate_predicate(const Predicate& p, uint64_t i, CostReport& cost);

// A plain oracle-backed predicate charging one query per evaluation.
Predicate oracle_predicate(BooleanOracle& f);
// A classical-data predicate: evaluation costs unit_cost queries and is exact.
Predicate simple_predicate(std::function<bool(uint64_t)> f, int64_t unit_cost = 1);

// Grover search over [l, r] on the chosen backend. Returns a verified
// marked index or none. schedule_n, when given, sizes the unknown-t stage
// schedule in place of r - l + 1 (a known lower bound t/n >= 1/schedule_n
// on the marked fraction caps the iterations).
SearchResult emulated_search(const Predicate& p, uint64_t l, uint64_t r,
                             SearchMode mode, Backend& backend,
                             const std::string& label = "search",
                             std::optional<uint64_t> schedule_n = std::nullopt);
SearchResult emulated_search(BooleanOracle& f, uint64_t l, uint64_t r,
                             SearchMode mode, Backend& backend);
// One Grover run of exactly `iters` iterations on [l, r], then a verified
// measurement. For searches whose marked count is promised rather than known.
SearchResult fixed_iteration_search(const Predicate& p, uint64_t l, uint64_t r, int64_t iters,
                                    Backend& backend, const std::string& label = "search");

struct EquivalenceReport {
  int64_t trials = 0;
  double statevector_rate = 0.0;
  double analytic_rate = 0.0;
  double sigma = 0.0;
  bool within_3sigma = false;
};

EquivalenceReport backend_equivalence_check(BooleanOracle& f, SearchMode mode,
                                            int64_t trials, uint64_t seed);

}  // namespace qlab
