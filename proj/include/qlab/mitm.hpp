// Copyright 2026 The qlab Authors
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlab/search.hpp"

namespace qlab {

enum class SubsetSumVariant { brute, grover, mitm_classical, mitm_quantum };
enum class SetKind { ordered, hashed };

SubsetSumVariant parse_subset_sum_variant(const std::string& name);
SetKind parse_set_kind(const std::string& name);

struct SubsetSumInstance {
  std::vector<int64_t> a;
  int64_t k = 0;
};

struct SubsetSumResult {
  std::optional<std::vector<int>> subset;  // ascending indices into a
  CostReport cost;
};

// Reading a_i is one query. The first-part sums of the meet-in-the-middle
// variants are built from t reads; each second-part mask evaluation reads
// the n - t second-part elements.
SubsetSumResult subset_sum(const SubsetSumInstance& inst, SubsetSumVariant variant,
                           Backend& backend, SetKind set = SetKind::ordered);

int subset_sum_split(int n, SubsetSumVariant variant);

enum class CollisionVariant { simple, mitm };

CollisionVariant parse_collision_variant(const std::string& name);

struct CollisionResult {
  bool one_to_one = true;
  CostReport cost;
  std::string label() const { return one_to_one ? "1-to-1" : "2-to-1"; }
};

// Distinguishes all-distinct inputs from inputs where every value occurs
// exactly twice. The mitm variant reads t = ceil(n^(1/3)) elements into a
// set and runs one Grover search with the promised t marked elements over
// the rest. Set operations are not queries.
CollisionResult collision_decide(const std::vector<int64_t>& a, CollisionVariant variant,
                                 Backend& backend, SetKind set = SetKind::ordered);

uint64_t collision_prefix(uint64_t n);

// 1-to-1: distinct values; 2-to-1: indices paired uniformly at random.
std::vector<int64_t> make_collision_instance(uint64_t n, bool two_to_one, Rng& rng);

}  // namespace qlab
