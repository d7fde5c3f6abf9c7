// Copyright 2026 The qlab Authors
#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <vector>

#include "qlab/emulator.hpp"

namespace qlab {

// Ordered lexicographically on (value, index).
struct RankedValue {
  int64_t value = 0;
  int64_t index = 0;
  auto operator<=>(const RankedValue&) const = default;
};

struct MinSearchOptions {
  // Each improvement search is retried up to this many times before the
  // current candidate is accepted as the minimum.
  int inner_reps = 3;
  // Cost of one evaluation of the key, in queries.
  int64_t unit_cost = 1;
  // Record |{z : key(z) < key(j)}| of every visited candidate (privileged).
  bool track_ranks = false;
};

struct MinSearchResult {
  uint64_t index = 0;
  CostReport cost;
  std::vector<uint64_t> visited_ranks;
};

// Durr-Hoyer minimum finding over [0, n): start from a uniform index and
// repeatedly search for a strictly smaller key.
MinSearchResult minimum_search(uint64_t n, const std::function<RankedValue(uint64_t)>& key,
                               Backend& backend, const MinSearchOptions& opt = {});
MinSearchResult minimum_search(const std::vector<int64_t>& a, Backend& backend,
                               const MinSearchOptions& opt = {});
MinSearchResult maximum_search(const std::vector<int64_t>& a, Backend& backend,
                               const MinSearchOptions& opt = {});
// Runs minimum_search k times and keeps the best answer.
MinSearchResult minimum_search_boosted(const std::vector<int64_t>& a, int k, Backend& backend,
                                       const MinSearchOptions& opt = {});

enum class FirstOneVariant { via_minimum, binary };

FirstOneVariant parse_first_one_variant(const std::string& name);

struct IndexResult {
  std::optional<uint64_t> index;
  CostReport cost;
};

// Smallest x in [l, r] with p(x) = 1. The binary variant repeats the
// search at binary-search step i 2i times.
IndexResult first_one_search(const Predicate& p, uint64_t l, uint64_t r, FirstOneVariant variant,
                             Backend& backend);
IndexResult first_one_search(BooleanOracle& f, uint64_t l, uint64_t r, FirstOneVariant variant,
                             Backend& backend);

// First one in [l, r] with cost O(sqrt(x - l + 1)): existence searches on
// [l, l + 2^z - 1] for z = 1, 2, ... (repeated on the final border), then a
// binary first-one search inside the first border that reports a one.
IndexResult bounded_first_one(const Predicate& p, uint64_t l, uint64_t r, Backend& backend);
IndexResult bounded_first_one(BooleanOracle& f, Backend& backend);

// Worst-case charge of bounded_first_one over n indices when one superposed
// application costs `unit` and one verification costs `eval`.
int64_t bounded_first_one_budget(uint64_t n, int64_t unit, int64_t eval);
// Worst-case charge of one unknown-t search (all stages fail).
int64_t staged_search_budget(uint64_t n, int64_t unit, int64_t eval);

// Largest x in [l, r] with p(x) = 1, by bounded search from the right end.
IndexResult bounded_last_one(const Predicate& p, uint64_t l, uint64_t r, Backend& backend);

struct AllOnesResult {
  std::vector<uint64_t> indices;
  CostReport cost;
};

AllOnesResult all_ones(const Predicate& p, uint64_t l, uint64_t r, Backend& backend);
AllOnesResult all_ones(BooleanOracle& f, uint64_t l, uint64_t r, Backend& backend);

// Unknown-t search over [l, r] repeated up to reps times; stops at the first
// success.
SearchResult repeated_search(const Predicate& p, uint64_t l, uint64_t r, int reps,
                             Backend& backend, const std::string& label = "search");

}  // namespace qlab
