// Copyright 2026 The qlab Authors
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qlab/search.hpp"

namespace qlab {

using BitString = std::vector<uint8_t>;

// Parses a string of '0'/'1' characters; whitespace is skipped.
BitString parse_bits(const std::string& text);
std::string format_bits(const BitString& s);

struct StringPredicateResult {
  bool value = false;
  // Index certifying a negative answer (a mismatch), when one was found.
  std::optional<uint64_t> witness;
  CostReport cost;
};

// One query reads the pair (s_i, t_i).
StringPredicateResult strings_equal(const BitString& s, const BitString& t, Backend& backend);
StringPredicateResult palindrome_check(const BitString& s, Backend& backend);

struct LcpResult {
  uint64_t length = 0;
  CostReport cost;
};

// Longest common prefix. With reps > 1 the first-mismatch search is repeated
// and the smallest verified mismatch kept.
LcpResult lcp(const BitString& s, const BitString& t, Backend& backend, int reps = 1);

struct CompareResult {
  int order = 0;  // -1, 0, +1
  CostReport cost;
};

CompareResult compare_lex(const BitString& s, const BitString& t, Backend& backend,
                          int reps = 1);

// Balanced search tree of string indices ordered by a noisy quantum
// comparison. Equal strings are kept in insertion order.
class SortedStringSet {
 public:
  SortedStringSet(const std::vector<BitString>& strings, Backend& backend, int reps);

  void add(uint64_t index);
  // Index of the smallest string, removed from the set.
  uint64_t pop_min();
  std::vector<uint64_t> in_order() const;
  size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  const CostReport& cost() const { return cost_; }
  int64_t comparisons() const { return comparisons_; }
  // Comparisons whose outcome differed from the exact order.
  int64_t comparator_errors() const { return errors_; }
  int height() const;

 private:
  struct Node {
    uint64_t key;
    int left = -1, right = -1, height = 1;
  };

  int compare(uint64_t a, uint64_t b);
  int insert(int node, uint64_t key);
  int remove_min(int node, uint64_t& out);
  int rebalance(int node);
  int rotate_left(int node);
  int rotate_right(int node);
  int h(int node) const { return node < 0 ? 0 : nodes_[node].height; }
  void fix(int node);

  const std::vector<BitString>& strings_;
  Backend& backend_;
  int reps_;
  std::vector<Node> nodes_;
  int root_ = -1;
  size_t size_ = 0;
  CostReport cost_;
  int64_t comparisons_ = 0;
  int64_t errors_ = 0;
};

// Comparator repetitions used by the sorted set: 3 ceil(log2 n), at least 1.
int comparator_reps(uint64_t n);

struct SortResult {
  std::vector<uint64_t> order;
  CostReport cost;
  int64_t comparator_errors = 0;
};

SortResult string_sort(const std::vector<BitString>& strings, Backend& backend,
                       std::optional<int> reps = std::nullopt);

struct MostFrequentResult {
  uint64_t index = 0;
  uint64_t frequency = 0;
  CostReport cost;
};

MostFrequentResult most_frequent(const std::vector<BitString>& strings, Backend& backend,
                                 std::optional<int> reps = std::nullopt);

}  // namespace qlab
