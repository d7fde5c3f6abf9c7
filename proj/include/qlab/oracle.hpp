// Copyright 2026 The qlab Authors
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qlab/common.hpp"
#include "qlab/state.hpp"

namespace qlab {

class QueryLedger {
 public:
  void charge(const std::string& label, int64_t k = 1);
  int64_t total() const { return total_; }
  const std::map<std::string, int64_t>& by_label() const { return by_label_; }
  void reset();

 private:
  int64_t total_ = 0;
  std::map<std::string, int64_t> by_label_;
};

// A queried function f : [0, n) -> {0, 1}. query() charges the ledger once;
// peek() is the simulator's uncharged view used by analytic backends and
// test oracles.
class BooleanOracle {
 public:
  using Fn = std::function<bool(uint64_t)>;

  BooleanOracle(uint64_t n, Fn f, std::string label = "query");

  static BooleanOracle from_bits(const std::vector<uint8_t>& bits);
  // A file of '0'/'1' characters; whitespace ignored.
  static BooleanOracle from_file(const std::string& path);
  // "single-marked:k", "marked:a,b,c", "none", "all", "random:p:seed".
  static BooleanOracle from_generator(const std::string& spec, uint64_t n);

  uint64_t size() const { return n_; }
  bool query(uint64_t i);
  bool query(uint64_t i, const std::string& label);
  bool peek(uint64_t i) const;
  // Count one superposed application against the ledger.
  void charge_superposed(int64_t k = 1);

  const std::string& label() const { return label_; }
  QueryLedger& ledger() { return *ledger_; }
  const QueryLedger& ledger() const { return *ledger_; }
  std::shared_ptr<QueryLedger> shared_ledger() const { return ledger_; }
  void share_ledger(std::shared_ptr<QueryLedger> l) { ledger_ = std::move(l); }

  std::vector<uint64_t> marked() const;

 private:
  uint64_t n_;
  Fn f_;
  std::string label_;
  std::shared_ptr<QueryLedger> ledger_;
};

// Q|i> = (-1)^{f(i)}|i> on a register of dim >= n; indices >= n are left
// unchanged. Building the matrix reads f out of band and is not charged.
DenseUnitary phase_oracle(const BooleanOracle& f, size_t dim);
// Applies the phase oracle to the whole register and charges one query.
void apply_phase_oracle(StateVector& s, BooleanOracle& f);
// Q|i>|b> = |i>|b xor f(i)>, target is the last qubit.
DenseUnitary xor_oracle(const BooleanOracle& f, size_t index_dim);

enum class Sidedness { one_sided, two_sided };

class NoisyOracle {
 public:
  NoisyOracle(BooleanOracle& inner, double eps, Sidedness side, uint64_t seed);

  // One-sided: 0 stays 0, a true 1 is reported with probability eps.
  // Two-sided: the answer is flipped with probability eps.
  bool query(uint64_t i);
  // One-sided: OR of reps answers. Two-sided: majority. Charges reps.
  bool majority_boost(uint64_t i, int reps);

  BooleanOracle& inner() { return inner_; }
  double eps() const { return eps_; }
  Sidedness sidedness() const { return side_; }

 private:
  BooleanOracle& inner_;
  double eps_;
  Sidedness side_;
  Rng rng_;
};

}  // namespace qlab
