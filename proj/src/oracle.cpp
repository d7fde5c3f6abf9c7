// Copyright 2026 The qlab Authors
#include "qlab/oracle.hpp"

#include <fstream>
#include <sstream>

namespace qlab {

void QueryLedger::charge(const std::string& label, int64_t k) {
  total_ += k;
  by_label_[label] += k;
}

void QueryLedger::reset() {
  total_ = 0;
  by_label_.clear();
}

BooleanOracle::BooleanOracle(uint64_t n, Fn f, std::string label)
    : n_(n),
      f_(std::move(f)),
      label_(std::move(label)),
      ledger_(std::make_shared<QueryLedger>()) {}

BooleanOracle BooleanOracle::from_bits(const std::vector<uint8_t>& bits) {
  auto data = std::make_shared<std::vector<uint8_t>>(bits);
  return BooleanOracle(bits.size(), [data](uint64_t i) { return (*data)[i] != 0; });
}

BooleanOracle BooleanOracle::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open oracle file " + path);
  std::vector<uint8_t> bits;
  char c;
  while (in.get(c)) {
    if (c == '0' || c == '1') {
      bits.push_back(c == '1');
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw ValidationError(std::string("oracle file has a non 0/1 symbol '") + c + "'");
    }
  }
  if (bits.empty()) throw ValidationError("oracle file is empty");
  return from_bits(bits);
}

BooleanOracle BooleanOracle::from_generator(const std::string& spec, uint64_t n) {
  if (n == 0) throw ValidationError("oracle domain must be non-empty");
  std::vector<uint8_t> bits(n, 0);
  auto parse_index = [n](const std::string& s) {
    uint64_t k;
    try {
      k = std::stoull(s);
    } catch (const std::exception&) {
      throw ValidationError("bad index '" + s + "' in oracle generator");
    }
    if (k >= n) throw ValidationError("marked index " + s + " out of range");
    return k;
  };
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "none") {
  } else if (kind == "all") {
    std::fill(bits.begin(), bits.end(), 1);
  } else if (kind == "single-marked") {
    bits[parse_index(arg)] = 1;
  } else if (kind == "marked") {
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) bits[parse_index(item)] = 1;
  } else if (kind == "random") {
    const auto c2 = arg.find(':');
    if (c2 == std::string::npos)
      throw ValidationError("random generator needs random:p:seed");
    const double p = std::stod(arg.substr(0, c2));
    Rng rng(std::stoull(arg.substr(c2 + 1)));
    for (auto& b : bits) b = bernoulli(rng, p);
  } else {
    throw ValidationError("unknown oracle generator '" + kind + "'");
  }
  return from_bits(bits);
}

bool BooleanOracle::query(uint64_t i) { return query(i, label_); }

bool BooleanOracle::query(uint64_t i, const std::string& label) {
  if (i >= n_) throw ValidationError("oracle index out of range");
  ledger_->charge(label, 1);
  return f_(i);
}

bool BooleanOracle::peek(uint64_t i) const {
  if (i >= n_) throw ValidationError("oracle index out of range");
  return f_(i);
}

void BooleanOracle::charge_superposed(int64_t k) { ledger_->charge(label_, k); }

std::vector<uint64_t> BooleanOracle::marked() const {
  std::vector<uint64_t> out;
  for (uint64_t i = 0; i < n_; ++i)
    if (f_(i)) out.push_back(i);
  return out;
}

DenseUnitary phase_oracle(const BooleanOracle& f, size_t dim) {
  if (dim < f.size()) throw ValidationError("register smaller than oracle domain");
  DenseUnitary u = DenseUnitary::identity(dim);
  for (uint64_t i = 0; i < f.size(); ++i)
    if (f.peek(i)) u.at(i, i) = -1.0;
  return u;
}

void apply_phase_oracle(StateVector& s, BooleanOracle& f) {
  if (s.size() < f.size()) throw ValidationError("register smaller than oracle domain");
  auto& a = s.mutable_amps();
  for (uint64_t i = 0; i < f.size(); ++i)
    if (f.peek(i)) a[i] = -a[i];
  f.charge_superposed(1);
}

DenseUnitary xor_oracle(const BooleanOracle& f, size_t index_dim) {
  if (index_dim < f.size()) throw ValidationError("register smaller than oracle domain");
  const size_t dim = 2 * index_dim;
  std::vector<cplx> m(dim * dim, 0.0);
  for (uint64_t i = 0; i < index_dim; ++i) {
    const bool fi = i < f.size() && f.peek(i);
    for (uint64_t b = 0; b < 2; ++b) {
      const uint64_t row = 2 * i + (b ^ (fi ? 1 : 0));
      m[row * dim + 2 * i + b] = 1.0;
    }
  }
  return DenseUnitary(dim, std::move(m), false);
}

NoisyOracle::NoisyOracle(BooleanOracle& inner, double eps, Sidedness side,
                         uint64_t seed)
    : inner_(inner), eps_(eps), side_(side), rng_(seed) {
  if (!(eps > 0.0 && eps < 1.0) && !(side == Sidedness::one_sided && eps == 1.0))
    throw ValidationError("noise eps must lie in (0, 1)");
}

bool NoisyOracle::query(uint64_t i) {
  const bool f = inner_.query(i);
  if (side_ == Sidedness::one_sided) return f && bernoulli(rng_, eps_);
  return bernoulli(rng_, eps_) ? !f : f;
}

bool NoisyOracle::majority_boost(uint64_t i, int reps) {
  if (reps < 1) throw ValidationError("reps must be at least 1");
  int ones = 0;
  for (int r = 0; r < reps; ++r) ones += query(i) ? 1 : 0;
  if (side_ == Sidedness::one_sided) return ones > 0;
  return 2 * ones > reps;
}

}  // namespace qlab
