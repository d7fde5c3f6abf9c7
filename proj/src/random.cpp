// Copyright 2026 The qlab Authors
#include "qlab/common.hpp"

namespace qlab {

double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

uint64_t uniform_index(Rng& rng, uint64_t n) {
  if (n == 0) throw ValidationError("uniform_index: empty range");
  if (is_pow2(n)) return rng() & (n - 1);
  const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

bool bernoulli(Rng& rng, double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  return uniform01(rng) < p;
}

// splitmix64 finalizer over (seed, stream).
uint64_t derive_seed(uint64_t seed, uint64_t stream) {
  uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void CostReport::charge(const std::string& label, int64_t q) {
  queries += q;
  for (auto& [name, count] : subcalls) {
    if (name == label) {
      count += q;
      return;
    }
  }
  subcalls.emplace_back(label, q);
}

void CostReport::merge(const CostReport& other) {
  for (const auto& [label, q] : other.subcalls) charge(label, q);
  // Reports built without labels still carry their total.
  int64_t labelled = 0;
  for (const auto& sc : other.subcalls) labelled += sc.second;
  if (other.queries != labelled) charge("unlabelled", other.queries - labelled);
  privileged_scan = privileged_scan || other.privileged_scan;
  wall_ns += other.wall_ns;
}

int64_t CostReport::by_label(const std::string& label) const {
  for (const auto& [name, count] : subcalls)
    if (name == label) return count;
  return 0;
}

}  // namespace qlab
