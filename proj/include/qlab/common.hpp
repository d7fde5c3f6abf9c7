// Copyright 2026 The qlab Authors
#pragma once

#include <chrono>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qlab {

using cplx = std::complex<double>;

inline constexpr double kTol = 1e-9;
inline constexpr double kPi = 3.14159265358979323846;

// Bad arguments or inputs violating an operation's precondition.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Request would exceed a memory or size guard.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All stochastic code draws from a 64-bit Mersenne Twister. The helpers
// below avoid the std distributions so that transcripts replay identically
// across standard library implementations.
using Rng = std::mt19937_64;

double uniform01(Rng& rng);
uint64_t uniform_index(Rng& rng, uint64_t n);
bool bernoulli(Rng& rng, double p);
uint64_t derive_seed(uint64_t seed, uint64_t stream);

struct CostReport {
  int64_t queries = 0;
  std::vector<std::pair<std::string, int64_t>> subcalls;
  int64_t wall_ns = 0;
  // Set when a backend learned the marked set by an uncharged scan.
  bool privileged_scan = false;

  void charge(const std::string& label, int64_t q);
  void merge(const CostReport& other);
  int64_t by_label(const std::string& label) const;
};

class WallTimer {
 public:
  WallTimer() : start_(std::chrono::steady_clock::now()) {}
  int64_t elapsed_ns() const {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline bool is_pow2(uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline int ceil_log2(uint64_t n) {
  int k = 0;
  while ((uint64_t{1} << k) < n) ++k;
  return k;
}

}  // namespace qlab
