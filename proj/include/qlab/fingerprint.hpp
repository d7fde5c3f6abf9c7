// Copyright 2026 The qlab Authors
#pragma once

#include <string>
#include <vector>

#include "qlab/state.hpp"
#include "qlab/strings.hpp"

namespace qlab {

// sum x_i 2^i with x_0 the first symbol. Strings longer than 64 symbols
// are rejected; use value_mod for those.
uint64_t value_of(const BitString& x);
uint64_t value_mod(const BitString& x, uint64_t q);

bool is_prime(uint64_t x);
// The first `count` primes (cached; extended on demand).
std::vector<uint64_t> first_primes(uint64_t count);
// Smallest prime above 2^bits for bits <= 60, otherwise 2^61 - 1.
uint64_t fingerprint_modulus(int bits);

struct FingerprintStream {
  BitString u;
  BitString v;
};

// ASCII '0'/'1' symbols, one '2' separator, terminated by newline or end.
FingerprintStream parse_fingerprint_stream(const std::string& text);

struct ClassicalFingerprintResult {
  bool equal = false;
  uint64_t prime = 0;
  uint64_t hu = 0;
  uint64_t hv = 0;
  // Bits held while streaming: two residues, the symbol counter, the prime.
  int memory_bits = 0;
  CostReport cost;
};

// Picks p uniformly from the first ceil(n / eps) primes and compares
// (h * 2 + x) mod p residues read MSB-first. Unequal lengths are unequal.
ClassicalFingerprintResult classical_fingerprint_stream(const FingerprintStream& s, double eps,
                                                        Rng& rng);

struct FingerprintParams {
  uint64_t q = 0;
  std::vector<uint64_t> k;  // coefficients in [1, q-1]; size is a power of two
};

FingerprintParams random_fingerprint_params(uint64_t q, uint64_t t, Rng& rng);
// ceil(log2(n) / eps) rounded up to a power of two.
uint64_t fingerprint_coefficient_count(uint64_t n, double eps);

struct SingleFingerprintResult {
  int bit = 0;
  double pr0 = 1.0;
};

// One qubit rotated by +2 pi k 2^i / q per 1-bit of u and by the negative
// angle per 1-bit of v, then measured. q need not be prime here.
SingleFingerprintResult quantum_fingerprint_single(const BitString& u, const BitString& v,
                                                   uint64_t k, uint64_t q, Rng& rng);

// Final state of the log2(t) + 1 qubit circuit: H on the index register,
// controlled rotations while reading u then v, H again.
StateVector quantum_fingerprint_state(const BitString& u, const BitString& v,
                                      const FingerprintParams& params);

struct MultiFingerprintResult {
  bool equal = false;
  uint64_t outcome = 0;
  // (1/t^2) (sum_i cos(2 pi k_i (a - b) / q))^2
  double p_error = 0.0;
};

MultiFingerprintResult quantum_fingerprint_multi(const BitString& u, const BitString& v,
                                                 const FingerprintParams& params, Rng& rng);

struct SwapTestResult {
  bool equal = true;  // no 1-outcome among the repetitions
  double observed_pr0 = 1.0;
  double exact_pr0 = 1.0;
};

// H, controlled-SWAP of a and b, H on an ancilla; measured reps times.
SwapTestResult swap_test(const StateVector& a, const StateVector& b, int reps, Rng& rng);
double swap_test_pr0(const StateVector& a, const StateVector& b);

}  // namespace qlab
