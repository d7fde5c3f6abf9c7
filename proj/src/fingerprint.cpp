// Copyright 2026 The qlab Authors
#include "qlab/fingerprint.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <mutex>

namespace qlab {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  for (; e; e >>= 1, a = mulmod(a, a, m))
    if (e & 1) r = mulmod(r, a, m);
  return r;
}

int bit_length(uint64_t x) { return std::max(1, 64 - std::countl_zero(x)); }

// Angle 2 pi c / q for a residue c, in (-pi, pi].
double residue_angle(uint64_t c, uint64_t q) {
  const double f = static_cast<double>(c) / static_cast<double>(q);
  return 2.0 * kPi * (f > 0.5 ? f - 1.0 : f);
}

void check_params(const FingerprintParams& p, bool require_prime = true) {
  if (p.q < 2 || (require_prime && !is_prime(p.q)))
    throw ValidationError("fingerprint modulus must be prime");
  if (p.k.empty() || !is_pow2(p.k.size()))
    throw ValidationError("coefficient count must be a power of two");
  if (p.k.size() > (uint64_t{1} << 16)) throw ResourceError("too many coefficients");
  for (uint64_t k : p.k)
    if (k < 1 || k >= p.q) throw ValidationError("coefficients must lie in [1, q-1]");
}

// q must exceed every string value; past 60 bits any q >= 2^60 is accepted.
void check_modulus_covers(uint64_t q, const BitString& u, const BitString& v) {
  const size_t len = std::max(u.size(), v.size());
  const bool ok = len < 61 ? (q >> len) != 0 : q >= (uint64_t{1} << 60);
  if (!ok) throw ValidationError("modulus must exceed 2^(string length)");
}

// Residue of (a - b) mod q.
uint64_t diff_mod(const BitString& u, const BitString& v, uint64_t q) {
  return (value_mod(u, q) + q - value_mod(v, q)) % q;
}

}  // namespace

uint64_t value_of(const BitString& x) {
  if (x.size() > 64) throw ValidationError("value_of takes at most 64 symbols");
  uint64_t v = 0;
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i]) v |= uint64_t{1} << i;
  return v;
}

uint64_t value_mod(const BitString& x, uint64_t q) {
  if (q == 0) throw ValidationError("modulus must be positive");
  uint64_t v = 0, pw = 1 % q;
  for (uint8_t b : x) {
    if (b) v = (v + pw) % q;
    pw = mulmod(pw, 2, q);
  }
  return v;
}

bool is_prime(uint64_t x) {
  if (x < 2) return false;
  for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (x % p == 0) return x == p;
  }
  uint64_t d = x - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  // These bases are exact for all 64-bit inputs.
  for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    uint64_t y = powmod(a, d, x);
    if (y == 1 || y == x - 1) continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      y = mulmod(y, y, x);
      if (y == x - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

std::vector<uint64_t> first_primes(uint64_t count) {
  static std::mutex mu;
  static std::vector<uint64_t> cache;
  if (count > (uint64_t{1} << 26)) throw ResourceError("prime table request too large");
  std::lock_guard<std::mutex> lock(mu);
  if (cache.size() < count) {
    // p_n < n (ln n + ln ln n) for n >= 6.
    const double n = std::max<double>(static_cast<double>(count), 6.0);
    const uint64_t bound = static_cast<uint64_t>(n * (std::log(n) + std::log(std::log(n)))) + 16;
    std::vector<char> sieve(bound + 1, 1);
    sieve[0] = sieve[1] = 0;
    for (uint64_t i = 2; i * i <= bound; ++i)
      if (sieve[i])
        for (uint64_t j = i * i; j <= bound; j += i) sieve[j] = 0;
    cache.clear();
    for (uint64_t i = 2; i <= bound; ++i)
      if (sieve[i]) cache.push_back(i);
  }
  return {cache.begin(), cache.begin() + static_cast<int64_t>(count)};
}

uint64_t fingerprint_modulus(int bits) {
  if (bits < 0) throw ValidationError("bit count must be non-negative");
  if (bits > 60) return (uint64_t{1} << 61) - 1;
  uint64_t q = (uint64_t{1} << bits) + 1;
  while (!is_prime(q)) ++q;
  return q;
}

FingerprintStream parse_fingerprint_stream(const std::string& text) {
  FingerprintStream s;
  int part = 0;
  for (char c : text) {
    if (c == '\n' || c == '\r') break;
    if (c == '2') {
      if (++part > 1) throw ValidationError("stream has more than one separator");
    } else if (c == '0' || c == '1') {
      (part ? s.v : s.u).push_back(static_cast<uint8_t>(c - '0'));
    } else {
      throw ValidationError(std::string("invalid stream symbol '") + c + "'");
    }
  }
  if (part != 1) throw ValidationError("stream needs exactly one separator");
  return s;
}

ClassicalFingerprintResult classical_fingerprint_stream(const FingerprintStream& s, double eps,
                                                        Rng& rng) {
  if (!(eps > 0.0 && eps < 1.0)) throw ValidationError("eps must lie in (0, 1)");
  ClassicalFingerprintResult r;
  const uint64_t n = std::max<uint64_t>({s.u.size(), s.v.size(), 1});
  const uint64_t count = static_cast<uint64_t>(std::ceil(static_cast<double>(n) / eps));
  const std::vector<uint64_t> primes = first_primes(count);
  const uint64_t idx = uniform_index(rng, count);
  r.prime = primes[idx];
  for (uint8_t x : s.u) r.hu = (r.hu * 2 + x) % r.prime;
  for (uint8_t x : s.v) r.hv = (r.hv * 2 + x) % r.prime;
  r.cost.charge("stream.read", static_cast<int64_t>(s.u.size() + s.v.size() + 1));
  r.equal = s.u.size() == s.v.size() && r.hu == r.hv;
  r.memory_bits = 2 * bit_length(r.prime) + bit_length(n) + bit_length(count);
  return r;
}

FingerprintParams random_fingerprint_params(uint64_t q, uint64_t t, Rng& rng) {
  FingerprintParams p;
  p.q = q;
  for (uint64_t i = 0; i < t; ++i) p.k.push_back(1 + uniform_index(rng, q - 1));
  check_params(p);
  return p;
}

uint64_t fingerprint_coefficient_count(uint64_t n, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw ValidationError("eps must lie in (0, 1)");
  const double raw = std::log2(static_cast<double>(std::max<uint64_t>(n, 2))) / eps;
  return std::bit_ceil(static_cast<uint64_t>(std::ceil(raw - 1e-9)));
}

namespace {

StateVector fingerprint_state(const BitString& u, const BitString& v,
                              const FingerprintParams& params) {
  const uint64_t t = params.k.size();
  const int m = ceil_log2(t);
  StateVector s(m + 1, 0);
  const Gate1Q h = standard_gate("H");
  for (int qb = 0; qb < m; ++qb) apply_gate(s, h, qb);
  // Q_j: on |i>, rotate the last qubit by sign * 2 pi k_i 2^j / q.
  auto rotate = [&](const BitString& x, double sign) {
    uint64_t pw = 1 % params.q;
    for (uint8_t bit : x) {
      if (bit) {
        auto& a = s.mutable_amps();
        for (uint64_t i = 0; i < t; ++i) {
          const double g = sign * residue_angle(mulmod(params.k[i], pw, params.q), params.q);
          const double c = std::cos(g), sn = std::sin(g);
          const cplx a0 = a[2 * i], a1 = a[2 * i + 1];
          a[2 * i] = c * a0 - sn * a1;
          a[2 * i + 1] = sn * a0 + c * a1;
        }
      }
      pw = mulmod(pw, 2, params.q);
    }
  };
  rotate(u, 1.0);
  rotate(v, -1.0);
  for (int qb = 0; qb < m; ++qb) apply_gate(s, h, qb);
  return s;
}

}  // namespace

StateVector quantum_fingerprint_state(const BitString& u, const BitString& v,
                                      const FingerprintParams& params) {
  check_params(params);
  check_modulus_covers(params.q, u, v);
  return fingerprint_state(u, v, params);
}

SingleFingerprintResult quantum_fingerprint_single(const BitString& u, const BitString& v,
                                                   uint64_t k, uint64_t q, Rng& rng) {
  FingerprintParams p{q, {k}};
  check_params(p, false);
  check_modulus_covers(q, u, v);
  const StateVector s = fingerprint_state(u, v, p);
  SingleFingerprintResult r;
  r.pr0 = s.probability(0);
  r.bit = static_cast<int>(sample_index(s, rng));
  return r;
}

MultiFingerprintResult quantum_fingerprint_multi(const BitString& u, const BitString& v,
                                                 const FingerprintParams& params, Rng& rng) {
  const StateVector s = quantum_fingerprint_state(u, v, params);
  MultiFingerprintResult r;
  r.outcome = sample_index(s, rng);
  r.equal = r.outcome == 0;
  const uint64_t d = diff_mod(u, v, params.q);
  double sum = 0.0;
  for (uint64_t k : params.k) sum += std::cos(residue_angle(mulmod(k, d, params.q), params.q));
  const double t = static_cast<double>(params.k.size());
  r.p_error = sum * sum / (t * t);
  return r;
}

double swap_test_pr0(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) throw ValidationError("states differ in size");
  return 0.5 + 0.5 * std::norm(inner_product(a, b));
}

SwapTestResult swap_test(const StateVector& a, const StateVector& b, int reps, Rng& rng) {
  if (reps < 1) throw ValidationError("reps must be positive");
  if (a.num_qubits() != b.num_qubits()) throw ValidationError("states differ in size");
  const int w = a.num_qubits();
  if (2 * w + 1 > 16) throw ResourceError("swap test limited to 7-qubit inputs");
  // |0> (x) a (x) b with the ancilla as qubit 0.
  std::vector<cplx> amps(size_t{1} << (2 * w + 1), 0.0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) amps[(i << w) | j] = a[i] * b[j];
  StateVector s(std::move(amps));
  const Gate1Q h = standard_gate("H");
  apply_gate(s, h, 0);
  // SWAP of the two w-qubit registers.
  const size_t dim = size_t{1} << (2 * w);
  DenseUnitary sw(dim, std::vector<cplx>(dim * dim, 0.0), false);
  const size_t mask = (size_t{1} << w) - 1;
  for (size_t x = 0; x < dim; ++x) sw.at(((x & mask) << w) | (x >> w), x) = 1.0;
  std::vector<int> targets(2 * w);
  for (int q = 0; q < 2 * w; ++q) targets[q] = q + 1;
  apply_controlled_unitary(s, sw, {0}, targets);
  apply_gate(s, h, 0);
  SwapTestResult r;
  r.exact_pr0 = 0.0;
  for (size_t i = 0; i < dim; ++i) r.exact_pr0 += s.probability(i);
  int zeros = 0;
  for (int k = 0; k < reps; ++k) {
    const PartialOutcome o = measure_partial(s, {0}, rng);
    zeros += o.bits[0] == 0;
  }
  r.observed_pr0 = static_cast<double>(zeros) / reps;
  r.equal = zeros == reps;
  return r;
}

}  // namespace qlab
