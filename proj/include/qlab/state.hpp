// Copyright 2026 The qlab Authors
#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "qlab/common.hpp"

namespace qlab {

// Basis index convention: qubit 0 is the most significant bit, so the ket
// string |q0 q1 ... q_{n-1}> reads left to right as a binary number.

inline constexpr int kMaxQubits = 24;

class Gate1Q {
 public:
  // Row-major {m00, m01, m10, m11}. Throws ValidationError if not unitary.
  explicit Gate1Q(const std::array<cplx, 4>& m);

  const cplx& operator()(int r, int c) const { return m_[2 * r + c]; }
  const std::array<cplx, 4>& data() const { return m_; }
  Gate1Q adjoint() const;

 private:
  std::array<cplx, 4> m_;
};

Gate1Q standard_gate(std::string_view name,
                     std::optional<double> angle = std::nullopt);
Gate1Q phase_gate(double phi);  // diag(1, e^{i phi})

class DenseUnitary {
 public:
  DenseUnitary() = default;
  // Row-major d x d, d a power of two. Unitarity checked to 1e-9.
  DenseUnitary(size_t dim, std::vector<cplx> m, bool check = true);

  static DenseUnitary identity(size_t dim);
  static DenseUnitary from_gate(const Gate1Q& g);

  size_t dim() const { return dim_; }
  int num_qubits() const { return ceil_log2(dim_); }
  const cplx& operator()(size_t r, size_t c) const { return m_[r * dim_ + c]; }
  cplx& at(size_t r, size_t c) { return m_[r * dim_ + c]; }
  const std::vector<cplx>& data() const { return m_; }

  DenseUnitary operator*(const DenseUnitary& rhs) const;
  DenseUnitary adjoint() const;
  std::vector<cplx> apply(const std::vector<cplx>& v) const;
  double unitarity_error() const;

 private:
  size_t dim_ = 0;
  std::vector<cplx> m_;
};

// Embeds an arbitrary k x k unitary as the leading block of the next power of
// two, with identity on the padding indices.
DenseUnitary embed_unitary(size_t k, const std::vector<cplx>& m);

class StateVector {
 public:
  StateVector(int num_qubits, uint64_t basis_index);
  // Takes ownership of amplitudes; length must be 2^q and norm 1.
  explicit StateVector(std::vector<cplx> amps, bool check_norm = true);

  static StateVector uniform(int num_qubits);

  int num_qubits() const { return n_; }
  size_t size() const { return amps_.size(); }
  const std::vector<cplx>& amps() const { return amps_; }
  std::vector<cplx>& mutable_amps() { return amps_; }
  const cplx& operator[](size_t i) const { return amps_[i]; }

  double norm2() const;
  double probability(uint64_t i) const { return std::norm(amps_[i]); }
  std::vector<double> probabilities() const;
  void normalize();

 private:
  int n_;
  std::vector<cplx> amps_;
};

StateVector new_state(int num_qubits, uint64_t basis_index);

void apply_gate(StateVector& s, const Gate1Q& g, int target);
void apply_controlled(StateVector& s, const Gate1Q& g,
                      const std::vector<int>& controls, int target);
// u acts on the listed qubits; qubits[0] is the most significant bit of u's
// index.
void apply_unitary(StateVector& s, const DenseUnitary& u,
                   const std::vector<int>& qubits);
void apply_controlled_unitary(StateVector& s, const DenseUnitary& u,
                              const std::vector<int>& controls,
                              const std::vector<int>& qubits);

// Inverse-CDF sample of a basis index.
uint64_t sample_index(const StateVector& s, Rng& rng);
std::pair<uint64_t, StateVector> measure_all(const StateVector& s, Rng& rng);

struct PartialOutcome {
  std::vector<int> bits;  // one per measured qubit, in request order
  StateVector residual;   // over the unmeasured qubits, original order
};
PartialOutcome measure_partial(const StateVector& s,
                               const std::vector<int>& qubits, Rng& rng);

cplx inner_product(const StateVector& a, const StateVector& b);

// Quantum Fourier transform on a contiguous block of qubits.
void apply_qft(StateVector& s, int first, int count, bool inverse);

// Textbook phase estimation: `bits` counting qubits (most significant
// first) followed by the system register holding eigen_input.
double phase_estimate(const DenseUnitary& u, const StateVector& eigen_input,
                      int bits, Rng& rng);
// Exact outcome distribution over the 2^bits estimates, for testing.
std::vector<double> phase_estimate_distribution(const DenseUnitary& u,
                                                const StateVector& eigen_input,
                                                int bits);

// Amplitudes as [[re, im], ...] JSON text.
std::string state_to_json(const StateVector& s);

}  // namespace qlab
