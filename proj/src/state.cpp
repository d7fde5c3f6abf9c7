// Copyright 2026 The qlab Authors
#include "qlab/state.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace qlab {
namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void check_index(const StateVector& s, int q) {
  if (q < 0 || q >= s.num_qubits())
    throw ValidationError("qubit index " + std::to_string(q) + " out of range");
}

uint64_t bit_of(int num_qubits, int q) {
  return uint64_t{1} << (num_qubits - 1 - q);
}

void check_distinct(const std::vector<int>& qs) {
  std::vector<int> sorted = qs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ValidationError("qubit listed twice");
}

}  // namespace

Gate1Q::Gate1Q(const std::array<cplx, 4>& m) : m_(m) {
  for (const auto& z : m_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw ValidationError("gate entry not finite");
  // U^dagger U = I
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      cplx acc = std::conj(m_[r]) * m_[c] + std::conj(m_[2 + r]) * m_[2 + c];
      double want = r == c ? 1.0 : 0.0;
      if (std::abs(acc - want) > kTol)
        throw ValidationError("gate is not unitary");
    }
}

Gate1Q Gate1Q::adjoint() const {
  return Gate1Q({std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]),
                 std::conj(m_[3])});
}

Gate1Q standard_gate(std::string_view name, std::optional<double> angle) {
  const bool rotation = name == "Rx" || name == "Ry" || name == "Rz";
  if (rotation && !angle)
    throw ValidationError("gate " + std::string(name) + " needs an angle");
  if (!rotation && angle)
    throw ValidationError("gate " + std::string(name) + " takes no angle");
  const cplx i(0.0, 1.0);
  if (name == "I") return Gate1Q({1.0, 0.0, 0.0, 1.0});
  if (name == "X") return Gate1Q({0.0, 1.0, 1.0, 0.0});
  if (name == "Z") return Gate1Q({1.0, 0.0, 0.0, -1.0});
  if (name == "S") return Gate1Q({1.0, 0.0, 0.0, i});
  if (name == "T") return Gate1Q({1.0, 0.0, 0.0, std::exp(i * (kPi / 4))});
  if (name == "H")
    return Gate1Q({kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2});
  const double h = *angle / 2.0;
  if (name == "Rx")
    return Gate1Q({std::cos(h), -i * std::sin(h), -i * std::sin(h),
                   std::cos(h)});
  if (name == "Ry")
    return Gate1Q({std::cos(h), -std::sin(h), std::sin(h), std::cos(h)});
  if (name == "Rz") return Gate1Q({std::exp(-i * h), 0.0, 0.0, std::exp(i * h)});
  throw ValidationError("unknown gate " + std::string(name));
}

Gate1Q phase_gate(double phi) {
  return Gate1Q({1.0, 0.0, 0.0, std::exp(cplx(0.0, phi))});
}

DenseUnitary::DenseUnitary(size_t dim, std::vector<cplx> m, bool check)
    : dim_(dim), m_(std::move(m)) {
  if (!is_pow2(dim_)) throw ValidationError("unitary dimension not a power of 2");
  if (m_.size() != dim_ * dim_) throw ValidationError("unitary size mismatch");
  if (check && unitarity_error() > kTol)
    throw ValidationError("matrix is not unitary");
}

DenseUnitary DenseUnitary::identity(size_t dim) {
  std::vector<cplx> m(dim * dim, 0.0);
  for (size_t i = 0; i < dim; ++i) m[i * dim + i] = 1.0;
  return DenseUnitary(dim, std::move(m), false);
}

DenseUnitary DenseUnitary::from_gate(const Gate1Q& g) {
  return DenseUnitary(2, {g(0, 0), g(0, 1), g(1, 0), g(1, 1)}, false);
}

DenseUnitary DenseUnitary::operator*(const DenseUnitary& rhs) const {
  if (dim_ != rhs.dim_) throw ValidationError("unitary dimension mismatch");
  std::vector<cplx> out(dim_ * dim_, 0.0);
  for (size_t r = 0; r < dim_; ++r)
    for (size_t k = 0; k < dim_; ++k) {
      const cplx a = m_[r * dim_ + k];
      if (a == cplx(0.0)) continue;
      const cplx* row = &rhs.m_[k * dim_];
      cplx* dst = &out[r * dim_];
      for (size_t c = 0; c < dim_; ++c) dst[c] += a * row[c];
    }
  return DenseUnitary(dim_, std::move(out), false);
}

DenseUnitary DenseUnitary::adjoint() const {
  std::vector<cplx> out(dim_ * dim_);
  for (size_t r = 0; r < dim_; ++r)
    for (size_t c = 0; c < dim_; ++c) out[c * dim_ + r] = std::conj(m_[r * dim_ + c]);
  return DenseUnitary(dim_, std::move(out), false);
}

std::vector<cplx> DenseUnitary::apply(const std::vector<cplx>& v) const {
  if (v.size() != dim_) throw ValidationError("vector dimension mismatch");
  std::vector<cplx> out(dim_, 0.0);
  for (size_t r = 0; r < dim_; ++r) {
    cplx acc = 0.0;
    const cplx* row = &m_[r * dim_];
    for (size_t c = 0; c < dim_; ++c) acc += row[c] * v[c];
    out[r] = acc;
  }
  return out;
}

double DenseUnitary::unitarity_error() const {
  double worst = 0.0;
  for (size_t r = 0; r < dim_; ++r)
    for (size_t c = r; c < dim_; ++c) {
      cplx acc = 0.0;
      for (size_t k = 0; k < dim_; ++k)
        acc += std::conj(m_[k * dim_ + r]) * m_[k * dim_ + c];
      worst = std::max(worst, std::abs(acc - (r == c ? 1.0 : 0.0)));
    }
  return worst;
}

DenseUnitary embed_unitary(size_t k, const std::vector<cplx>& m) {
  if (m.size() != k * k) throw ValidationError("block size mismatch");
  size_t d = 1;
  while (d < k) d <<= 1;
  std::vector<cplx> out(d * d, 0.0);
  for (size_t r = 0; r < k; ++r)
    for (size_t c = 0; c < k; ++c) out[r * d + c] = m[r * k + c];
  for (size_t i = k; i < d; ++i) out[i * d + i] = 1.0;
  return DenseUnitary(d, std::move(out));
}

StateVector::StateVector(int num_qubits, uint64_t basis_index) : n_(num_qubits) {
  if (num_qubits < 1) throw ValidationError("need at least one qubit");
  if (num_qubits > kMaxQubits)
    throw ResourceError("state of " + std::to_string(num_qubits) +
                        " qubits exceeds the " + std::to_string(kMaxQubits) +
                        "-qubit cap");
  if (basis_index >= (uint64_t{1} << num_qubits))
    throw ValidationError("basis index out of range");
  amps_.assign(size_t{1} << num_qubits, 0.0);
  amps_[basis_index] = 1.0;
}

StateVector::StateVector(std::vector<cplx> amps, bool check_norm)
    : n_(ceil_log2(amps.size())), amps_(std::move(amps)) {
  if (!is_pow2(amps_.size()) || amps_.size() < 2)
    throw ValidationError("amplitude count must be a power of 2, at least 2");
  if (n_ > kMaxQubits) throw ResourceError("state exceeds the qubit cap");
  for (const auto& z : amps_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw ValidationError("amplitude not finite");
  if (check_norm && std::abs(norm2() - 1.0) > kTol)
    throw ValidationError("state is not normalized");
}

StateVector StateVector::uniform(int num_qubits) {
  StateVector s(num_qubits, 0);
  const double a = 1.0 / std::sqrt(static_cast<double>(s.size()));
  std::fill(s.amps_.begin(), s.amps_.end(), cplx(a));
  return s;
}

double StateVector::norm2() const {
  double acc = 0.0;
  for (const auto& z : amps_) acc += std::norm(z);
  return acc;
}

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(amps_.size());
  for (size_t i = 0; i < amps_.size(); ++i) p[i] = std::norm(amps_[i]);
  return p;
}

void StateVector::normalize() {
  const double n = std::sqrt(norm2());
  if (n == 0.0) throw ValidationError("cannot normalize the zero vector");
  for (auto& z : amps_) z /= n;
}

StateVector new_state(int num_qubits, uint64_t basis_index) {
  return StateVector(num_qubits, basis_index);
}

void apply_gate(StateVector& s, const Gate1Q& g, int target) {
  check_index(s, target);
  const uint64_t stride = bit_of(s.num_qubits(), target);
  auto& a = s.mutable_amps();
  const cplx m00 = g(0, 0), m01 = g(0, 1), m10 = g(1, 0), m11 = g(1, 1);
  for (uint64_t base = 0; base < a.size(); base += 2 * stride)
    for (uint64_t i = base; i < base + stride; ++i) {
      const cplx x = a[i], y = a[i + stride];
      a[i] = m00 * x + m01 * y;
      a[i + stride] = m10 * x + m11 * y;
    }
}

void apply_controlled(StateVector& s, const Gate1Q& g,
                      const std::vector<int>& controls, int target) {
  check_index(s, target);
  std::vector<int> all = controls;
  all.push_back(target);
  check_distinct(all);
  uint64_t cmask = 0;
  for (int c : controls) {
    check_index(s, c);
    cmask |= bit_of(s.num_qubits(), c);
  }
  const uint64_t tbit = bit_of(s.num_qubits(), target);
  auto& a = s.mutable_amps();
  for (uint64_t i = 0; i < a.size(); ++i) {
    if ((i & tbit) || (i & cmask) != cmask) continue;
    const cplx x = a[i], y = a[i | tbit];
    a[i] = g(0, 0) * x + g(0, 1) * y;
    a[i | tbit] = g(1, 0) * x + g(1, 1) * y;
  }
}

void apply_controlled_unitary(StateVector& s, const DenseUnitary& u,
                              const std::vector<int>& controls,
                              const std::vector<int>& qubits) {
  const size_t k = qubits.size();
  if (u.dim() != (size_t{1} << k))
    throw ValidationError("unitary dimension does not match qubit subset");
  std::vector<int> all = controls;
  all.insert(all.end(), qubits.begin(), qubits.end());
  check_distinct(all);
  uint64_t cmask = 0, smask = 0;
  for (int c : controls) {
    check_index(s, c);
    cmask |= bit_of(s.num_qubits(), c);
  }
  std::vector<uint64_t> offset(u.dim(), 0);
  for (size_t j = 0; j < k; ++j) {
    check_index(s, qubits[j]);
    smask |= bit_of(s.num_qubits(), qubits[j]);
  }
  for (size_t x = 0; x < u.dim(); ++x)
    for (size_t j = 0; j < k; ++j)
      if (x & (size_t{1} << (k - 1 - j))) offset[x] |= bit_of(s.num_qubits(), qubits[j]);
  auto& a = s.mutable_amps();
  std::vector<cplx> in(u.dim()), out(u.dim());
  for (uint64_t base = 0; base < a.size(); ++base) {
    if ((base & smask) || (base & cmask) != cmask) continue;
    for (size_t x = 0; x < u.dim(); ++x) in[x] = a[base | offset[x]];
    for (size_t r = 0; r < u.dim(); ++r) {
      cplx acc = 0.0;
      for (size_t c = 0; c < u.dim(); ++c) acc += u(r, c) * in[c];
      out[r] = acc;
    }
    for (size_t x = 0; x < u.dim(); ++x) a[base | offset[x]] = out[x];
  }
}

void apply_unitary(StateVector& s, const DenseUnitary& u,
                   const std::vector<int>& qubits) {
  apply_controlled_unitary(s, u, {}, qubits);
}

uint64_t sample_index(const StateVector& s, Rng& rng) {
  const double r = uniform01(rng) * s.norm2();
  double acc = 0.0;
  uint64_t last_nonzero = 0;
  for (uint64_t i = 0; i < s.size(); ++i) {
    const double p = s.probability(i);
    if (p == 0.0) continue;
    acc += p;
    last_nonzero = i;
    if (r < acc) return i;
  }
  return last_nonzero;
}

std::pair<uint64_t, StateVector> measure_all(const StateVector& s, Rng& rng) {
  const uint64_t i = sample_index(s, rng);
  return {i, StateVector(s.num_qubits(), i)};
}

PartialOutcome measure_partial(const StateVector& s,
                               const std::vector<int>& qubits, Rng& rng) {
  check_distinct(qubits);
  if (qubits.empty()) throw ValidationError("no qubits to measure");
  if (static_cast<int>(qubits.size()) >= s.num_qubits())
    throw ValidationError("measure_partial must leave at least one qubit");
  const int n = s.num_qubits();
  uint64_t mmask = 0;
  for (int q : qubits) {
    check_index(s, q);
    mmask |= bit_of(n, q);
  }
  // Marginal over outcomes, keyed by the measured bits packed in request order.
  const size_t k = qubits.size();
  std::vector<double> marg(size_t{1} << k, 0.0);
  auto pack = [&](uint64_t i) {
    uint64_t key = 0;
    for (size_t j = 0; j < k; ++j)
      key = (key << 1) | ((i & bit_of(n, qubits[j])) ? 1 : 0);
    return key;
  };
  for (uint64_t i = 0; i < s.size(); ++i) marg[pack(i)] += s.probability(i);
  const double r = uniform01(rng);
  uint64_t pick = 0;
  double acc = 0.0;
  for (uint64_t key = 0; key < marg.size(); ++key) {
    if (marg[key] == 0.0) continue;
    acc += marg[key];
    pick = key;
    if (r < acc) break;
  }
  std::vector<int> rest;
  for (int q = 0; q < n; ++q)
    if (!(mmask & bit_of(n, q))) rest.push_back(q);
  std::vector<cplx> res(size_t{1} << rest.size(), 0.0);
  for (uint64_t i = 0; i < s.size(); ++i) {
    if (pack(i) != pick) continue;
    uint64_t j = 0;
    for (int q : rest) j = (j << 1) | ((i & bit_of(n, q)) ? 1 : 0);
    res[j] = s[i];
  }
  PartialOutcome out{{}, StateVector(std::vector<cplx>(res.size(), 0.0), false)};
  for (size_t j = 0; j < k; ++j) out.bits.push_back((pick >> (k - 1 - j)) & 1);
  StateVector residual(std::move(res), false);
  residual.normalize();
  out.residual = std::move(residual);
  return out;
}

cplx inner_product(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits())
    throw ValidationError("inner product dimension mismatch");
  cplx acc = 0.0;
  for (size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

void apply_qft(StateVector& s, int first, int count, bool inverse) {
  const Gate1Q h = standard_gate("H");
  const Gate1Q swap_x = standard_gate("X");
  auto swap_qubits = [&](int a, int b) {
    apply_controlled(s, swap_x, {a}, b);
    apply_controlled(s, swap_x, {b}, a);
    apply_controlled(s, swap_x, {a}, b);
  };
  if (!inverse) {
    for (int j = 0; j < count; ++j) {
      apply_gate(s, h, first + j);
      for (int k = j + 1; k < count; ++k)
        apply_controlled(s, phase_gate(2 * kPi / double(uint64_t{1} << (k - j + 1))),
                         {first + k}, first + j);
    }
    for (int j = 0; j < count / 2; ++j) swap_qubits(first + j, first + count - 1 - j);
  } else {
    for (int j = 0; j < count / 2; ++j) swap_qubits(first + j, first + count - 1 - j);
    for (int j = count - 1; j >= 0; --j) {
      for (int k = count - 1; k > j; --k)
        apply_controlled(s, phase_gate(-2 * kPi / double(uint64_t{1} << (k - j + 1))),
                         {first + k}, first + j);
      apply_gate(s, h, first + j);
    }
  }
}

namespace {

StateVector run_phase_estimation(const DenseUnitary& u, const StateVector& input,
                                 int bits) {
  if (bits < 1) throw ValidationError("precision_bits must be at least 1");
  if (u.dim() != input.size())
    throw ValidationError("eigen_input dimension does not match unitary");
  const int sys = input.num_qubits();
  if (bits + sys > kMaxQubits)
    throw ResourceError("phase estimation needs " + std::to_string(bits + sys) +
                        " qubits, cap is " + std::to_string(kMaxQubits));
  std::vector<cplx> amps(size_t{1} << (bits + sys), 0.0);
  std::copy(input.amps().begin(), input.amps().end(), amps.begin());
  StateVector s(std::move(amps), false);
  const Gate1Q h = standard_gate("H");
  for (int q = 0; q < bits; ++q) apply_gate(s, h, q);
  std::vector<int> sys_qubits(sys);
  for (int j = 0; j < sys; ++j) sys_qubits[j] = bits + j;
  // Counting qubit bits-1 (least significant) controls U, the next U^2, ...
  DenseUnitary power = u;
  for (int q = bits - 1; q >= 0; --q) {
    apply_controlled_unitary(s, power, {q}, sys_qubits);
    if (q > 0) power = power * power;
  }
  apply_qft(s, 0, bits, true);
  return s;
}

}  // namespace

std::vector<double> phase_estimate_distribution(const DenseUnitary& u,
                                                const StateVector& eigen_input,
                                                int bits) {
  const StateVector s = run_phase_estimation(u, eigen_input, bits);
  const int sys = eigen_input.num_qubits();
  std::vector<double> dist(size_t{1} << bits, 0.0);
  for (uint64_t i = 0; i < s.size(); ++i) dist[i >> sys] += s.probability(i);
  return dist;
}

double phase_estimate(const DenseUnitary& u, const StateVector& eigen_input,
                      int bits, Rng& rng) {
  const StateVector s = run_phase_estimation(u, eigen_input, bits);
  const uint64_t i = sample_index(s, rng);
  const uint64_t m = i >> eigen_input.num_qubits();
  return static_cast<double>(m) / static_cast<double>(uint64_t{1} << bits);
}

std::string state_to_json(const StateVector& s) {
  std::ostringstream os;
  os.precision(17);
  os << '[';
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << '[' << s[i].real() << ',' << s[i].imag() << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace qlab
