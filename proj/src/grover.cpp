// Copyright 2026 The qlab Authors
#include "qlab/grover.hpp"

#include <algorithm>
#include <cmath>

namespace qlab {

int64_t iterations_for_angle(double theta) {
  if (theta <= 0.0) throw ValidationError("Grover angle must be positive");
  // Nudge exact half-integers (p = 1/2) up despite rounding error in theta.
  const double l = std::round(kPi / (4.0 * theta) - 0.5 + 1e-9);
  return std::max<int64_t>(0, static_cast<int64_t>(l));
}

GroverPlan GroverPlan::make(uint64_t n, uint64_t t) {
  if (n == 0) throw ValidationError("search space must be non-empty");
  if (t == 0 || t > n) throw ValidationError("GroverPlan needs 1 <= t <= n");
  GroverPlan p;
  p.n = n;
  p.t = t;
  p.theta = std::asin(std::sqrt(static_cast<double>(t) / static_cast<double>(n)));
  p.L = iterations_for_angle(p.theta);
  return p;
}

double analytic_success(uint64_t n, uint64_t t, int64_t L) {
  if (t == 0 || t > n) throw ValidationError("analytic_success needs 1 <= t <= n");
  if (L < 0) throw ValidationError("iteration count must be non-negative");
  const double theta = std::asin(std::sqrt(static_cast<double>(t) / static_cast<double>(n)));
  const double s = std::sin((2.0 * static_cast<double>(L) + 1.0) * theta);
  return s * s;
}

int unknown_t_stages(uint64_t n) {
  const double target = kPi / 4.0 * std::sqrt(static_cast<double>(n));
  const int top = target <= 1.0 ? 0 : static_cast<int>(std::ceil(std::log2(target)));
  return top + 1;
}

int64_t unknown_t_full_charge(uint64_t n) {
  int64_t q = 0;
  for (int j = 1; j <= unknown_t_stages(n); ++j) q += (int64_t{1} << (j - 1)) + 1;
  return q;
}

DenseUnitary diffusion(uint64_t n) {
  if (n < 2) throw ValidationError("diffusion needs n >= 2");
  std::vector<cplx> m(n * n);
  const double off = 2.0 / static_cast<double>(n);
  for (uint64_t r = 0; r < n; ++r)
    for (uint64_t c = 0; c < n; ++c) m[r * n + c] = r == c ? off - 1.0 : off;
  return embed_unitary(n, m);
}

StateVector uniform_live_state(uint64_t n) {
  if (n == 0) throw ValidationError("search space must be non-empty");
  const int q = std::max(1, ceil_log2(n));
  if (q > kMaxQubits) throw ResourceError("search space exceeds the qubit cap");
  std::vector<cplx> amps(size_t{1} << q, 0.0);
  const double a = 1.0 / std::sqrt(static_cast<double>(n));
  std::fill(amps.begin(), amps.begin() + n, cplx(a));
  return StateVector(std::move(amps), false);
}

void apply_diffusion(StateVector& s, uint64_t n) {
  auto& a = s.mutable_amps();
  cplx mean = 0.0;
  for (uint64_t i = 0; i < n; ++i) mean += a[i];
  mean /= static_cast<double>(n);
  for (uint64_t i = 0; i < n; ++i) a[i] = 2.0 * mean - a[i];
}

void grover_iterate(StateVector& s, BooleanOracle& f) {
  apply_phase_oracle(s, f);
  apply_diffusion(s, f.size());
}

namespace {

void check_domain(const BooleanOracle& f, uint64_t n) {
  if (f.size() != n) throw ValidationError("oracle domain does not match n");
}

StateVector evolve(BooleanOracle& f, int64_t iterations) {
  StateVector s = uniform_live_state(f.size());
  for (int64_t k = 0; k < iterations; ++k) grover_iterate(s, f);
  return s;
}

}  // namespace

SearchResult grover_known_t(BooleanOracle& f, uint64_t n, uint64_t t, Rng& rng) {
  check_domain(f, n);
  if (t == 0) throw ValidationError("t = 0 is not allowed; use grover_unknown_t");
  const GroverPlan plan = GroverPlan::make(n, t);
  WallTimer timer;
  const int64_t before = f.ledger().total();
  StateVector s = evolve(f, plan.L);
  const uint64_t i = sample_index(s, rng);
  SearchResult r;
  if (f.query(i)) r.index = i;
  r.cost.charge("grover", f.ledger().total() - before);
  r.cost.wall_ns = timer.elapsed_ns();
  return r;
}

SearchResult grover_unknown_t(BooleanOracle& f, uint64_t n, Rng& rng) {
  check_domain(f, n);
  WallTimer timer;
  const int64_t before = f.ledger().total();
  SearchResult r;
  const int stages = unknown_t_stages(n);
  for (int j = 1; j <= stages && !r.index; ++j) {
    StateVector s = evolve(f, int64_t{1} << (j - 1));
    const uint64_t i = sample_index(s, rng);
    if (f.query(i)) r.index = i;
  }
  r.cost.charge("grover", f.ledger().total() - before);
  r.cost.wall_ns = timer.elapsed_ns();
  return r;
}

TrialStats grover_known_t_trials(BooleanOracle& f, uint64_t n, uint64_t t,
                                 int64_t trials, Rng& rng) {
  check_domain(f, n);
  const GroverPlan plan = GroverPlan::make(n, t);
  const int64_t before = f.ledger().total();
  StateVector s = evolve(f, plan.L);
  // Cumulative distribution shared by all trials.
  std::vector<double> cdf(s.size());
  double acc = 0.0;
  for (size_t i = 0; i < s.size(); ++i) cdf[i] = acc += s.probability(i);
  TrialStats st;
  st.trials = trials;
  for (int64_t k = 0; k < trials; ++k) {
    const double u = uniform01(rng) * acc;
    size_t i = std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
    if (i >= s.size()) i = s.size() - 1;
    if (f.query(i)) ++st.successes;
  }
  // The evolution ran once; charge the remaining trials' iterations.
  f.charge_superposed(plan.L * (trials - 1));
  st.cost.charge("grover", f.ledger().total() - before);
  return st;
}

std::vector<StateVector> grover_trajectory(BooleanOracle& f, uint64_t n,
                                           int64_t iterations) {
  check_domain(f, n);
  std::vector<StateVector> out;
  StateVector s = uniform_live_state(n);
  out.push_back(s);
  for (int64_t k = 0; k < iterations; ++k) {
    grover_iterate(s, f);
    out.push_back(s);
  }
  return out;
}

AmplifyResult amplitude_amplify(const DenseUnitary& A,
                                const std::function<bool(uint64_t)>& good,
                                std::optional<double> p, Rng& rng) {
  WallTimer timer;
  AmplifyResult r;
  const int q = A.num_qubits();
  StateVector psi(q, 0);
  psi = StateVector(A.apply(psi.amps()), false);
  if (!p) {
    double acc = 0.0;
    for (uint64_t i = 0; i < psi.size(); ++i)
      if (good(i)) acc += psi.probability(i);
    p = acc;
    r.cost.privileged_scan = true;
  }
  if (!(*p > 0.0 && *p <= 1.0 + kTol)) throw ValidationError("p must lie in (0, 1]");
  r.p = std::min(*p, 1.0);
  r.L = iterations_for_angle(std::asin(std::sqrt(r.p)));
  const DenseUnitary A_dag = A.adjoint();
  std::vector<int> all(q);
  for (int j = 0; j < q; ++j) all[j] = j;
  for (int64_t k = 0; k < r.L; ++k) {
    auto& a = psi.mutable_amps();
    for (uint64_t i = 0; i < psi.size(); ++i)
      if (good(i)) a[i] = -a[i];
    r.cost.charge("oracle", 1);
    // A R A^-1 with R = diag(1, -1, ..., -1).
    apply_unitary(psi, A_dag, all);
    auto& b = psi.mutable_amps();
    for (uint64_t i = 1; i < psi.size(); ++i) b[i] = -b[i];
    apply_unitary(psi, A, all);
  }
  const uint64_t i = sample_index(psi, rng);
  r.cost.charge("verify", 1);
  if (good(i)) r.index = i;
  r.cost.wall_ns = timer.elapsed_ns();
  return r;
}

}  // namespace qlab
